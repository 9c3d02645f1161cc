#include "semiprob/semigroup.hpp"

#include <algorithm>

#include "semiprob/errors.hpp"

namespace semiprob {

FiniteSemigroup FiniteSemigroup::from_table(
    int n, const std::vector<std::vector<int>>& rows) {
  if (n <= 0) {
    throw Error("semigroup order must be positive, got " + std::to_string(n));
  }
  if (static_cast<int>(rows.size()) != n) {
    throw SizeMismatchError(n, static_cast<int>(rows.size()));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n) {
      throw SizeMismatchError(n, static_cast<int>(rows[x].size()));
    }
    flat.insert(flat.end(), rows[x].begin(), rows[x].end());
  }
  return from_flat(n, std::move(flat));
}

FiniteSemigroup FiniteSemigroup::from_flat(int n, std::vector<int> flat) {
  if (n <= 0) {
    throw Error("semigroup order must be positive, got " + std::to_string(n));
  }
  if (static_cast<int>(flat.size()) != n * n) {
    throw SizeMismatchError(n * n, static_cast<int>(flat.size()));
  }
  // Range first, then associativity.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int v = flat[x * n + y];
      if (v < 0 || v >= n) {
        throw BadEntryError(x, y, v);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = flat[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
          throw NotAssociativeError(a, b, c);
        }
      }
    }
  }
  return FiniteSemigroup(n, std::move(flat));
}

std::vector<std::vector<int>> FiniteSemigroup::rows() const {
  std::vector<std::vector<int>> out(order_);
  for (int x = 0; x < order_; ++x) {
    out[x].assign(table_.begin() + x * order_, table_.begin() + (x + 1) * order_);
  }
  return out;
}

ElementSet ElementSet::of(int universe, std::initializer_list<int> members) {
  ElementSet s(universe);
  for (int e : members) {
    s.insert(e);
  }
  return s;
}

ElementSet ElementSet::from_members(int universe,
                                    const std::vector<int>& members) {
  ElementSet s(universe);
  for (int e : members) {
    s.insert(e);
  }
  return s;
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (int e = 0; e < universe; ++e) {
    s.insert(e);
  }
  return s;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int e = 0; e < universe(); ++e) {
    if (bits_[e]) {
      out.push_back(e);
    }
  }
  return out;
}

ElementSet power_set(const FiniteSemigroup& s, int n) {
  if (n < 1) {
    throw Error("power_set exponent must be >= 1, got " + std::to_string(n));
  }
  const int order = s.order();
  ElementSet current = ElementSet::full(order);
  for (int step = 1; step < n; ++step) {
    ElementSet next(order);
    for (int x = 0; x < order; ++x) {
      for (int y : current.members()) {
        next.insert(s.product(x, y));
      }
    }
    if (next == current) {
      break;  // fixpoint; all later powers coincide
    }
    current = next;
  }
  return current;
}

ElementSet idempotents(const FiniteSemigroup& s) {
  ElementSet out(s.order());
  for (int e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) {
      out.insert(e);
    }
  }
  return out;
}

}  // namespace semiprob

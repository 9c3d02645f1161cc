#include "semiprob/structure.hpp"

#include <vector>

#include "semiprob/congruence.hpp"

namespace semiprob {

bool is_left_cancellative(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<bool> seen(n);
  for (int x = 0; x < n; ++x) {
    seen.assign(n, false);
    for (int a = 0; a < n; ++a) {
      int xa = s.product(x, a);
      if (seen[xa]) {
        return false;
      }
      seen[xa] = true;
    }
  }
  return true;
}

bool is_left_zero(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.product(a, b) != a) {
        return false;
      }
    }
  }
  return true;
}

bool is_right_zero(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.product(a, b) != b) {
        return false;
      }
    }
  }
  return true;
}

bool is_null(const FiniteSemigroup& s) {
  const int z = s.product(0, 0);
  for (int v : s.flat_table()) {
    if (v != z) {
      return false;
    }
  }
  return true;  // constant table makes z a zero automatically
}

std::optional<int> zero_element(const FiniteSemigroup& s) {
  for (int z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (int a = 0; a < s.order(); ++a) {
      if (s.product(a, z) != z || s.product(z, a) != z) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

bool is_nilpotent(const FiniteSemigroup& s) {
  auto zero = zero_element(s);
  if (!zero.has_value()) {
    return false;
  }
  // The power chain is decreasing and stable within |A| steps.
  ElementSet limit = power_set(s, s.order());
  return limit.count() == 1 && limit.contains(*zero);
}

std::optional<LeftZeroByNullDecomposition> decompose_left_zero_by_null(
    const FiniteSemigroup& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    const int first = s.product(a, 0);
    for (int b = 1; b < n; ++b) {
      if (s.product(a, b) != first) {
        return std::nullopt;  // row not constant
      }
    }
  }
  LeftZeroByNullDecomposition d{idempotents(s), std::vector<int>(n)};
  for (int a = 0; a < n; ++a) {
    d.phi_map[a] = s.product(a, a);
  }
  return d;
}

bool is_ideal_extension_left_zero_by_nilpotent(const FiniteSemigroup& s) {
  ElementSet e = idempotents(s);
  if (e.empty()) {
    return false;
  }
  const std::vector<int> members = e.members();
  for (int x : members) {
    for (int y : members) {
      if (s.product(x, y) != x) {
        return false;  // E(A) not left zero
      }
    }
  }
  for (int i : members) {
    for (int a = 0; a < s.order(); ++a) {
      if (!e.contains(s.product(a, i)) || !e.contains(s.product(i, a))) {
        return false;  // E(A) not an ideal
      }
    }
  }
  return is_nilpotent(rees_quotient(s, Ideal::checked(s, e)));
}

}  // namespace semiprob

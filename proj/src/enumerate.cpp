#include "semiprob/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "semiprob/errors.hpp"

namespace semiprob {

namespace {

constexpr int kMaxEnumerationOrder = 5;
constexpr int kMaxIsomorphismOrder = 8;

// Depth-first cell fill in row-major order. A triple (a,b,c) is checked the
// moment the last of its four lookups becomes defined; the four cases below
// classify which lookup the just-placed cell (x,y) can be.
class TableSearch {
 public:
  explicit TableSearch(int n)
      : n_(n), table_(static_cast<size_t>(n) * n, -1), occupants_(n) {}

  // Places the given prefix of cells (in row-major order) and enumerates all
  // completions, appending full tables to `out`. Returns immediately if the
  // prefix is already inconsistent.
  void run(const std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (!place(static_cast<int>(i), prefix[i])) {
        while (i-- > 0) {
          unplace(static_cast<int>(i));
        }
        return;
      }
    }
    fill(static_cast<int>(prefix.size()), out);
    for (size_t i = prefix.size(); i-- > 0;) {
      unplace(static_cast<int>(i));
    }
  }

 private:
  int at(int x, int y) const { return table_[x * n_ + y]; }

  bool place(int pos, int v) {
    table_[pos] = v;
    occupants_[v].push_back(pos);
    return consistent(pos / n_, pos % n_, v);
  }

  void unplace(int pos) {
    occupants_[table_[pos]].pop_back();
    table_[pos] = -1;
  }

  bool consistent(int x, int y, int v) const {
    // (a,b) = (x,y): triples (x, y, c).
    for (int c = 0; c < n_; ++c) {
      const int bc = at(y, c);
      if (bc < 0) continue;
      const int lhs = at(v, c);
      if (lhs < 0) continue;
      const int rhs = at(x, bc);
      if (rhs >= 0 && lhs != rhs) return false;
    }
    // (b,c) = (x,y): triples (a, x, y).
    for (int a = 0; a < n_; ++a) {
      const int ab = at(a, x);
      if (ab < 0) continue;
      const int lhs = at(ab, y);
      if (lhs < 0) continue;
      const int rhs = at(a, v);
      if (rhs >= 0 && lhs != rhs) return false;
    }
    // (ab, c) = (x,y): triples (a, b, y) with table[a][b] = x.
    for (int cell : occupants_[x]) {
      const int a = cell / n_, b = cell % n_;
      const int bc = at(b, y);
      if (bc < 0) continue;
      const int rhs = at(a, bc);
      if (rhs >= 0 && v != rhs) return false;
    }
    // (a, bc) = (x,y): triples (x, b, c) with table[b][c] = y.
    for (int cell : occupants_[y]) {
      const int b = cell / n_, c = cell % n_;
      const int ab = at(x, b);
      if (ab < 0) continue;
      const int lhs = at(ab, c);
      if (lhs >= 0 && lhs != v) return false;
    }
    return true;
  }

  void fill(int pos, std::vector<std::vector<int>>& out) {
    if (pos == n_ * n_) {
      out.push_back(table_);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (place(pos, v)) {
        fill(pos + 1, out);
      }
      unplace(pos);
    }
  }

  int n_;
  std::vector<int> table_;
  std::vector<std::vector<int>> occupants_;  // cells currently holding value v
};

}  // namespace

std::vector<std::vector<int>> enumerate_tables(int n, int jobs) {
  if (n < 1) {
    throw Error("enumeration order must be positive, got " + std::to_string(n));
  }
  if (n > kMaxEnumerationOrder) {
    throw TooLargeError(n, kMaxEnumerationOrder, "enumerate_tables");
  }
  if (jobs < 1) {
    jobs = 1;
  }

  // Prefixes over the first two cells; singleton tables have one cell total.
  const int prefix_len = std::min(2, n * n);
  std::vector<std::vector<int>> prefixes;
  for (int v0 = 0; v0 < n; ++v0) {
    if (prefix_len == 1) {
      prefixes.push_back({v0});
      continue;
    }
    for (int v1 = 0; v1 < n; ++v1) {
      prefixes.push_back({v0, v1});
    }
  }

  std::vector<std::vector<std::vector<int>>> results(prefixes.size());
  const int workers =
      std::min<int>(jobs, static_cast<int>(prefixes.size()));
  if (workers <= 1) {
    TableSearch search(n);
    for (size_t i = 0; i < prefixes.size(); ++i) {
      search.run(prefixes[i], results[i]);
    }
  } else {
    std::atomic<size_t> next_task{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        TableSearch search(n);
        while (true) {
          const size_t task = next_task.fetch_add(1);
          if (task >= prefixes.size()) {
            return;
          }
          search.run(prefixes[task], results[task]);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  std::vector<std::vector<int>> merged;
  for (auto& part : results) {
    for (auto& table : part) {
      merged.push_back(std::move(table));
    }
  }
  return merged;
}

std::vector<FiniteSemigroup> enumerate_semigroups(int n, int jobs) {
  std::vector<FiniteSemigroup> out;
  for (auto& table : enumerate_tables(n, jobs)) {
    out.push_back(FiniteSemigroup::from_flat(n, std::move(table)));
  }
  return out;
}

long long naive_associative_count(int n) {
  constexpr int kMaxNaiveOrder = 3;
  if (n < 1) {
    throw Error("enumeration order must be positive, got " + std::to_string(n));
  }
  if (n > kMaxNaiveOrder) {
    throw TooLargeError(n, kMaxNaiveOrder, "naive_associative_count");
  }
  const int cells = n * n;
  std::vector<int> t(cells, 0);
  long long count = 0;
  while (true) {
    bool associative = true;
    for (int a = 0; a < n && associative; ++a) {
      for (int b = 0; b < n && associative; ++b) {
        for (int c = 0; c < n; ++c) {
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
            associative = false;
            break;
          }
        }
      }
    }
    if (associative) {
      ++count;
    }
    int pos = cells - 1;
    while (pos >= 0 && t[pos] == n - 1) {
      t[pos] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++t[pos];
  }
  return count;
}

namespace {

bool extend_isomorphism(const FiniteSemigroup& s1, const FiniteSemigroup& s2,
                        std::vector<int>& image, std::vector<bool>& used,
                        int next) {
  const int n = s1.order();
  if (next == n) {
    return true;
  }
  const bool next_idem = s1.product(next, next) == next;
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate]) {
      continue;
    }
    if ((s2.product(candidate, candidate) == candidate) != next_idem) {
      continue;
    }
    image[next] = candidate;
    used[candidate] = true;
    bool ok = true;
    for (int u = 0; u <= next && ok; ++u) {
      for (int w = 0; w <= next; ++w) {
        const int p = s1.product(u, w);
        if (image[p] >= 0
            && s2.product(image[u], image[w]) != image[p]) {
          ok = false;
          break;
        }
        const int q = s1.product(w, u);
        if (image[q] >= 0
            && s2.product(image[w], image[u]) != image[q]) {
          ok = false;
          break;
        }
      }
    }
    if (ok && extend_isomorphism(s1, s2, image, used, next + 1)) {
      return true;
    }
    image[next] = -1;
    used[candidate] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& s1,
                                                 const FiniteSemigroup& s2) {
  if (s1.order() != s2.order()) {
    return std::nullopt;
  }
  const int n = s1.order();
  if (n > kMaxIsomorphismOrder) {
    throw TooLargeError(n, kMaxIsomorphismOrder, "find_isomorphism");
  }
  if (idempotents(s1).count() != idempotents(s2).count()) {
    return std::nullopt;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  if (extend_isomorphism(s1, s2, image, used, 0)) {
    return image;
  }
  return std::nullopt;
}

bool are_isomorphic(const FiniteSemigroup& s1, const FiniteSemigroup& s2) {
  return find_isomorphism(s1, s2).has_value();
}

Partition brute_theta(const FiniteSemigroup& s) {
  const int n = s.order();
  const auto related = [&](int a, int b) {
    for (int x = 0; x < n; ++x) {
      if (s.product(x, a) != s.product(x, b)) {
        return false;
      }
    }
    return true;
  };
  std::vector<int> labels(n, -1);
  int next_label = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) {
      if (related(b, a)) {
        labels[a] = labels[b];
        break;
      }
    }
    if (labels[a] == -1) {
      labels[a] = next_label++;
    }
  }
  return Partition::from_labels(labels);
}

}  // namespace semiprob

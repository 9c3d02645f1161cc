#include "semiprob/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "semiprob/errors.hpp"

namespace semiprob {

Partition Partition::from_labels(const std::vector<int>& labels) {
  std::unordered_map<int, int> relabel;
  std::vector<int> normalized(labels.size());
  int next = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(labels[i], next);
    if (inserted) {
      ++next;
    }
    normalized[i] = it->second;
  }
  return Partition(std::move(normalized), next);
}

Partition Partition::identity(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i;
  }
  return Partition(std::move(labels), n);
}

Partition Partition::universal(int n) {
  return Partition(std::vector<int>(n, 0), n > 0 ? 1 : 0);
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int e : blocks[b]) {
      if (e < 0 || e >= n) {
        throw Error("block member out of range: " + std::to_string(e));
      }
      if (labels[e] != -1) {
        throw Error("element in two blocks: " + std::to_string(e));
      }
      labels[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < n; ++e) {
    if (labels[e] == -1) {
      throw Error("element in no block: " + std::to_string(e));
    }
  }
  return from_labels(labels);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int e = 0; e < size(); ++e) {
    out[labels_[e]].push_back(e);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) {
    throw SizeMismatchError(size(), coarser.size());
  }
  // Each of our blocks must have a constant coarser-label.
  std::vector<int> image(num_blocks_, -1);
  for (int e = 0; e < size(); ++e) {
    int& img = image[labels_[e]];
    if (img == -1) {
      img = coarser.labels_[e];
    } else if (img != coarser.labels_[e]) {
      return false;
    }
  }
  return true;
}

std::vector<int> class_sizes(const Partition& p) {
  std::vector<int> sizes(p.num_blocks(), 0);
  for (int e = 0; e < p.size(); ++e) {
    ++sizes[p.block_of(e)];
  }
  return sizes;
}

Rational probability_of_partition(const Partition& p) {
  if (p.size() == 0) {
    throw EmptyPartitionError();
  }
  BigInt sum_sq = 0;
  BigInt sum = 0;
  for (int t : class_sizes(p)) {
    sum_sq += BigInt(t) * t;
    sum += t;
  }
  return Rational(sum_sq, sum * sum);
}

Rational probability_of_relation(int n,
                                 const std::vector<std::pair<int, int>>& pairs) {
  if (n <= 0) {
    throw Error("relation carrier must be non-empty");
  }
  std::vector<std::pair<int, int>> unique = pairs;
  for (const auto& [a, b] : unique) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw PairOutOfRangeError(a, b);
    }
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return Rational(BigInt(unique.size()), BigInt(n) * n);
}

std::vector<std::pair<int, int>> pairs_of_partition(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.same_block(a, b)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

Rational commuting_probability(const FiniteSemigroup& s) {
  const int n = s.order();
  long long commuting = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (s.product(a, b) == s.product(b, a)) {
        ++commuting;
      }
    }
  }
  return Rational(BigInt(commuting), BigInt(n) * n);
}

namespace {

void visit_growth_strings(std::vector<int>& labels, int pos, int max_used,
                          const std::function<void(const Partition&)>& visit) {
  const int n = static_cast<int>(labels.size());
  if (pos == n) {
    visit(Partition::from_labels(labels));
    return;
  }
  for (int v = 0; v <= max_used + 1; ++v) {
    labels[pos] = v;
    visit_growth_strings(labels, pos + 1, std::max(max_used, v), visit);
  }
}

}  // namespace

void for_each_partition(int n,
                        const std::function<void(const Partition&)>& visit) {
  if (n <= 0) {
    throw Error("partition carrier must be non-empty");
  }
  std::vector<int> labels(n, 0);
  visit_growth_strings(labels, 1, 0, visit);
}

}  // namespace semiprob

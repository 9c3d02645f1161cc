#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "semiprob/rational.hpp"
#include "semiprob/semigroup.hpp"

namespace semiprob {

// Equivalence relation on {0..n-1}, stored as one block label per element.
// Labels are normalized so that they appear in increasing order of first
// occurrence (equivalently, of the least member of each block); two
// partitions are equal iff their label vectors compare equal.
class Partition {
 public:
  // Normalizes an arbitrary labeling (labels may be any integers).
  static Partition from_labels(const std::vector<int>& labels);
  static Partition identity(int n);
  static Partition universal(int n);
  // Blocks must cover {0..n-1} exactly once.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_blocks() const { return num_blocks_; }
  int block_of(int e) const { return labels_[e]; }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<std::vector<int>> blocks() const;
  bool same_block(int a, int b) const { return labels_[a] == labels_[b]; }
  bool is_identity() const { return num_blocks_ == size(); }
  bool is_universal() const { return num_blocks_ == 1; }

  // True iff every block of this partition lies inside a block of `coarser`
  // (this relation, as a pair set, is contained in the coarser one).
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const = default;

 private:
  Partition(std::vector<int> labels, int num_blocks)
      : labels_(std::move(labels)), num_blocks_(num_blocks) {}

  std::vector<int> labels_;
  int num_blocks_;
};

// Block sizes t_i, ordered by block label.
std::vector<int> class_sizes(const Partition& p);

// (t_1^2 + ... + t_m^2) / (t_1 + ... + t_m)^2, in lowest terms.
Rational probability_of_partition(const Partition& p);

// |pairs| / n^2 under the uniform distribution on A x A. Duplicate pairs
// count once.
Rational probability_of_relation(int n,
                                 const std::vector<std::pair<int, int>>& pairs);

// All ordered pairs (a, b) with a, b in the same block.
std::vector<std::pair<int, int>> pairs_of_partition(const Partition& p);

// |{(a,b) : ab = ba}| / n^2.
Rational commuting_probability(const FiniteSemigroup& s);

// Visits every partition of {0..n-1} exactly once, in restricted-growth
// lexicographic order (universal partition first, identity last).
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

}  // namespace semiprob

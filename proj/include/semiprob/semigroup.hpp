#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

namespace semiprob {

// A finite semigroup given by its full Cayley table. Elements are the dense
// indices 0..n-1 and table(x, a) = x * a. Construction validates entry range
// and associativity (by exhaustive triple scan, first lexicographic witness
// reported); instances are immutable afterwards.
class FiniteSemigroup {
 public:
  static FiniteSemigroup from_table(int n,
                                    const std::vector<std::vector<int>>& rows);
  // Same validation, row-major flat table.
  static FiniteSemigroup from_flat(int n, std::vector<int> flat);

  int order() const { return order_; }

  int product(int a, int b) const {
    assert(a >= 0 && a < order_ && b >= 0 && b < order_);
    return table_[a * order_ + b];
  }

  const std::vector<int>& flat_table() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const FiniteSemigroup& other) const = default;

 private:
  FiniteSemigroup(int n, std::vector<int> flat)
      : order_(n), table_(std::move(flat)) {}

  int order_;
  std::vector<int> table_;
};

// Subset of the element range of a fixed ambient semigroup order.
class ElementSet {
 public:
  explicit ElementSet(int universe) : bits_(universe, false), count_(0) {}
  static ElementSet of(int universe, std::initializer_list<int> members);
  static ElementSet from_members(int universe, const std::vector<int>& members);
  static ElementSet full(int universe);

  int universe() const { return static_cast<int>(bits_.size()); }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int e) const {
    assert(e >= 0 && e < universe());
    return bits_[e];
  }

  void insert(int e) {
    assert(e >= 0 && e < universe());
    if (!bits_[e]) {
      bits_[e] = true;
      ++count_;
    }
  }

  std::vector<int> members() const;  // ascending

  bool operator==(const ElementSet& other) const = default;

 private:
  std::vector<bool> bits_;
  int count_;
};

// A^n, the set of all n-fold products. A^1 = A and A^(n+1) = A * A^n; the
// chain is decreasing, so the loop stops at the fixpoint even for large n.
ElementSet power_set(const FiniteSemigroup& s, int n);

// { e : e*e = e }
ElementSet idempotents(const FiniteSemigroup& s);

}  // namespace semiprob

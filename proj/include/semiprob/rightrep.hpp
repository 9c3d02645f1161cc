#pragma once

#include <vector>

#include "semiprob/partition.hpp"
#include "semiprob/rational.hpp"
#include "semiprob/semigroup.hpp"

namespace semiprob {

// The inner right translation x -> x*a, as an image table.
struct TranslationMap {
  std::vector<int> images;  // images[x] = x*a

  bool operator==(const TranslationMap& other) const = default;
};

// Strictly row-monomial 0/1 matrix: exactly one 1 per row. Row x carries its
// 1 in column x*a, so the matrix is stored as a row -> column table and the
// Boolean product collapses to composition.
class RightMatrix {
 public:
  static RightMatrix from_row_columns(std::vector<int> row_to_col);

  int dim() const { return static_cast<int>(row_to_col_.size()); }
  int column_of_row(int x) const { return row_to_col_[x]; }
  const std::vector<int>& row_columns() const { return row_to_col_; }

  std::vector<std::vector<int>> dense() const;  // 0/1 entries, for display

  bool operator==(const RightMatrix& other) const = default;

 private:
  explicit RightMatrix(std::vector<int> cols) : row_to_col_(std::move(cols)) {}

  std::vector<int> row_to_col_;
};

TranslationMap rho(const FiniteSemigroup& s, int a);

// bits[x][y] = 1 iff x*a = y.
RightMatrix right_matrix(const FiniteSemigroup& s, int a);

// Boolean semiring product; row-monomiality makes it a composition.
RightMatrix matrix_product(const RightMatrix& m1, const RightMatrix& m2);

// Kernel of the right regular representation: a ~ b iff x*a = x*b for all x.
// Computed by grouping identical table columns (the O(n^3) direct-definition
// oracle lives in the enumeration module).
Partition theta(const FiniteSemigroup& s);

Rational p_theta(const FiniteSemigroup& s);

bool is_left_reductive(const FiniteSemigroup& s);

}  // namespace semiprob

#include "semiprob/rightrep.hpp"

#include <map>

#include "semiprob/errors.hpp"

namespace semiprob {

RightMatrix RightMatrix::from_row_columns(std::vector<int> row_to_col) {
  const int n = static_cast<int>(row_to_col.size());
  for (int c : row_to_col) {
    if (c < 0 || c >= n) {
      throw Error("matrix column index out of range: " + std::to_string(c));
    }
  }
  return RightMatrix(std::move(row_to_col));
}

std::vector<std::vector<int>> RightMatrix::dense() const {
  std::vector<std::vector<int>> out(dim(), std::vector<int>(dim(), 0));
  for (int x = 0; x < dim(); ++x) {
    out[x][row_to_col_[x]] = 1;
  }
  return out;
}

TranslationMap rho(const FiniteSemigroup& s, int a) {
  TranslationMap t;
  t.images.resize(s.order());
  for (int x = 0; x < s.order(); ++x) {
    t.images[x] = s.product(x, a);
  }
  return t;
}

RightMatrix right_matrix(const FiniteSemigroup& s, int a) {
  return RightMatrix::from_row_columns(rho(s, a).images);
}

RightMatrix matrix_product(const RightMatrix& m1, const RightMatrix& m2) {
  if (m1.dim() != m2.dim()) {
    throw DimensionMismatchError(m1.dim(), m2.dim());
  }
  std::vector<int> cols(m1.dim());
  for (int x = 0; x < m1.dim(); ++x) {
    cols[x] = m2.column_of_row(m1.column_of_row(x));
  }
  return RightMatrix::from_row_columns(std::move(cols));
}

Partition theta(const FiniteSemigroup& s) {
  const int n = s.order();
  // Group elements by their table column (x*a for all x).
  std::map<std::vector<int>, int> column_to_block;
  std::vector<int> labels(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> column(n);
    for (int x = 0; x < n; ++x) {
      column[x] = s.product(x, a);
    }
    auto [it, inserted] =
        column_to_block.try_emplace(std::move(column),
                                    static_cast<int>(column_to_block.size()));
    labels[a] = it->second;
  }
  return Partition::from_labels(labels);
}

Rational p_theta(const FiniteSemigroup& s) {
  return probability_of_partition(theta(s));
}

bool is_left_reductive(const FiniteSemigroup& s) {
  return theta(s).is_identity();
}

}  // namespace semiprob

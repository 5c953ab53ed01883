#pragma once

#include <span>
#include <vector>

#include "nlc/polynomial.hpp"

namespace nlc {

/// Matrix of homogeneous polynomials with a grading certificate: entry (i,j)
/// is zero or homogeneous of degree col_degrees[j] - row_degrees[i].
class PolyMatrix {
 public:
  PolyMatrix(PrimeField field, std::vector<int> row_degrees, std::vector<int> col_degrees);

  int rows() const { return static_cast<int>(row_degrees_.size()); }
  int cols() const { return static_cast<int>(col_degrees_.size()); }
  const PrimeField& field() const { return field_; }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const Polynomial& at(int i, int j) const { return entries_[std::size_t(i) * cols() + j]; }
  /// Throws ArgumentError if p violates the grading certificate.
  void set(int i, int j, Polynomial p);

  /// Copy with one extra column of the given degree.
  PolyMatrix with_column(std::span<const Polynomial> column, int degree) const;

  /// Determinant of the submatrix on the given rows and columns, by Laplace
  /// expansion along its first row.
  Polynomial minor(std::span<const int> rows, std::span<const int> cols) const;
  Polynomial determinant() const;

 private:
  PrimeField field_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<Polynomial> entries_;
};

/// All r x r minors, row subsets outer and column subsets inner, both in
/// lexicographic order.
std::vector<Polynomial> all_minors(const PolyMatrix& m, int r);

}  // namespace nlc

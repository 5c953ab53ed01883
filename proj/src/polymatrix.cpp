#include "nlc/polymatrix.hpp"

#include <numeric>

#include "nlc/errors.hpp"

namespace nlc {

PolyMatrix::PolyMatrix(PrimeField field, std::vector<int> row_degrees,
                       std::vector<int> col_degrees)
    : field_(field),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size(), Polynomial(field)) {}

void PolyMatrix::set(int i, int j, Polynomial p) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) throw ArgumentError("matrix index out of range");
  if (!(p.field() == field_)) throw ArgumentError("entry over a different prime");
  if (!p.is_zero()) {
    int expected = col_degrees_[j] - row_degrees_[i];
    if (!p.is_homogeneous() || p.degree() != expected) {
      throw ArgumentError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") must be homogeneous of degree " + std::to_string(expected));
    }
  }
  entries_[std::size_t(i) * cols() + j] = std::move(p);
}

PolyMatrix PolyMatrix::with_column(std::span<const Polynomial> column, int degree) const {
  if (static_cast<int>(column.size()) != rows()) throw ArgumentError("column length mismatch");
  std::vector<int> cdeg = col_degrees_;
  cdeg.push_back(degree);
  PolyMatrix out(field_, row_degrees_, cdeg);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out.set(i, j, at(i, j));
    out.set(i, cols(), column[i]);
  }
  return out;
}

Polynomial PolyMatrix::minor(std::span<const int> rs, std::span<const int> cs) const {
  if (rs.size() != cs.size()) throw ArgumentError("minor must be square");
  if (rs.empty()) return Polynomial::constant(field_, 1);
  if (rs.size() == 1) return at(rs[0], cs[0]);
  std::vector<int> sub_rows(rs.begin() + 1, rs.end());
  std::vector<int> sub_cols;
  Polynomial det(field_);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Polynomial& entry = at(rs[0], cs[k]);
    if (entry.is_zero()) continue;
    sub_cols.clear();
    for (std::size_t l = 0; l < cs.size(); ++l) {
      if (l != k) sub_cols.push_back(cs[l]);
    }
    Polynomial term = entry * minor(sub_rows, sub_cols);
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

Polynomial PolyMatrix::determinant() const {
  if (rows() != cols()) throw ArgumentError("determinant of a non-square matrix");
  std::vector<int> idx(rows());
  std::iota(idx.begin(), idx.end(), 0);
  return minor(idx, idx);
}

namespace {

void subsets(int n, int r, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Polynomial> all_minors(const PolyMatrix& m, int r) {
  if (r <= 0 || r > std::min(m.rows(), m.cols())) {
    throw ArgumentError("minor size " + std::to_string(r) + " out of range");
  }
  std::vector<std::vector<int>> row_sets, col_sets;
  std::vector<int> cur;
  subsets(m.rows(), r, 0, cur, row_sets);
  subsets(m.cols(), r, 0, cur, col_sets);
  std::vector<Polynomial> out;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) out.push_back(m.minor(rs, cs));
  }
  return out;
}

}  // namespace nlc

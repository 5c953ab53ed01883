#include "nlc/linalg.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nlc/errors.hpp"

namespace nlc {

void Matrix::append_row(std::span<const Coeff> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw ArgumentError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::truncate_rows(int n) {
  rows_ = std::min(rows_, n);
  data_.resize(std::size_t(rows_) * cols_);
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

namespace {

// Moves a row with a nonzero entry in `col` to position r and normalizes it.
// Returns false when the column has no pivot among rows >= r.
bool place_pivot(Matrix& m, const PrimeField& field, int r, int col) {
  int found = -1;
  for (int i = r; i < m.rows(); ++i) {
    if (m.at(i, col) != 0) {
      found = i;
      break;
    }
  }
  if (found < 0) return false;
  m.swap_rows(found, r);
  Coeff inv = field.inv(m.at(r, col));
  auto pivot = m.row(r);
  for (int j = col; j < m.cols(); ++j) pivot[j] = field.mul(pivot[j], inv);
  return true;
}

inline void eliminate_row(std::span<Coeff> target, std::span<const Coeff> pivot, int col,
                          std::uint64_t p) {
  Coeff c = target[col];
  if (c == 0) return;
  const std::uint64_t factor = p - c;
  const int n = static_cast<int>(target.size());
  for (int j = col; j < n; ++j) {
    if (pivot[j] != 0) target[j] = static_cast<Coeff>((target[j] + factor * pivot[j]) % p);
  }
}

}  // namespace

std::vector<int> rref_serial(Matrix& m, const PrimeField& field) {
  std::vector<int> pivots;
  const std::uint64_t p = field.prime();
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    if (!place_pivot(m, field, r, col)) continue;
    auto pivot = m.row(r);
    for (int i = 0; i < m.rows(); ++i) {
      if (i != r) eliminate_row(m.row(i), pivot, col, p);
    }
    pivots.push_back(col);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::vector<int> rref_parallel(Matrix& m, const PrimeField& field) {
  std::vector<int> pivots;
  const std::uint64_t p = field.prime();
  const int rows = m.rows();
  int r = 0;
  for (int col = 0; col < m.cols() && r < rows; ++col) {
    if (!place_pivot(m, field, r, col)) continue;
    std::span<const Coeff> pivot = m.row(r);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i) {
      if (i != r) eliminate_row(m.row(i), pivot, col, p);
    }
    pivots.push_back(col);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::vector<int> rref(Matrix& m, const PrimeField& field, RrefKernel kernel) {
  if (kernel == RrefKernel::kAuto) {
    bool large = static_cast<long>(m.rows()) * m.cols() >= (1L << 15);
#ifdef _OPENMP
    kernel = large && omp_get_max_threads() > 1 && omp_get_num_procs() > 1 && !omp_in_parallel()
                 ? RrefKernel::kParallel
                 : RrefKernel::kSerial;
#else
    (void)large;
    kernel = RrefKernel::kSerial;
#endif
  }
  return kernel == RrefKernel::kParallel ? rref_parallel(m, field) : rref_serial(m, field);
}

int rank(Matrix m, const PrimeField& field) { return static_cast<int>(rref(m, field).size()); }

Matrix nullspace(const Matrix& m, const PrimeField& field) {
  Matrix reduced = m;
  std::vector<int> pivots = rref(reduced, field);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix kernel(0, m.cols());
  std::vector<Coeff> v(m.cols());
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = field.neg(reduced.at(static_cast<int>(k), free));
    }
    kernel.append_row(v);
  }
  return kernel;
}

Matrix left_kernel(const Matrix& m, const PrimeField& field) {
  return nullspace(m.transposed(), field);
}

GradedSubspace::GradedSubspace(PrimeField field, int degree)
    : field_(field), degree_(degree), basis_(0, dim_R(degree)) {
  if (degree < 0) throw ArgumentError("negative degree");
}

GradedSubspace GradedSubspace::from_rows(PrimeField field, int degree, Matrix rows) {
  GradedSubspace s(field, degree);
  if (rows.rows() == 0) return s;
  if (rows.cols() != dim_R(degree)) throw ArgumentError("row length does not match dim R_n");
  s.pivots_ = rref(rows, field);
  s.basis_ = std::move(rows);
  return s;
}

GradedSubspace GradedSubspace::from_polys(std::span<const Polynomial> polys, int degree,
                                          PrimeField field) {
  Matrix rows(0, dim_R(degree));
  for (const Polynomial& p : polys) {
    if (!(p.field() == field)) throw ArgumentError("polynomial over a different prime");
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() != degree) {
      throw ArgumentError("polynomial " + p.to_string() + " is not homogeneous of degree " +
                          std::to_string(degree));
    }
    rows.append_row(to_dense(p, degree));
  }
  return from_rows(field, degree, std::move(rows));
}

GradedSubspace GradedSubspace::full(PrimeField field, int degree) {
  int n = dim_R(degree);
  Matrix id(n, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1;
  GradedSubspace s(field, degree);
  s.basis_ = std::move(id);
  s.pivots_.resize(n);
  for (int i = 0; i < n; ++i) s.pivots_[i] = i;
  return s;
}

std::vector<Polynomial> GradedSubspace::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(dim());
  for (int i = 0; i < dim(); ++i) out.push_back(from_dense(basis_.row(i), degree_, field_));
  return out;
}

void GradedSubspace::reduce(std::span<Coeff> v) const {
  const std::uint64_t p = field_.prime();
  for (int k = 0; k < dim(); ++k) {
    eliminate_row(v, basis_.row(k), pivots_[k], p);
  }
}

bool GradedSubspace::contains(std::span<const Coeff> v) const {
  if (static_cast<int>(v.size()) != ambient_dim()) throw ArgumentError("vector length mismatch");
  std::vector<Coeff> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Coeff c) { return c == 0; });
}

bool GradedSubspace::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous() || p.degree() != degree_) return false;
  return contains(to_dense(p, degree_));
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  check_compatible(other);
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

void GradedSubspace::check_compatible(const GradedSubspace& other) const {
  if (degree_ != other.degree_) throw ArgumentError("subspaces of different degrees");
  if (!(field_ == other.field_)) throw ArgumentError("subspaces over different primes");
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& other) const {
  check_compatible(other);
  Matrix stacked = basis_;
  for (int i = 0; i < other.dim(); ++i) stacked.append_row(other.basis_.row(i));
  return from_rows(field_, degree_, std::move(stacked));
}

// Zassenhaus: rows [a | a] and [b | 0]; the rows of the echelon form whose
// left half vanishes span the intersection in their right half.
GradedSubspace GradedSubspace::intersect(const GradedSubspace& other) const {
  check_compatible(other);
  const int n = ambient_dim();
  Matrix z(dim() + other.dim(), 2 * n);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < n; ++j) z.at(i, j) = z.at(i, n + j) = basis_.at(i, j);
  }
  for (int i = 0; i < other.dim(); ++i) {
    for (int j = 0; j < n; ++j) z.at(dim() + i, j) = other.basis_.at(i, j);
  }
  std::vector<int> pivots = rref(z, field_);
  Matrix rows(0, n);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] >= n) rows.append_row(z.row(static_cast<int>(k)).subspan(n));
  }
  return from_rows(field_, degree_, std::move(rows));
}

Matrix GradedSubspace::orthogonal() const {
  if (dim() == 0) return GradedSubspace::full(field_, degree_).basis();
  return nullspace(basis_, field_);
}

GradedSubspace GradedSubspace::times_monomials(int k) const {
  if (k < 0) throw ArgumentError("negative multiplier degree");
  const DegreeTable& src = degree_table(degree_);
  const DegreeTable& dst = degree_table(degree_ + k);
  const DegreeTable& mult = degree_table(k);
  Matrix rows(dim() * mult.size(), dst.size());
  int r = 0;
  for (int i = 0; i < dim(); ++i) {
    auto b = basis_.row(i);
    for (const Monomial& u : mult.monomials()) {
      auto out = rows.row(r++);
      for (int j = 0; j < src.size(); ++j) {
        if (b[j] != 0) out[dst.index(src[j] * u)] = b[j];
      }
    }
  }
  return from_rows(field_, degree_ + k, std::move(rows));
}

bool GradedSubspace::operator==(const GradedSubspace& other) const {
  return degree_ == other.degree_ && field_ == other.field_ && basis_ == other.basis_;
}

GradedSubspace subspace_from_polys(std::span<const Polynomial> polys, int degree,
                                   PrimeField field) {
  return GradedSubspace::from_polys(polys, degree, field);
}

}  // namespace nlc

namespace nlc {

std::optional<std::vector<Coeff>> solve_left(const Matrix& m, std::span<const Coeff> b,
                                             const PrimeField& field) {
  if (static_cast<int>(b.size()) != m.cols()) throw ArgumentError("right-hand side length mismatch");
  // Solve m^T c = b via the echelon form of [m^T | b].
  Matrix aug(m.cols(), m.rows() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(j, i) = m.at(i, j);
  }
  for (int j = 0; j < m.cols(); ++j) aug.at(j, m.rows()) = b[j];
  std::vector<int> pivots = rref(aug, field);
  std::vector<Coeff> c(m.rows(), 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == m.rows()) return std::nullopt;
    c[pivots[k]] = aug.at(static_cast<int>(k), m.rows());
  }
  return c;
}

}  // namespace nlc

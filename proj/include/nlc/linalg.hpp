#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nlc/field.hpp"
#include "nlc/polynomial.hpp"

namespace nlc {

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Coeff& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  Coeff at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  std::span<Coeff> row(int i) { return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)}; }
  std::span<const Coeff> row(int i) const {
    return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)};
  }

  void append_row(std::span<const Coeff> r);
  /// Keeps the first n rows.
  void truncate_rows(int n);
  void swap_rows(int a, int b);
  Matrix transposed() const;

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Coeff> data_;
};

enum class RrefKernel { kSerial, kParallel, kAuto };

/// Brings m to reduced row echelon form in place, drops zero rows and returns
/// the pivot column of each remaining row. The serial kernel is the
/// reference; the OpenMP kernel eliminates rows concurrently for each pivot
/// and produces bit-identical output. kAuto takes the parallel kernel for
/// matrices of at least 2^15 entries when more than one core and thread are
/// available outside a parallel region.
std::vector<int> rref(Matrix& m, const PrimeField& field, RrefKernel kernel = RrefKernel::kAuto);
std::vector<int> rref_serial(Matrix& m, const PrimeField& field);
std::vector<int> rref_parallel(Matrix& m, const PrimeField& field);

int rank(Matrix m, const PrimeField& field);

/// Rows form a basis of {v : m v = 0}.
Matrix nullspace(const Matrix& m, const PrimeField& field);
/// Rows form a basis of {u : u m = 0}.
Matrix left_kernel(const Matrix& m, const PrimeField& field);

/// Some c with c m = b, or nullopt when b is not in the row space of m.
std::optional<std::vector<Coeff>> solve_left(const Matrix& m, std::span<const Coeff> b,
                                             const PrimeField& field);

/// A linear subspace of R_n, stored as an RREF basis over the monomial basis
/// of R_n in descending grevlex order.
class GradedSubspace {
 public:
  GradedSubspace(PrimeField field, int degree);

  /// Row space of `rows` (any shape with dim R_n columns).
  static GradedSubspace from_rows(PrimeField field, int degree, Matrix rows);
  /// Span of homogeneous polynomials of degree n. Throws ArgumentError on a
  /// degree mismatch.
  static GradedSubspace from_polys(std::span<const Polynomial> polys, int degree, PrimeField field);
  static GradedSubspace full(PrimeField field, int degree);

  const PrimeField& field() const { return field_; }
  int degree() const { return degree_; }
  int dim() const { return basis_.rows(); }
  int ambient_dim() const { return basis_.cols(); }
  int codim() const { return ambient_dim() - dim(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<Polynomial> polynomials() const;

  bool contains(std::span<const Coeff> v) const;
  bool contains(const Polynomial& p) const;
  bool contains(const GradedSubspace& other) const;

  GradedSubspace sum(const GradedSubspace& other) const;
  GradedSubspace intersect(const GradedSubspace& other) const;

  /// Rows span the functionals vanishing on this subspace (its annihilator
  /// in the dual of R_n), in coordinates dual to the monomial basis.
  Matrix orthogonal() const;

  /// Span of {u * b : u monomial of degree k, b in this subspace} in R_{n+k}.
  GradedSubspace times_monomials(int k) const;

  bool operator==(const GradedSubspace& other) const;

 private:
  void check_compatible(const GradedSubspace& other) const;
  /// Reduces v against the basis in place.
  void reduce(std::span<Coeff> v) const;

  PrimeField field_;
  int degree_;
  Matrix basis_;
  std::vector<int> pivots_;
};

GradedSubspace subspace_from_polys(std::span<const Polynomial> polys, int degree,
                                   PrimeField field = PrimeField());

}  // namespace nlc

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nlc/linalg.hpp"
#include "nlc/polymatrix.hpp"
#include "nlc/polynomial.hpp"

namespace nlc {

/// Reduced Groebner basis (grevlex) of a homogeneous ideal, sorted by
/// ascending leading monomial with monic elements. With max_degree >= 0 the
/// computation stops after that degree, giving a truncated basis that is
/// exact for every graded piece up to max_degree.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       int max_degree = -1);

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
};

/// Multivariate division of f by an ordered divisor list: on return
/// f = sum cofactors[i] * divisors[i] + remainder and no term of the
/// remainder is divisible by a leading term of a divisor. Over a Groebner
/// basis a zero remainder is equivalent to membership.
DivisionResult normal_form_with_cofactors(const Polynomial& f,
                                          std::span<const Polynomial> divisors);

/// Hilbert series N(t)/(1-t)^d of R/I with N(1) != 0 (so d is the Krull
/// dimension), computed from a monomial ideal.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  /// Series of R/(monomials).
  static HilbertSeries of_monomial_ideal(std::vector<Monomial> monomials);

  const std::vector<long long>& numerator() const { return numerator_; }
  int krull_dimension() const { return dimension_; }
  bool is_artinian() const { return dimension_ == 0; }
  /// HF(n) of the quotient.
  long long value(int n) const;
  /// Hilbert polynomial evaluated at n (any integer).
  long long polynomial_value(int n) const;
  /// Smallest n >= 0 with HF(m) = HP(m) for all m >= n.
  int regularity_index() const;
  /// Leading coefficient times (d-1)!; the degree of the projective scheme.
  long long multiplicity() const;
  /// 1 - HP(0) for one-dimensional projective schemes (Krull dimension 2).
  long long arithmetic_genus() const;

 private:
  std::vector<long long> numerator_{1};
  int dimension_ = 4;
};

/// Homogeneous ideal in R = k[x,y,z,w]. Value type over shared immutable
/// state; the Groebner basis, Hilbert series and graded pieces are computed
/// on first use and cached behind a lock, so a warmed-up handle can be read
/// from several threads.
class Ideal {
 public:
  /// Throws ArgumentError on a non-homogeneous generator or mixed primes.
  Ideal(PrimeField field, std::vector<Polynomial> generators);
  explicit Ideal(std::vector<Polynomial> generators);

  static Ideal zero(PrimeField field);
  static Ideal unit(PrimeField field);
  /// (x, y, z, w)
  static Ideal irrelevant(PrimeField field);

  const PrimeField& field() const;
  const std::vector<Polynomial>& generators() const;
  const std::vector<Polynomial>& groebner() const;
  /// Largest degree of an element of the reduced Groebner basis (-1 if zero).
  int max_groebner_degree() const;

  GradedSubspace piece(int n) const;
  int hilbert_function(int n) const;
  const HilbertSeries& hilbert_series() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool operator==(const Ideal& other) const;

  bool is_zero() const;
  bool is_unit() const;

  /// A minimal generating set chosen among the given generators, ordered by
  /// degree.
  std::vector<Polynomial> minimal_generators() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

struct QuotientInfo {
  bool by_zero_ideal = false;  ///< J = 0, result is the whole ring
  int degrees_checked = 0;     ///< pieces computed in degrees 0..degrees_checked
};

/// (I : J) = {f : f J in I}, computed piece by piece as the kernel of
/// f -> (NF_I(f h))_h over the generators h of J. Pieces are computed up to
/// the largest Groebner degree of I, then until two consecutive degrees add
/// no new generator.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, QuotientInfo* info = nullptr);

/// I : (x,y,z,w)^infinity by iterated quotients until the reduced Groebner
/// basis stabilizes.
Ideal saturate(const Ideal& I);

GradedSubspace graded_piece(const Ideal& I, int n);
int hilbert_function(const Ideal& I, int n);

struct ArtinianInfo {
  bool artinian = false;
  int socle_degree = -1;  ///< largest n with HF(n) != 0, when artinian
};
ArtinianInfo is_artinian(const Ideal& I);

struct GenerationTest {
  bool generated = false;
  int checked_up_to = 0;
  int first_failure = -1;  ///< first degree where I_{<=m} falls short
};
/// Whether I is generated by its forms of degree <= m, decided by comparing
/// graded pieces up to max(m, regularity index, Groebner degree) + 2.
GenerationTest generated_in_degrees_leq(const Ideal& I, int m);

/// Ideal of the r x r minors. Throws ArgumentError for r <= 0 or r larger
/// than the matrix.
Ideal minors_ideal(const PolyMatrix& m, int r);

/// Cofactors g with f = sum g_i gens_i, each g_i homogeneous of degree
/// deg f - deg gens_i; nullopt when f is not in the ideal. Tries division
/// first and falls back to solving the degree-deg(f) linear system.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, std::span<const Polynomial> gens);

}  // namespace nlc

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlc/field.hpp"
#include "nlc/monomial.hpp"

namespace nlc {

struct Term {
  Monomial mono;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial in k[x,y,z,w] over a prime field. Terms are kept with
/// nonzero coefficients and strictly descending monomials.
class Polynomial {
 public:
  explicit Polynomial(PrimeField field = PrimeField()) : field_(field) {}

  static Polynomial constant(PrimeField field, std::int64_t c);
  static Polynomial variable(PrimeField field, int var);
  static Polynomial term(PrimeField field, const Monomial& m, Coeff c);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(PrimeField field, std::vector<Term> terms);

  /// Text form: `3*x^2*y - w^3 + 1`. Whitespace is ignored; integer
  /// coefficients are reduced modulo the field prime. Throws ParseError
  /// (line 1, column of the offending character).
  static Polynomial parse(std::string_view text, PrimeField field = PrimeField());

  const PrimeField& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : max_degree(); }
  bool is_homogeneous() const;
  const Term& leading() const { return terms_.front(); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  /// Leading coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;

  Polynomial derivative(int var) const;

  bool operator==(const Polynomial& other) const {
    return field_ == other.field_ && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  int max_degree() const;
  void check_field(const Polynomial& other) const;
  Polynomial combine(const Polynomial& other, bool subtract) const;

  PrimeField field_;
  std::vector<Term> terms_;
};

/// Dense coefficient vector of a degree-n homogeneous polynomial, indexed by
/// degree_table(n). Throws ArgumentError on a term of another degree.
std::vector<Coeff> to_dense(const Polynomial& p, int n);
Polynomial from_dense(std::span<const Coeff> v, int n, PrimeField field);

/// 64-bit FNV-1a of the canonical text; used as a surface fingerprint.
std::string fingerprint(const Polynomial& p);
std::string fingerprint_text(std::string_view text);

}  // namespace nlc

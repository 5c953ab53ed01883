#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nlc {

inline constexpr int kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames = {'x', 'y', 'z', 'w'};

/// Monomial x^a y^b z^c w^d in k[x,y,z,w], ordered by graded reverse
/// lexicographic order with x > y > z > w.
class Monomial {
 public:
  Monomial() = default;
  Monomial(int a, int b, int c, int d);

  static Monomial variable(int var);

  int degree() const { return degree_; }
  int operator[](int var) const { return exps_[var]; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string to_string() const;

 private:
  std::array<std::uint16_t, kNumVars> exps_{};
  std::uint16_t degree_ = 0;
};

/// Monomials of one degree n, listed in descending grevlex order, together
/// with an O(1) monomial -> position lookup. Tables are built once per degree
/// and shared; references stay valid for the program lifetime.
class DegreeTable {
 public:
  explicit DegreeTable(int n);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](int i) const { return monomials_[i]; }
  /// Position of m (which must have degree n) in the descending list.
  int index(const Monomial& m) const {
    return index_[(m[0] * stride_ + m[1]) * stride_ + m[2]];
  }

 private:
  int degree_;
  int stride_;
  std::vector<Monomial> monomials_;
  std::vector<std::int32_t> index_;
};

const DegreeTable& degree_table(int n);

/// All binom(n+3,3) monomials of degree n, descending. Throws on n < 0.
const std::vector<Monomial>& monomial_basis(int n);

/// dim R_n = binom(n+3,3); zero for negative n.
int dim_R(int n);

}  // namespace nlc

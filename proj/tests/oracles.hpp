#pragma once

// Test-only reference computations. Nothing here calls into the library's
// linear algebra or Groebner code; they work on plain maps and vectors.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "nlc/polynomial.hpp"

namespace oracle {

using nlc::Coeff;
using nlc::Monomial;
using nlc::Polynomial;
using nlc::PrimeField;

inline Coeff powmod(Coeff a, std::uint64_t e, Coeff p) {
  std::uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Coeff>(r);
}

/// Value of p at a point of F_p^4.
inline Coeff evaluate(const Polynomial& poly, const std::vector<Coeff>& pt) {
  const std::uint64_t p = poly.field().prime();
  std::uint64_t acc = 0;
  for (const auto& t : poly.terms()) {
    std::uint64_t v = t.coeff;
    for (int i = 0; i < 4; ++i) v = v * powmod(pt[i], t.mono[i], p) % p;
    acc = (acc + v) % p;
  }
  return static_cast<Coeff>(acc);
}

/// Count of exponent vectors (a,b,c,d) >= 0 with sum n, by enumeration.
inline int count_monomials(int n) {
  int count = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c)
        for (int d = 0; d <= n; ++d)
          if (a + b + c + d == n) ++count;
  return count;
}

/// Rank of a list of sparse rows (monomial -> coefficient) by plain Gaussian
/// elimination over F_p.
inline int rank_of(std::vector<std::map<Monomial, std::int64_t>> rows, std::int64_t p) {
  auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto it = rows[i].begin(); it != rows[i].end();) {
      if (norm(it->second) == 0) it = rows[i].erase(it); else ++it;
    }
    if (rows[i].empty()) continue;
    ++rank;
    auto [pivot_mono, pivot_val] = *rows[i].begin();
    std::int64_t inv = powmod(static_cast<Coeff>(norm(pivot_val)), p - 2, static_cast<Coeff>(p));
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      auto f = rows[k].find(pivot_mono);
      if (f == rows[k].end()) continue;
      std::int64_t factor = norm(f->second) * inv % p;
      for (auto& [m, v] : rows[i]) rows[k][m] = norm(rows[k][m] - factor * norm(v) % p);
    }
  }
  return rank;
}

inline std::map<Monomial, std::int64_t> as_map(const Polynomial& poly) {
  std::map<Monomial, std::int64_t> m;
  for (const auto& t : poly.terms()) m[t.mono] = t.coeff;
  return m;
}

/// Rank of the Macaulay matrix {u * g : g in gens, u monomial} in degree n,
/// built by explicit monomial enumeration.
inline int macaulay_rank(const std::vector<Polynomial>& gens, int n) {
  if (gens.empty()) return 0;
  std::vector<std::map<Monomial, std::int64_t>> rows;
  for (const Polynomial& g : gens) {
    int k = n - g.degree();
    if (g.is_zero() || k < 0) continue;
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b)
        for (int c = 0; a + b + c <= k; ++c) {
          Monomial u(a, b, c, k - a - b - c);
          std::map<Monomial, std::int64_t> row;
          for (const auto& t : g.terms()) row[t.mono * u] = t.coeff;
          rows.push_back(std::move(row));
        }
  }
  return rank_of(std::move(rows), gens.front().field().prime());
}

inline Polynomial random_form(PrimeField field, int degree, std::mt19937_64& rng) {
  std::vector<nlc::Term> terms;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c)
        terms.push_back({Monomial(a, b, c, degree - a - b - c),
                         static_cast<Coeff>(rng() % field.prime())});
  return Polynomial::from_terms(field, std::move(terms));
}

inline std::vector<Coeff> random_point(PrimeField field, std::mt19937_64& rng) {
  std::vector<Coeff> pt(4);
  for (auto& c : pt) c = static_cast<Coeff>(rng() % field.prime());
  return pt;
}

/// Determinant of a square matrix over F_p by elimination on a copy.
inline Coeff det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t n = m.size();
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p - det) % p;
    }
    const std::int64_t inv = powmod(static_cast<Coeff>(((m[c][c] % p) + p) % p), p - 2, p);
    det = det * (((m[c][c] % p) + p) % p) % p;
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = ((m[r][c] % p) + p) % p * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = ((m[r][k] - f * m[c][k]) % p + p) % p;
    }
  }
  return static_cast<Coeff>(det);
}

}  // namespace oracle

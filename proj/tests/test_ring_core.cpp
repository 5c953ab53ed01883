#include <random>

#include "doctest.h"
#include "nlc/errors.hpp"
#include "nlc/linalg.hpp"
#include "oracles.hpp"

using namespace nlc;

namespace {

const PrimeField F;

Polynomial P(const char* text) { return Polynomial::parse(text, F); }

Monomial random_monomial(std::mt19937_64& rng, int max_exp = 5) {
  return Monomial(rng() % max_exp, rng() % max_exp, rng() % max_exp, rng() % max_exp);
}

}  // namespace

TEST_CASE("prime field") {
  CHECK_THROWS_AS(PrimeField(32004), ArgumentError);
  CHECK(F.mul(F.inv(12345), 12345) == 1);
  CHECK(F.from_int(-1) == 32002);
  CHECK(F.to_signed(32002) == -1);
}

TEST_CASE("monomial_basis sizes and order") {
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(0)[0] == Monomial());
  CHECK(monomial_basis(1).size() == 4);
  CHECK(static_cast<int>(monomial_basis(4).size()) == oracle::count_monomials(4));
  CHECK(monomial_basis(4).size() == 35);
  for (int n = 0; n <= 9; ++n) {
    const auto& basis = monomial_basis(n);
    CHECK(static_cast<int>(basis.size()) == oracle::count_monomials(n));
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] > basis[i]);
    const DegreeTable& t = degree_table(n);
    for (int i = 0; i < t.size(); ++i) CHECK(t.index(t[i]) == i);
  }
  // x^2 > xy > y^2 > xz > yz > z^2 > xw > yw > zw > w^2
  const auto& b2 = monomial_basis(2);
  CHECK(b2[2] == Monomial(0, 2, 0, 0));
  CHECK(b2[3] == Monomial(1, 0, 1, 0));
  CHECK(b2[9] == Monomial(0, 0, 0, 2));
  CHECK_THROWS_AS(monomial_basis(-1), ArgumentError);
}

TEST_CASE("grevlex is a total multiplicative order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    Monomial u = random_monomial(rng), v = random_monomial(rng), w = random_monomial(rng);
    if (u == v) {
      CHECK(!(u < v));
      continue;
    }
    CHECK(((u < v) != (v < u)));
    if (u < v) CHECK(u * w < v * w);
    if (u < v && v < w) CHECK(u < w);
  }
}

TEST_CASE("poly_arith examples") {
  CHECK(P("x + y") + P("-x") == P("y"));
  CHECK(P("x*z - y^2") * P("1") == P("x*z - y^2"));
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK((P("x+y") - P("x+y")).is_zero());
}

TEST_CASE("product agrees with pointwise evaluation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = oracle::random_form(F, 1 + rng() % 3, rng);
    Polynomial b = oracle::random_form(F, 1 + rng() % 3, rng);
    auto pt = oracle::random_point(F, rng);
    CHECK(oracle::evaluate(a * b, pt) == F.mul(oracle::evaluate(a, pt), oracle::evaluate(b, pt)));
    CHECK(oracle::evaluate(a + b, pt) == F.add(oracle::evaluate(a, pt), oracle::evaluate(b, pt)));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial a = oracle::random_form(F, rng() % 3, rng);
    Polynomial b = oracle::random_form(F, rng() % 3, rng);
    Polynomial c = oracle::random_form(F, rng() % 3, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("partial_derivative") {
  CHECK(P("x^2").derivative(0) == P("2*x"));
  CHECK(P("x*z - y^2").derivative(3).is_zero());
  CHECK(P("x^4 + y^4 + z^4 + w^4").derivative(0) == P("4*x^3"));
  // Euler: s f = sum x_i df/dx_i
  std::mt19937_64 rng(3);
  Polynomial f = oracle::random_form(F, 4, rng);
  Polynomial euler(F);
  for (int i = 0; i < 4; ++i) euler += Polynomial::variable(F, i) * f.derivative(i);
  CHECK(euler == f.scaled(4));
}

TEST_CASE("text format") {
  CHECK(P("3*x^2*y - w^3 + 1").to_string() == "3*x^2*y - w^3 + 1");
  CHECK(P("  -  y^2 +x *  z ").to_string() == "-y^2 + x*z");
  CHECK(P("x*x*2").to_string() == "2*x^2");
  CHECK(P("32004*x").to_string() == "x");
  CHECK(P("-32002").to_string() == "1");
  CHECK(P("x - x").to_string() == "0");
  CHECK(P("16001*w").to_string() == "16001*w");
  CHECK(P("16002*w").to_string() == "-16001*w");
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = oracle::random_form(F, rng() % 5, rng);
    CHECK(Polynomial::parse(f.to_string(), F) == f);
  }
  try {
    P("x + * y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("t"), ParseError);
}

TEST_CASE("subspace_from_polys") {
  std::vector<Polynomial> dup = {P("x^2"), P("2*x^2")};
  CHECK(subspace_from_polys(dup, 2).dim() == 1);
  CHECK(subspace_from_polys({}, 3).dim() == 0);
  std::vector<Polynomial> tc = {P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")};
  int oracle_rank = oracle::rank_of({oracle::as_map(tc[0]), oracle::as_map(tc[1]),
                                     oracle::as_map(tc[2])}, F.prime());
  CHECK(oracle_rank == 3);
  CHECK(subspace_from_polys(tc, 2).dim() == oracle_rank);
  std::vector<Polynomial> bad = {P("x^3")};
  CHECK_THROWS_AS(subspace_from_polys(bad, 2), ArgumentError);
}

TEST_CASE("subspace_from_polys is idempotent") {
  std::mt19937_64 rng(8);
  std::vector<Polynomial> polys;
  for (int i = 0; i < 6; ++i) polys.push_back(oracle::random_form(F, 3, rng));
  polys.push_back(polys[0] + polys[1]);
  GradedSubspace s = subspace_from_polys(polys, 3);
  CHECK(s.dim() == 6);
  auto rows = s.polynomials();
  CHECK(subspace_from_polys(rows, 3) == s);
}

TEST_CASE("subspace_ops and Grassmann identity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + rng() % 3;
    std::vector<Polynomial> shared, a, b;
    int ns = rng() % 3;
    for (int i = 0; i < ns; ++i) shared.push_back(oracle::random_form(F, n, rng));
    a = shared;
    b = shared;
    for (int i = 0, k = rng() % 4; i < k; ++i) a.push_back(oracle::random_form(F, n, rng));
    for (int i = 0, k = rng() % 4; i < k; ++i) b.push_back(oracle::random_form(F, n, rng));
    GradedSubspace A = subspace_from_polys(a, n), B = subspace_from_polys(b, n);
    GradedSubspace S = A.sum(B), I = A.intersect(B);
    CHECK(A.dim() + B.dim() == S.dim() + I.dim());
    CHECK(S.contains(A));
    CHECK(A.contains(I));
    CHECK(B.contains(I));
    CHECK(I.dim() >= std::min<int>(ns, dim_R(n)));
  }
  std::vector<Polynomial> tc = {P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")};
  GradedSubspace A = subspace_from_polys(tc, 2);
  CHECK(A.intersect(A) == A);
  CHECK(A.sum(GradedSubspace(F, 2)) == A);
  CHECK(A.contains(P("x*z - y^2")));
  CHECK(!A.contains(P("x^2")));
  CHECK_THROWS_AS(A.sum(GradedSubspace(F, 3)), ArgumentError);
}

TEST_CASE("orthogonal and times_monomials") {
  std::vector<Polynomial> tc = {P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")};
  GradedSubspace A = subspace_from_polys(tc, 2);
  Matrix perp = A.orthogonal();
  CHECK(perp.rows() == 7);
  for (int i = 0; i < A.dim(); ++i)
    for (int k = 0; k < perp.rows(); ++k) {
      std::uint64_t dot = 0;
      for (int j = 0; j < A.ambient_dim(); ++j)
        dot = (dot + std::uint64_t(A.basis().at(i, j)) * perp.at(k, j)) % F.prime();
      CHECK(dot == 0);
    }
  // R_1 * I_{C,2} is all of I_{C,3} (dim 10) for the twisted cubic
  CHECK(A.times_monomials(1).dim() == oracle::macaulay_rank(tc, 3));
  CHECK(A.times_monomials(1).dim() == 10);
}

TEST_CASE("serial and parallel row reduction agree") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    int r = 1 + rng() % 60, c = 1 + rng() % 60;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = (rng() % 3 == 0) ? rng() % F.prime() : 0;
    // force some dependent rows
    if (r > 2)
      for (int j = 0; j < c; ++j) m.at(r - 1, j) = F.add(m.at(0, j), m.at(1, j));
    Matrix a = m, b = m;
    auto pa = rref_serial(a, F);
    auto pb = rref_parallel(b, F);
    CHECK(pa == pb);
    CHECK(a == b);
    // nullspace really is the kernel
    Matrix k = nullspace(m, F);
    CHECK(k.rows() + static_cast<int>(pa.size()) == c);
    for (int v = 0; v < k.rows(); ++v)
      for (int i = 0; i < r; ++i) {
        std::uint64_t dot = 0;
        for (int j = 0; j < c; ++j) dot = (dot + std::uint64_t(m.at(i, j)) * k.at(v, j)) % F.prime();
        CHECK(dot == 0);
      }
  }
}

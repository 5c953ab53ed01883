#include <random>

#include "doctest.h"
#include "nlc/errors.hpp"
#include "nlc/groebner.hpp"
#include "oracles.hpp"

using namespace nlc;

namespace {

const PrimeField F;

Polynomial P(const char* text) { return Polynomial::parse(text, F); }

std::vector<Polynomial> twisted_cubic() {
  return {P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")};
}

// Brute-force count of degree-n monomials outside the monomial ideal.
long long standard_count(const std::vector<Monomial>& gens, int n) {
  long long c = 0;
  for (const Monomial& m : monomial_basis(n)) {
    bool inside = false;
    for (const Monomial& g : gens) inside = inside || g.divides(m);
    c += !inside;
  }
  return c;
}

}  // namespace

TEST_CASE("groebner examples") {
  auto gb = groebner_basis(std::vector<Polynomial>{P("x"), P("y")});
  CHECK(gb == std::vector<Polynomial>{P("y"), P("x")});
  CHECK(groebner_basis(std::vector<Polynomial>{P("x"), P("x")}).size() == 1);
  CHECK(groebner_basis(std::vector<Polynomial>{}).empty());
  CHECK_THROWS_AS(groebner_basis(std::vector<Polynomial>{P("x^2 + y")}), ArgumentError);

  Ideal tc(F, twisted_cubic());
  // Leading terms y^2, yz, z^2: the quadrics already form a Groebner basis.
  CHECK(tc.groebner().size() == 3);
  for (int n = 1; n <= 8; ++n) {
    CHECK(tc.hilbert_function(n) == 3 * n + 1);
    CHECK(dim_R(n) - oracle::macaulay_rank(twisted_cubic(), n) == 3 * n + 1);
  }
}

TEST_CASE("reduced basis is reduced and order independent") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracle::random_form(F, 2 + rng() % 2, rng));
    auto gb = groebner_basis(gens);
    for (std::size_t a = 0; a < gb.size(); ++a) {
      CHECK(gb[a].leading().coeff == 1);
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (a == b) continue;
        for (const Term& t : gb[b].terms()) CHECK(!gb[a].leading().mono.divides(t.mono));
      }
    }
    std::reverse(gens.begin(), gens.end());
    CHECK(groebner_basis(gens) == gb);
  }
}

TEST_CASE("graded pieces match Macaulay ranks") {
  std::mt19937_64 rng(42);
  std::vector<std::vector<Polynomial>> cases = {
      twisted_cubic(),
      {P("x*w - y*z"), P("y^3 - x^2*z"), P("z^3 - y*w^2"), P("x*z^2 - y^2*w")},
      {P("x^2"), P("x*y"), P("y^3")},
  };
  std::vector<Polynomial> random;
  for (int i = 0; i < 4; ++i) random.push_back(oracle::random_form(F, 3, rng));
  cases.push_back(random);
  for (const auto& gens : cases) {
    Ideal I(F, gens);
    for (int n = 0; n <= 8; ++n) {
      CHECK(I.piece(n).dim() == oracle::macaulay_rank(gens, n));
      CHECK(I.hilbert_function(n) == dim_R(n) - I.piece(n).dim());
      for (const Polynomial& g : gens) {
        if (g.degree() == n) CHECK(I.piece(n).contains(g));
      }
    }
  }
}

TEST_CASE("hilbert series agrees with standard monomial counts") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0, count = 1 + rng() % 6; k < count; ++k) {
      gens.emplace_back(rng() % 4, rng() % 4, rng() % 4, rng() % 4);
    }
    if (gens.front().degree() == 0) continue;
    HilbertSeries hs = HilbertSeries::of_monomial_ideal(gens);
    for (int n = 0; n <= 12; ++n) CHECK(hs.value(n) == standard_count(gens, n));
    int r = hs.regularity_index();
    for (int n = r; n <= r + 6; ++n) CHECK(hs.value(n) == hs.polynomial_value(n));
  }
  HilbertSeries tc = Ideal(F, twisted_cubic()).hilbert_series();
  CHECK(tc.krull_dimension() == 2);
  CHECK(tc.multiplicity() == 3);
  CHECK(tc.arithmetic_genus() == 0);
}

TEST_CASE("hilbert_function examples") {
  CHECK(Ideal::zero(F).hilbert_function(3) == 20);
  CHECK(Ideal(F, twisted_cubic()).hilbert_function(2) == 7);
}

TEST_CASE("normal_form_with_cofactors") {
  auto gens = twisted_cubic();
  auto r = normal_form_with_cofactors(gens[0], gens);
  CHECK(r.remainder.is_zero());
  CHECK(r.cofactors[0] == P("1"));
  CHECK(r.cofactors[1].is_zero());
  std::vector<Polynomial> y = {P("y")};
  CHECK(!normal_form_with_cofactors(P("x"), y).remainder.is_zero());

  // a quartic in I_C: f = sum g_i h_i with random quadratic g_i
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f(F);
    for (const auto& h : gens) f += oracle::random_form(F, 2, rng) * h;
    auto d = normal_form_with_cofactors(f, gens);
    CHECK(d.remainder.is_zero());
    Polynomial rebuilt(F);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK((d.cofactors[i].is_zero() || d.cofactors[i].degree() == 2));
      rebuilt += d.cofactors[i] * gens[i];
    }
    CHECK(rebuilt == f);
  }
  // reconstruction identity for arbitrary f, against a Groebner basis
  Ideal I(F, {P("x^2 + y*z"), P("x*y*w - z^3")});
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = oracle::random_form(F, 4, rng);
    auto d = normal_form_with_cofactors(f, I.groebner());
    Polynomial rebuilt = d.remainder;
    for (std::size_t i = 0; i < I.groebner().size(); ++i) rebuilt += d.cofactors[i] * I.groebner()[i];
    CHECK(rebuilt == f);
    CHECK(d.remainder == I.normal_form(f));
    for (const Term& t : d.remainder.terms())
      for (const auto& g : I.groebner()) CHECK(!g.leading().mono.divides(t.mono));
  }
}

TEST_CASE("lift falls back to linear algebra for non-Groebner generators") {
  // (x^2 + y^2, x*y) is not a Groebner basis; y^3 lies in the ideal.
  std::vector<Polynomial> gens = {P("x^2 + y^2"), P("x*y")};
  Polynomial f = P("x^3");  // x*(x^2+y^2) - y*(xy)
  auto c = lift(f, gens);
  REQUIRE(c.has_value());
  CHECK((*c)[0] * gens[0] + (*c)[1] * gens[1] == f);
  CHECK(!lift(P("z^3"), gens).has_value());
}

TEST_CASE("ideal_ops") {
  Ideal x2(F, {P("x^2")});
  Ideal x(F, {P("x")});
  CHECK(ideal_quotient(x2, x) == x);
  std::vector<Polynomial> deg5;
  for (const Monomial& m : monomial_basis(5)) deg5.push_back(P("x").times_term(m, 1));
  Ideal xm(F, deg5);
  CHECK(saturate(xm) == x);
  QuotientInfo info;
  CHECK(ideal_quotient(x, Ideal::zero(F), &info).is_unit());
  CHECK(info.by_zero_ideal);
  CHECK(ideal_quotient(x, x2).is_unit());
  Ideal sum = ideal_sum(x, Ideal(F, {P("y")}));
  CHECK(sum == Ideal(F, {P("x"), P("y")}));
  CHECK(ideal_product(x, Ideal(F, {P("y")})) == Ideal(F, {P("x*y")}));
}

TEST_CASE("quotient adjunction and saturation idempotence") {
  std::mt19937_64 rng(31);
  Ideal tc(F, twisted_cubic());
  for (int trial = 0; trial < 3; ++trial) {
    Polynomial f = P("x*w - y*z") * oracle::random_form(F, 2, rng) +
                   P("x*z - y^2") * oracle::random_form(F, 2, rng);
    Ideal X(F, {P("x*z - y^2"), f});
    Ideal Q = ideal_quotient(X, tc);
    CHECK(X.contains(ideal_product(tc, Q)));
    CHECK(Q.contains(X));
    CHECK(saturate(Q) == Q);
  }
  Ideal m = Ideal::irrelevant(F);
  Ideal truncated = ideal_product(tc, m);
  CHECK(!(truncated == tc));
  CHECK(saturate(truncated) == tc);
}

TEST_CASE("minors_ideal") {
  PolyMatrix d(F, {0, 0}, {1, 1});
  d.set(0, 0, P("x"));
  d.set(1, 1, P("y"));
  CHECK(minors_ideal(d, 2) == Ideal(F, {P("x*y")}));
  CHECK_THROWS_AS(minors_ideal(d, 0), ArgumentError);
  CHECK_THROWS_AS(minors_ideal(d, 3), ArgumentError);
  CHECK_THROWS_AS(d.set(0, 1, P("x^2")), ArgumentError);

  // Hilbert-Burch matrix of the twisted cubic
  PolyMatrix phi(F, {2, 2, 2}, {3, 3});
  phi.set(0, 0, P("x"));
  phi.set(0, 1, P("y"));
  phi.set(1, 0, P("y"));
  phi.set(1, 1, P("z"));
  phi.set(2, 0, P("z"));
  phi.set(2, 1, P("w"));
  CHECK(minors_ideal(phi, 2) == Ideal(F, twisted_cubic()));
}

TEST_CASE("is_artinian") {
  auto m = is_artinian(Ideal::irrelevant(F));
  CHECK(m.artinian);
  CHECK(m.socle_degree == 0);
  CHECK(!is_artinian(Ideal(F, twisted_cubic())).artinian);
  Ideal fermat_jacobian(F, {P("x^3"), P("y^3"), P("z^3"), P("w^3")});
  auto j = is_artinian(fermat_jacobian);
  CHECK(j.artinian);
  CHECK(j.socle_degree == 8);
}

TEST_CASE("generated_in_degrees_leq") {
  CHECK(generated_in_degrees_leq(Ideal(F, {P("x")}), 1).generated);
  auto t = generated_in_degrees_leq(Ideal(F, twisted_cubic()), 1);
  CHECK(!t.generated);
  CHECK(t.first_failure == 2);
  CHECK(generated_in_degrees_leq(Ideal(F, twisted_cubic()), 2).generated);
}

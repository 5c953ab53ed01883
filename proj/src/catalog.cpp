#include "nlc/catalog.hpp"

#include <algorithm>
#include <regex>

#include "nlc/errors.hpp"
#include "nlc/random.hpp"

namespace nlc {

namespace {

using BinaryForm = std::vector<Coeff>;  // coefficients of u^(d-k) v^k

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b, const PrimeField& F) {
  BinaryForm out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

BinaryForm monomial_form(int d, int v_power) {
  BinaryForm f(d + 1, 0);
  f[v_power] = 1;
  return f;
}

// Ideal of the image of P^1 under coordinates of degree d, from the kernels
// of the substitution maps R_n -> k[u,v]_{dn}.
Ideal eliminate(const std::vector<BinaryForm>& coords, const PrimeField& F, int max_gen_degree) {
  std::vector<Polynomial> gens;
  std::vector<GradedSubspace> kernels;
  for (int n = 0; n <= max_gen_degree + 6; ++n) {
    const DegreeTable& table = degree_table(n);
    const int d = static_cast<int>(coords.front().size()) - 1;
    Matrix sub(table.size(), d * n + 1);
    for (int r = 0; r < table.size(); ++r) {
      BinaryForm img{1};
      for (int v = 0; v < kNumVars; ++v) {
        for (int e = 0; e < table[r][v]; ++e) img = multiply(img, coords[v], F);
      }
      for (std::size_t k = 0; k < img.size(); ++k) sub.at(r, static_cast<int>(k)) = img[k];
    }
    GradedSubspace kernel = GradedSubspace::from_rows(F, n, left_kernel(sub, F));
    if (n <= max_gen_degree && kernel.dim() > 0) {
      std::vector<char> lower(table.size(), 0);
      if (n > 0) {
        GradedSubspace shifted = kernels.back().times_monomials(1);
        for (int c : shifted.pivots()) lower[c] = 1;
      }
      std::vector<Polynomial> rows = kernel.polynomials();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!lower[kernel.pivots()[i]]) gens.push_back(rows[i]);
      }
    }
    kernels.push_back(std::move(kernel));
  }
  Ideal ideal(F, gens);
  for (int n = 0; n < static_cast<int>(kernels.size()); ++n) {
    if (!(ideal.piece(n) == kernels[n])) {
      throw std::logic_error("elimination: generators stop short in degree " + std::to_string(n));
    }
  }
  return ideal;
}

CurveModel rational_curve(std::string name, const std::vector<BinaryForm>& coords, int degree,
                          bool acm, int normal_summand_a, int normal_summand_b,
                          const PrimeField& F) {
  // normal bundle pulls back to O(a) + O(b) on P^1
  CurveModel c{std::move(name), eliminate(coords, F, 3)};
  c.degree = degree;
  c.genus = 0;
  c.acm = acm;
  c.h0_OC = [degree](int n) -> long long { return n < 0 ? 0 : static_cast<long long>(degree) * n + 1; };
  const int top = std::max(normal_summand_a, normal_summand_b);
  c.normal_vanishing = [degree, top](int n) { return top + degree * n < 0; };
  c.sC = minimal_surface_degree(c.ideal);
  c.eC = speciality_and_minimal_degree(c).eC;
  return c;
}

void check_invariants(const CurveModel& c) {
  const HilbertSeries& hs = c.ideal.hilbert_series();
  if (hs.krull_dimension() != 2 || hs.multiplicity() != c.degree ||
      hs.arithmetic_genus() != c.genus) {
    throw std::logic_error("catalog invariants disagree with the Hilbert polynomial of " + c.name);
  }
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"twisted_cubic", "rational_quartic_31", "line", "conic", "complete_intersection(d1,d2)"};
}

CurveModel catalog(std::string_view name, const PrimeField& F) {
  CurveModel c{std::string(name), Ideal::zero(F)};
  if (name == "twisted_cubic") {
    c = rational_curve("twisted_cubic",
                       {monomial_form(3, 0), monomial_form(3, 1), monomial_form(3, 2), monomial_form(3, 3)},
                       3, true, 5, 5, F);
  } else if (name == "rational_quartic_31") {
    c = rational_curve("rational_quartic_31",
                       {monomial_form(4, 0), monomial_form(4, 1), monomial_form(4, 3), monomial_form(4, 4)},
                       4, false, 7, 7, F);
  } else if (name == "line") {
    c = rational_curve("line", {monomial_form(1, 0), monomial_form(1, 1), BinaryForm(2, 0), BinaryForm(2, 0)},
                       1, true, 1, 1, F);
  } else if (name == "conic") {
    c = rational_curve("conic", {monomial_form(2, 0), monomial_form(2, 1), monomial_form(2, 2), BinaryForm(3, 0)},
                       2, true, 4, 2, F);
  } else {
    static const std::regex ci(R"(complete_intersection\((\d+),(\d+)\))");
    std::cmatch match;
    std::string text(name);
    if (!std::regex_match(text.c_str(), match, ci)) {
      throw ArgumentError("unknown catalog curve '" + text + "'");
    }
    return complete_intersection(std::stoi(match[1]), std::stoi(match[2]), F);
  }
  check_invariants(c);
  return c;
}

CurveModel complete_intersection(int d1, int d2, const PrimeField& F) {
  if (d1 < 1 || d2 < 1 || d1 > 12 || d2 > 12) throw ArgumentError("complete intersection degrees must be in 1..12");
  if (d1 > d2) std::swap(d1, d2);
  Rng rng(derive_seed(0xc1, static_cast<std::uint64_t>(d1) * 100 + d2));
  Polynomial a = random_form(F, d1, rng);
  Polynomial b = random_form(F, d2, rng);
  CurveModel c{"complete_intersection(" + std::to_string(d1) + "," + std::to_string(d2) + ")",
               Ideal(F, {a, b})};
  if (c.ideal.hilbert_series().krull_dimension() != 2) {
    throw DegenerateInput("seeded forms do not meet properly");
  }
  c.degree = d1 * d2;
  c.genus = 1 + d1 * d2 * (d1 + d2 - 4) / 2;
  c.acm = true;
  Ideal ideal = c.ideal;
  c.h0_OC = [ideal](int n) -> long long { return n < 0 ? 0 : ideal.hilbert_function(n); };
  // N_C = O_C(d1) + O_C(d2)
  c.normal_vanishing = [d2](int n) { return n + d2 < 0; };
  c.sC = minimal_surface_degree(c.ideal);
  c.eC = speciality_and_minimal_degree(c).eC;
  check_invariants(c);
  return c;
}

int minimal_surface_degree(const Ideal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("zero ideal lies on no surface");
  for (int n = 0;; ++n) {
    if (ideal.piece(n).dim() > 0) return n;
  }
}

SurfaceModel surface_from_equation(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous()) throw ArgumentError("surface equation must be a nonzero form");
  std::vector<Polynomial> partials;
  for (int v = 0; v < kNumVars; ++v) partials.push_back(f.derivative(v));
  return SurfaceModel{f, f.degree(), Ideal(f.field(), partials)};
}

SurfaceModel random_surface_containing(const CurveModel& curve, int s, std::uint64_t seed,
                                       int max_attempts) {
  if (s < curve.sC) {
    throw ArgumentError("no surface of degree " + std::to_string(s) + " contains " + curve.name);
  }
  const PrimeField& F = curve.ideal.field();
  std::vector<Polynomial> gens = curve.ideal.minimal_generators();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    Polynomial f(F);
    for (const Polynomial& h : gens) {
      if (h.degree() <= s) f = f + random_form(F, s - h.degree(), rng) * h;
    }
    if (f.is_zero()) continue;
    SurfaceModel surface = surface_from_equation(f);
    if (is_artinian(surface.jacobian).artinian) {
      surface.attempts = attempt + 1;
      return surface;
    }
  }
  throw DegenerateInput("no smooth surface of degree " + std::to_string(s) + " through " + curve.name +
                        " after " + std::to_string(max_attempts) + " attempts");
}

CurveModel residual(const CurveModel& curve, const SurfaceModel& surface, const Polynomial& g) {
  if (g.is_zero() || !g.is_homogeneous()) throw ArgumentError("linking form must be a nonzero form");
  if (!curve.ideal.contains(g)) throw MembershipError("linking form is not in the curve ideal");
  const PrimeField& F = curve.ideal.field();
  Ideal x(F, {surface.f, g});
  if (x.hilbert_series().krull_dimension() != 2) {
    throw DegenerateInput("surface and linking form do not meet properly");
  }
  Ideal d = saturate(ideal_quotient(x, curve.ideal));
  const int k = g.degree();
  CurveModel out{curve.name + "~" + std::to_string(k) + "H", d};
  out.link_degree = k;
  if (d.is_unit()) {  // C is the whole intersection; the residual is empty
    out.genus = 1;
    out.acm = true;
    return out;
  }
  const HilbertSeries& hs = d.hilbert_series();
  out.degree = static_cast<int>(hs.multiplicity());
  out.genus = static_cast<int>(hs.arithmetic_genus());
  out.acm = curve.acm;
  out.sC = minimal_surface_degree(d);
  if (out.acm) {
    out.h0_OC = [d](int n) -> long long { return n < 0 ? 0 : d.hilbert_function(n); };
    out.eC = speciality_and_minimal_degree(out).eC;
  }
  return out;
}

SpecialityData speciality_and_minimal_degree(const CurveModel& curve) {
  if (!curve.h0_OC) throw ArgumentError(curve.name + " has no h0 rule");
  // h^1(O_C(n)) > 0 for every n < 0; it vanishes once dn > 2g - 2.
  int e = -1;
  for (int n = 0; n <= 2 * curve.genus + 2; ++n) {
    long long chi = static_cast<long long>(curve.degree) * n + 1 - curve.genus;
    if (curve.h0_OC(n) - chi > 0) e = n;
  }
  return {e, minimal_surface_degree(curve.ideal)};
}

long long h1_ideal_sheaf(const CurveModel& curve, int n) {
  if (!curve.h0_OC) throw ArgumentError(curve.name + " has no h0 rule");
  return curve.h0_OC(n) - (n < 0 ? 0 : curve.ideal.hilbert_function(n));
}

CriterionReport reconstruction_criterion(const CurveModel& curve, const SurfaceModel& surface, int p) {
  if (!curve.h0_OC || !curve.normal_vanishing) {
    throw ArgumentError(curve.name + ": unsupported curve (no cohomology rules)");
  }
  CriterionReport r;
  r.h1_twist = 2 * surface.s - 4 - p;
  r.h1_value = h1_ideal_sheaf(curve, r.h1_twist);
  r.h1_vanishes = r.h1_value == 0;
  r.normal_twist = p - surface.s;
  r.normal_vanishes = curve.normal_vanishing(r.normal_twist);
  r.generated = generated_in_degrees_leq(curve.ideal, p).generated;
  return r;
}

bool acm_bound_applies(const CurveModel& curve, int s) {
  if (!curve.acm || !curve.eC) return false;
  return s >= 2 * *curve.eC + 8 - curve.sC;
}

}  // namespace nlc

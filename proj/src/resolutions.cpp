#include "nlc/resolutions.hpp"

#include <algorithm>
#include <numeric>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Coordinates of (+)_i R_{n - a_i}: block i starts at offset[i].
struct FreeModuleDegree {
  std::vector<int> offset;
  int size = 0;
  FreeModuleDegree(const std::vector<int>& a, int n) {
    for (int ai : a) {
      offset.push_back(size);
      size += dim_R(n - ai);
    }
  }
};

}  // namespace

NotACM::NotACM(const std::string& why, std::vector<int> generator_degrees,
               std::vector<int> syzygy_degrees)
    : std::runtime_error("not ACM: " + why + "; generator degrees " + join(generator_degrees) +
                         ", syzygy degrees " + join(syzygy_degrees)),
      generator_degrees_(std::move(generator_degrees)),
      syzygy_degrees_(std::move(syzygy_degrees)) {}

SyzygyResult syzygies(std::span<const Polynomial> gens) {
  SyzygyResult result;
  if (gens.empty()) return result;
  const PrimeField F = gens.front().field();
  std::vector<int> a;
  for (const Polynomial& g : gens) {
    if (g.is_zero() || !g.is_homogeneous()) throw ArgumentError("syzygies need nonzero homogeneous generators");
    a.push_back(g.degree());
  }
  std::vector<int> sorted = a;
  std::sort(sorted.rbegin(), sorted.rend());
  int bound = sorted.size() >= 2 ? sorted[0] + sorted[1] : sorted[0];
  bound = std::max(bound, Ideal(F, {gens.begin(), gens.end()}).max_groebner_degree() + 1);
  const int start = *std::min_element(a.begin(), a.end()) + 1;

  Matrix prev_kernel;  // RREF basis of the syzygies of degree n-1
  int quiet = 0;
  int n = start;
  for (;; ++n) {
    FreeModuleDegree dom(a, n);
    const DegreeTable& target = degree_table(n);
    // Macaulay matrix: row (i,u) holds u * g_i.
    Matrix mac(dom.size, target.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (n < a[i]) continue;
      const DegreeTable& src = degree_table(n - a[i]);
      for (int k = 0; k < src.size(); ++k) {
        auto row = mac.row(dom.offset[i] + k);
        for (const Term& t : gens[i].terms()) row[target.index(src[k] * t.mono)] = t.coeff;
      }
    }
    Matrix kernel = left_kernel(mac, F);
    std::vector<int> pivots = rref(kernel, F);

    // R_1 times the previous kernel, in degree-n coordinates.
    std::vector<char> lower_pivot(dom.size, 0);
    if (prev_kernel.rows() > 0) {
      FreeModuleDegree prev_dom(a, n - 1);
      Matrix lower(0, dom.size);
      std::vector<Coeff> v(dom.size);
      for (int r = 0; r < prev_kernel.rows(); ++r) {
        for (int var = 0; var < kNumVars; ++var) {
          std::fill(v.begin(), v.end(), 0);
          Monomial x = Monomial::variable(var);
          for (std::size_t i = 0; i < gens.size(); ++i) {
            if (n - 1 < a[i]) continue;
            const DegreeTable& src = degree_table(n - 1 - a[i]);
            const DegreeTable& dst = degree_table(n - a[i]);
            for (int k = 0; k < src.size(); ++k) {
              Coeff c = prev_kernel.at(r, prev_dom.offset[i] + k);
              if (c != 0) v[dom.offset[i] + dst.index(src[k] * x)] = c;
            }
          }
          lower.append_row(v);
        }
      }
      for (int c : rref(lower, F)) lower_pivot[c] = 1;
    }

    int added = 0;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (lower_pivot[pivots[k]]) continue;
      Syzygy syz{n, {}};
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (n < a[i]) {
          syz.components.emplace_back(F);
          continue;
        }
        int len = dim_R(n - a[i]);
        auto row = kernel.row(static_cast<int>(k));
        syz.components.push_back(
            from_dense(row.subspan(dom.offset[i], len), n - a[i], F));
      }
      result.generators.push_back(std::move(syz));
      ++added;
    }
    prev_kernel = std::move(kernel);
    if (n >= bound) {
      quiet = added ? 0 : quiet + 1;
      if (quiet >= 3) break;
    }
  }
  result.checked_up_to = n;
  return result;
}

HilbertBurchData hilbert_burch(const Ideal& curve_ideal) {
  const PrimeField& F = curve_ideal.field();
  std::vector<Polynomial> gens = curve_ideal.minimal_generators();
  std::vector<int> a;
  for (const Polynomial& g : gens) a.push_back(g.degree());
  if (gens.size() < 2) throw NotACM("fewer than two generators (not codimension two)", a, {});

  SyzygyResult syz = syzygies(gens);
  std::vector<int> b;
  for (const Syzygy& s : syz.generators) b.push_back(s.degree);
  const int r = static_cast<int>(gens.size()) - 1;
  if (static_cast<int>(b.size()) != r) {
    throw NotACM("expected " + std::to_string(r) + " syzygies, found " + std::to_string(b.size()), a, b);
  }
  if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0)) {
    throw NotACM("degree balance sum(a) = sum(b) fails", a, b);
  }
  const int audit_bound = *std::max_element(b.begin(), b.end()) + 3;
  for (int n = 0; n <= audit_bound; ++n) {
    int expected = 0;
    for (int ai : a) expected += dim_R(n - ai);
    for (int bj : b) expected -= dim_R(n - bj);
    if (curve_ideal.piece(n).dim() != expected) {
      throw NotACM("Euler characteristic fails in degree " + std::to_string(n), a, b);
    }
  }

  PolyMatrix phi(F, a, b);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i <= r; ++i) phi.set(i, j, syz.generators[j].components[i]);
  }

  // Minor with row i deleted should be (-1)^i h_i up to one common unit.
  std::vector<int> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  std::optional<Coeff> unit;
  std::vector<Polynomial> signed_minors;
  for (int i = 0; i <= r; ++i) {
    std::vector<int> rows;
    for (int k = 0; k <= r; ++k) {
      if (k != i) rows.push_back(k);
    }
    Polynomial m = phi.minor(rows, cols);
    if (i % 2 == 1) m = -m;
    if (m.is_zero()) throw NotACM("vanishing maximal minor", a, b);
    Coeff u = F.mul(m.leading().coeff, F.inv(gens[i].leading().coeff));
    if (!unit) unit = u;
    if (!(m == gens[i].scaled(*unit))) throw NotACM("maximal minors do not match the generators", a, b);
  }
  Coeff fix = F.inv(*unit);
  for (int i = 0; i <= r; ++i) phi.set(i, 0, phi.at(i, 0).scaled(fix));
  return HilbertBurchData{std::move(phi), std::move(a), std::move(b), std::move(gens)};
}

PsiData build_psi(const HilbertBurchData& hb, const Polynomial& f) {
  const PrimeField& F = hb.phi.field();
  if (f.is_zero() || !f.is_homogeneous()) throw ArgumentError("surface equation must be a nonzero form");
  const int s = f.degree();
  auto cofactors = lift(f, hb.generators);
  if (!cofactors) throw MembershipError("surface equation is not in the curve ideal");
  std::vector<Polynomial> column = *cofactors;
  if (hb.r() % 2 == 1) {
    for (Polynomial& g : column) g = -g;
  }
  PsiData out{hb.phi.with_column(column, s), std::move(*cofactors), s};
  if (!(out.psi.determinant() == f)) {
    throw DegenerateInput("det(psi) differs from the surface equation");
  }
  (void)F;
  return out;
}

}  // namespace nlc

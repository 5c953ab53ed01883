#include "nlc/annihilator.hpp"

#include "nlc/errors.hpp"
#include "nlc/resolutions.hpp"

namespace nlc {

namespace {

AnnihilatorClass zero_class(const PrimeField& F, int s, std::string tag) {
  AnnihilatorClass a;
  a.s = s;
  a.socle_degree = 2 * s - 4;
  a.zero_class = true;
  a.surface_tag = std::move(tag);
  for (int n = 0; n <= a.socle_degree; ++n) a.pieces.push_back(GradedSubspace::full(F, n));
  return a;
}

void require_smooth(const Ideal& jacobian) {
  if (!is_artinian(jacobian).artinian) throw ArgumentError("surface is singular (J_S not artinian)");
}

}  // namespace

std::vector<int> AnnihilatorClass::piece_dims() const {
  std::vector<int> out;
  for (const GradedSubspace& p : pieces) out.push_back(p.dim());
  return out;
}

std::vector<int> AnnihilatorClass::quotient_hf() const {
  std::vector<int> out;
  for (const GradedSubspace& p : pieces) out.push_back(p.codim());
  return out;
}

std::string surface_tag(const Ideal& jacobian) {
  std::string text;
  for (const Polynomial& g : jacobian.groebner()) text += g.to_string() + ";";
  return fingerprint_text(text);
}

AnnihilatorClass class_from_hyperplane(const GradedSubspace& hyperplane, int s, std::string tag) {
  const PrimeField& F = hyperplane.field();
  const int e = 2 * s - 4;
  if (hyperplane.degree() != e || hyperplane.codim() != 1) {
    throw ArgumentError("kernel hyperplane must have codimension 1 in degree 2s-4");
  }
  const Matrix lambda = hyperplane.orthogonal();
  const DegreeTable& top = degree_table(e);
  AnnihilatorClass a;
  a.s = s;
  a.socle_degree = e;
  a.kernel_hyperplane = hyperplane;
  a.surface_tag = std::move(tag);
  for (int n = 0; n <= e; ++n) {
    const DegreeTable& rows = degree_table(n);
    const DegreeTable& cols = degree_table(e - n);
    Matrix cat(rows.size(), cols.size());
    for (int i = 0; i < rows.size(); ++i) {
      for (int j = 0; j < cols.size(); ++j) cat.at(i, j) = lambda.at(0, top.index(rows[i] * cols[j]));
    }
    a.pieces.push_back(GradedSubspace::from_rows(F, n, left_kernel(cat, F)));
  }
  return a;
}

AnnihilatorClass annihilator_from_ideals(std::span<const Ideal> ideals, const Ideal& jacobian, int s) {
  if (s < 2) throw ArgumentError("surface degree must be at least 2");
  const int e = 2 * s - 4;
  GradedSubspace k = jacobian.piece(e);
  for (const Ideal& i : ideals) k = k.sum(i.piece(e));
  std::string tag = surface_tag(jacobian);
  if (k.codim() == 0) return zero_class(jacobian.field(), s, std::move(tag));
  if (k.codim() > 1) {
    throw IndeterminateClass("hyperplane not pinned: codimension " + std::to_string(k.codim()) +
                                 " in degree " + std::to_string(e),
                             k.codim());
  }
  return class_from_hyperplane(k, s, std::move(tag));
}

AnnihilatorClass annihilator_apolar(const CurveModel& curve, const SurfaceModel& surface) {
  require_smooth(surface.jacobian);
  if (!curve.ideal.contains(surface.f)) throw MembershipError("surface does not contain the curve");
  const int e = 2 * surface.s - 4;
  std::vector<Ideal> ideals{curve.ideal};
  GradedSubspace k = surface.jacobian.piece(e).sum(curve.ideal.piece(e));
  for (int deg = curve.sC; deg <= surface.s && k.codim() > 1; ++deg) {
    for (const Polynomial& g : curve.ideal.piece(deg).polynomials()) {
      if (k.codim() <= 1) break;
      try {
        Ideal d = residual(curve, surface, g).ideal;
        k = k.sum(d.piece(e));
        ideals.push_back(std::move(d));
      } catch (const DegenerateInput&) {
      }
    }
  }
  AnnihilatorClass a = annihilator_from_ideals(ideals, surface.jacobian, surface.s);
  a.links_used = static_cast<int>(ideals.size()) - 1;
  return a;
}

AnnihilatorClass annihilator_acm(const CurveModel& curve, const SurfaceModel& surface) {
  require_smooth(surface.jacobian);
  HilbertBurchData hb = hilbert_burch(curve.ideal);
  PsiData psi = build_psi(hb, surface.f);
  Ideal minors = minors_ideal(psi.psi, hb.r());
  const int e = 2 * surface.s - 4;
  std::string tag = surface_tag(surface.jacobian);
  GradedSubspace top = minors.piece(e);
  if (top.codim() == 0) return zero_class(curve.ideal.field(), surface.s, std::move(tag));
  if (top.codim() > 1) {
    throw IndeterminateClass("minors ideal has codimension " + std::to_string(top.codim()) +
                                 " in degree " + std::to_string(e),
                             top.codim());
  }
  AnnihilatorClass a;
  a.s = surface.s;
  a.socle_degree = e;
  a.kernel_hyperplane = top;
  a.surface_tag = std::move(tag);
  for (int n = 0; n <= e; ++n) a.pieces.push_back(minors.piece(n));
  return a;
}

GorensteinReport gorenstein_report(const AnnihilatorClass& a) {
  GorensteinReport r;
  r.hf = a.quotient_hf();
  if (a.zero_class) return r;
  r.symmetric = true;
  const int e = a.socle_degree;
  for (int n = 0; n <= e; ++n) r.symmetric = r.symmetric && r.hf[n] == r.hf[e - n];
  r.socle_one_dimensional = r.hf[e] == 1;
  return r;
}

bool classes_equal(const AnnihilatorClass& a, const AnnihilatorClass& b) {
  if (a.s != b.s || a.surface_tag != b.surface_tag) {
    throw ArgumentError("classes live on different surfaces");
  }
  if (a.zero_class || b.zero_class) return a.zero_class == b.zero_class;
  return *a.kernel_hyperplane == *b.kernel_hyperplane;
}

ReconstructionVerdict reconstruct_check(const CurveModel& curve, const AnnihilatorClass& a, int m) {
  const PrimeField& F = curve.ideal.field();
  ReconstructionVerdict v;
  v.level = m;
  std::vector<Polynomial> gens;
  for (int n = 0; n <= m && n <= a.socle_degree; ++n) {
    v.alpha_dims.push_back(a.pieces[n].dim());
    v.curve_dims.push_back(curve.ideal.piece(n).dim());
    for (Polynomial& p : a.pieces[n].polynomials()) gens.push_back(std::move(p));
  }
  Ideal generated(F, gens);
  Ideal sat = saturate(generated);
  for (int n = 0; n <= m + 2; ++n) {
    v.generated_dims.push_back(generated.piece(n).dim());
    v.saturated_dims.push_back(sat.piece(n).dim());
  }
  v.reconstructed = sat == curve.ideal;
  v.equal_before_saturation = generated == curve.ideal;
  return v;
}

PerfectVerdict perfect_check(const AnnihilatorClass& a, const std::vector<CurveModel>& pool,
                             const SurfaceModel& surface, int m) {
  const Ideal& jacobian = surface.jacobian;
  PerfectVerdict v;
  v.level = m;
  std::vector<const CurveModel*> members;
  for (const CurveModel& d : pool) {
    bool same = false;
    try {
      same = classes_equal(a, annihilator_apolar(d, surface));
    } catch (const DegenerateInput&) {
      same = false;
    } catch (const MembershipError&) {
      same = false;
    }
    (same ? v.accepted : v.rejected).push_back(d.name);
    if (same) members.push_back(&d);
  }
  if (a.zero_class) {
    v.perfect = true;
    return v;
  }
  v.perfect = true;
  for (int j = 0; j <= m && j <= a.socle_degree; ++j) {
    GradedSubspace sum = jacobian.piece(j);
    for (const CurveModel* d : members) sum = sum.sum(d->ideal.piece(j));
    if (!a.pieces[j].contains(sum)) throw std::logic_error("pool ideal escapes the annihilator");
    v.ledger.push_back({j, sum.dim(), a.pieces[j].dim()});
    if (sum.dim() != a.pieces[j].dim() && v.perfect) {
      v.perfect = false;
      v.first_failure = j;
    }
  }
  return v;
}

std::vector<CurveModel> liaison_pool(const CurveModel& curve, const SurfaceModel& surface,
                                     int max_link_degree, bool double_links) {
  std::vector<CurveModel> pool;
  auto add_residuals = [&](const CurveModel& base) {
    std::vector<CurveModel> found;
    for (int k = base.sC; k <= max_link_degree; ++k) {
      for (const Polynomial& g : base.ideal.piece(k).polynomials()) {
        CurveModel d{base.name, Ideal::zero(curve.ideal.field())};
        try {
          d = residual(base, surface, g);
        } catch (const DegenerateInput&) {
          continue;  // g shares a component with S
        }
        bool seen = d.ideal == curve.ideal;
        for (const CurveModel& p : pool) seen = seen || p.ideal == d.ideal;
        for (const CurveModel& p : found) seen = seen || p.ideal == d.ideal;
        if (!seen && d.degree > 0) found.push_back(std::move(d));
      }
    }
    return found;
  };
  pool = add_residuals(curve);
  if (double_links) {
    const std::size_t first = pool.size();
    for (std::size_t i = 0; i < first; ++i) {
      for (CurveModel& d : add_residuals(pool[i])) pool.push_back(std::move(d));
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i].name += "#" + std::to_string(i);

  if (pool.empty()) return pool;
  AnnihilatorClass a = annihilator_apolar(curve, surface);
  for (const CurveModel& d : pool) {
    if (!classes_equal(a, annihilator_apolar(d, surface))) {
      throw std::logic_error("linked curve " + d.name + " carries a different class");
    }
  }
  return pool;
}

}  // namespace nlc

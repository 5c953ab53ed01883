#include "nlc/commands.hpp"

#include <chrono>
#include <set>

#include "nlc/errors.hpp"
#include "nlc/fixture.hpp"
#include "nlc/resolutions.hpp"

namespace nlc {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

class Stopwatch {
 public:
  explicit Stopwatch(RunReport& r) : report_(r), start_(Clock::now()) {}
  void lap(const std::string& name) {
    auto now = Clock::now();
    report_.timings.emplace_back(name, std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  RunReport& report_;
  Clock::time_point start_;
};

std::vector<long long> dims(const Ideal& ideal, int top) {
  std::vector<long long> out;
  for (int n = 0; n <= top; ++n) out.push_back(ideal.piece(n).dim());
  return out;
}

template <class T>
std::vector<long long> widen(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

json curve_summary(const CurveModel& c) {
  return {{"name", c.name}, {"degree", c.degree}, {"genus", c.genus}};
}

}  // namespace

std::string demo_curve_name(const DemoOptions& o) {
  if (o.name == "twisted-cubic") return "twisted_cubic";
  if (o.name == "rational-quartic") return "rational_quartic_31";
  if (o.name == "acm-ci") {
    return "complete_intersection(" + std::to_string(std::min(o.d1, o.d2)) + "," +
           std::to_string(std::max(o.d1, o.d2)) + ")";
  }
  throw ArgumentError("unknown demo '" + o.name + "' (twisted-cubic, rational-quartic, acm-ci)");
}

RunReport cmd_demo(const DemoOptions& o) {
  RunReport r;
  r.command = "demo " + o.name;
  r.prime = o.field.prime();
  r.seed = o.seed;
  Stopwatch clock(r);

  CurveModel c = catalog(demo_curve_name(o), o.field);
  const int s = o.s > 0 ? o.s : (o.name == "acm-ci" ? 6 : 4);
  r.curve = c.name;
  clock.lap("catalog");

  SurfaceModel surface = random_surface_containing(c, s, o.seed);
  r.s = s;
  r.surface_fingerprint = fingerprint(surface.f);
  r.evidence["surface"] = {{"degree", s}, {"attempts", surface.attempts}};
  clock.lap("surface");

  const int e = 2 * s - 4;
  AnnihilatorClass a = annihilator_apolar(c, surface);
  r.verdicts["acm"] = c.acm;
  r.verdicts["links_used"] = a.links_used;
  if (c.acm) {
    AnnihilatorClass b = annihilator_acm(c, surface);
    bool agree = a.zero_class == b.zero_class;
    for (int n = 0; n <= e && agree; ++n) agree = a.pieces[n] == b.pieces[n];
    r.verdicts["paths_agree"] = agree;
  } else {
    r.verdicts["paths_agree"] = "n/a";
  }
  clock.lap("annihilator");

  GorensteinReport g = gorenstein_report(a);
  r.verdicts["zero_class"] = a.zero_class;
  r.verdicts["gorenstein"] = g.ok();
  r.tables["alpha_dims"] = widen(a.piece_dims());
  r.tables["quotient_hf"] = widen(g.hf);
  r.tables["curve_dims"] = dims(c.ideal, e);
  r.tables["jacobian_dims"] = dims(surface.jacobian, e);

  // reconstruction: smallest level that recovers I_C, plus the requested one
  int level = o.level.value_or(o.name == "rational-quartic" ? 3 : (o.name == "acm-ci" ? *c.eC + 3 : 2));
  if (level < 0 || level > e) throw ArgumentError("level must lie in 0.." + std::to_string(e));
  json reconstructed_at;
  for (int m = c.sC; m <= e; ++m) {
    if (reconstruct_check(c, a, m).reconstructed) {
      reconstructed_at = m;
      break;
    }
  }
  r.verdicts["reconstructed_at"] = reconstructed_at;
  ReconstructionVerdict rv = reconstruct_check(c, a, level);
  r.verdicts["reconstructed_at_level"] = rv.reconstructed;
  r.verdicts["level"] = level;
  r.evidence["reconstruction"] = {{"level", level},
                                  {"alpha_dims", rv.alpha_dims},
                                  {"curve_dims", rv.curve_dims},
                                  {"generated_dims", rv.generated_dims},
                                  {"saturated_dims", rv.saturated_dims}};
  if (c.h0_OC && c.normal_vanishing) {
    CriterionReport cr = reconstruction_criterion(c, surface, level);
    r.verdicts["criterion"] = cr.holds();
    r.evidence["criterion"] = {{"h1_twist", cr.h1_twist},         {"h1_value", cr.h1_value},
                               {"normal_twist", cr.normal_twist}, {"normal_vanishes", cr.normal_vanishes},
                               {"generated", cr.generated}};
  }
  if (c.acm) r.verdicts["acm_bound_applies"] = acm_bound_applies(c, s);
  clock.lap("reconstruction");

  // perfectness over C and its liaison pool
  const int link_degree = o.name == "acm-ci" ? std::max(o.d1, o.d2) : 2;
  std::vector<CurveModel> pool = liaison_pool(c, surface, link_degree);
  pool.insert(pool.begin(), c);
  const int perfect_level = o.name == "rational-quartic" ? level : (o.level ? level : e);
  PerfectVerdict pv = perfect_check(a, pool, surface, perfect_level);
  r.verdicts["perfect"] = pv.perfect;
  r.verdicts["perfect_level"] = perfect_level;
  r.verdicts["first_failure"] = pv.first_failure >= 0 ? json(pv.first_failure) : json();
  r.verdicts["class_equal"] = pv.rejected.empty();
  std::vector<long long> pool_dims;
  json ledger = json::array();
  for (const PerfectRow& row : pv.ledger) {
    pool_dims.push_back(row.pool_dim);
    ledger.push_back({{"j", row.degree}, {"pool", row.pool_dim}, {"alpha", row.alpha_dim}});
  }
  r.tables["pool_dims"] = pool_dims;
  r.evidence["perfect_ledger"] = ledger;
  json members = json::array();
  for (const CurveModel& d : pool) members.push_back(curve_summary(d));
  r.evidence["pool"] = members;
  clock.lap("perfect");

  if (o.name == "rational-quartic" && pool.size() >= 2) {
    const CurveModel& d0 = pool[1];
    GradedSubspace ic = c.ideal.piece(3), id = d0.ideal.piece(3), js = surface.jacobian.piece(3);
    r.evidence["cubic_ledger"] = {{"I_C3", ic.dim()},
                                  {"I_D0_3", id.dim()},
                                  {"intersection", ic.intersect(id).dim()},
                                  {"sum", ic.sum(id).dim()},
                                  {"J_S3", js.dim()},
                                  {"total", ic.sum(id).sum(js).dim()},
                                  {"alpha3", a.pieces[3].dim()}};
    json lattice = json::array();
    for (const LatticeSolution& l : lattice_classification(6)) {
      lattice.push_back({{"x", l.x}, {"y", l.y}, {"q", l.q}, {"a", l.a},
                         {"p", l.p}, {"m", l.m}, {"n", l.n}});
    }
    r.evidence["lattice"] = lattice;
    r.verdicts["lattice_a1_only"] = lattice.size() == 1 && lattice[0]["a"] == 1;
    r.verdicts["d0_class_equal"] = classes_equal(a, annihilator_apolar(d0, surface));
  }
  return r;
}

RunReport cmd_trials(const DemoOptions& o, int count) {
  if (count < 1) throw ArgumentError("count must be at least 1");
  std::vector<RunReport> runs(count);
  std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    DemoOptions t = o;
    t.seed = o.seed + static_cast<std::uint64_t>(i);
    try {
      runs[i] = cmd_demo(t);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }

  RunReport r;
  r.command = "trials " + o.name;
  r.prime = o.field.prime();
  r.seed = o.seed;
  r.curve = demo_curve_name(o);
  std::map<std::string, std::map<std::string, int>> counts;
  std::map<std::string, json> first_value;
  json error_list = json::array();
  double worst = 0;
  for (int i = 0; i < count; ++i) {
    if (!errors[i].empty()) {
      error_list.push_back({{"seed", o.seed + i}, {"error", errors[i]}});
      continue;
    }
    r.s = runs[i].s;
    double total = 0;
    for (const auto& [k, ms] : runs[i].timings) total += ms;
    worst = std::max(worst, total);
    for (const auto& [k, v] : runs[i].verdicts) {
      counts[k][v.dump()] += 1;
      first_value.emplace(k, v);
    }
  }
  r.verdicts["count"] = count;
  r.verdicts["errors"] = static_cast<int>(error_list.size());
  for (const auto& [k, values] : counts) {
    if (values.size() == 1 && values.begin()->second == count) {
      r.verdicts[k] = first_value[k];
    } else {
      r.verdicts[k] = "mixed";
      r.anomalies.push_back("verdict " + k + " is not uniform across trials");
    }
  }
  if (!error_list.empty()) r.anomalies.push_back(std::to_string(error_list.size()) + " trials failed");
  r.evidence["counts"] = counts;
  if (!error_list.empty()) r.evidence["errors"] = error_list;
  r.timings.emplace_back("slowest trial", worst);
  return r;
}

RunReport cmd_inspect(const std::string& ideal_path, const std::optional<std::string>& surface_path,
                      const PrimeField& field) {
  RunReport r;
  r.command = "inspect";
  r.prime = field.prime();
  Fixture fx = read_fixture(ideal_path, field);
  auto it = fx.header.find("name");
  r.curve = it != fx.header.end() ? it->second : ideal_path;
  Ideal ideal(field, fx.polynomials);
  std::vector<long long> hf;
  for (int n = 0; n <= 8; ++n) hf.push_back(ideal.hilbert_function(n));
  r.tables["hf"] = hf;
  std::vector<int> gen_degrees;
  for (const Polynomial& g : ideal.minimal_generators()) gen_degrees.push_back(g.degree());
  r.evidence["generator_degrees"] = gen_degrees;
  const HilbertSeries& hs = ideal.hilbert_series();
  r.verdicts["krull_dimension"] = hs.krull_dimension();
  r.verdicts["sC"] = ideal.is_zero() ? json() : json(minimal_surface_degree(ideal));
  if (hs.krull_dimension() == 2) {
    r.verdicts["degree"] = hs.multiplicity();
    r.verdicts["genus"] = hs.arithmetic_genus();
  }
  try {
    HilbertBurchData hb = hilbert_burch(ideal);
    r.verdicts["acm"] = true;
    r.evidence["hilbert_burch"] = {{"r", hb.r()}, {"a", hb.a_degrees}, {"b", hb.b_degrees}};
  } catch (const NotACM& e) {
    r.verdicts["acm"] = false;
    r.evidence["hilbert_burch"] = {{"generator_degrees", e.generator_degrees()},
                                   {"syzygy_degrees", e.syzygy_degrees()}};
  }
  if (surface_path) {
    Fixture sf = read_fixture(*surface_path, field);
    SurfaceModel surface = surface_from_equation(sf.polynomials.front());
    r.s = surface.s;
    r.surface_fingerprint = fingerprint(surface.f);
    CurveModel c{r.curve, ideal};
    c.sC = minimal_surface_degree(ideal);
    c.acm = r.verdicts["acm"].get<bool>();
    AnnihilatorClass a = annihilator_apolar(c, surface);
    r.tables["alpha_dims"] = widen(a.piece_dims());
    r.tables["quotient_hf"] = widen(a.quotient_hf());
    r.verdicts["zero_class"] = a.zero_class;
    r.verdicts["gorenstein"] = gorenstein_report(a).ok();
  }
  return r;
}

std::string catalog_fixture(const std::string& name, const PrimeField& field) {
  CurveModel c = catalog(name, field);
  Fixture fx;
  fx.header["name"] = c.name;
  fx.header["d"] = std::to_string(c.degree);
  fx.header["g"] = std::to_string(c.genus);
  fx.header["sC"] = std::to_string(c.sC);
  if (c.eC) fx.header["eC"] = std::to_string(*c.eC);
  fx.polynomials = c.ideal.minimal_generators();
  return format_fixture(fx);
}

}  // namespace nlc

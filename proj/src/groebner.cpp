#include "nlc/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

// For each monomial of degree n, the index of the first basis element whose
// leading monomial divides it, or -1 for standard monomials.
struct ReducerTable {
  const DegreeTable* table = nullptr;
  std::vector<int> reducer;
};

ReducerTable make_reducer_table(const std::vector<Polynomial>& basis, int n) {
  ReducerTable rt;
  rt.table = &degree_table(n);
  rt.reducer.assign(rt.table->size(), -1);
  for (int idx = 0; idx < rt.table->size(); ++idx) {
    const Monomial& m = (*rt.table)[idx];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Monomial& lt = basis[k].leading().mono;
      if (lt.degree() <= n && lt.divides(m)) {
        rt.reducer[idx] = static_cast<int>(k);
        break;
      }
    }
  }
  return rt;
}

// Full reduction of a dense degree-n vector by monic basis elements.
void reduce_dense(std::vector<Coeff>& v, const ReducerTable& rt,
                  const std::vector<Polynomial>& basis, const PrimeField& field) {
  const std::uint64_t p = field.prime();
  const DegreeTable& t = *rt.table;
  for (int idx = 0; idx < t.size(); ++idx) {
    Coeff c = v[idx];
    if (c == 0 || rt.reducer[idx] < 0) continue;
    const Polynomial& g = basis[rt.reducer[idx]];
    Monomial u = t[idx] / g.leading().mono;
    const std::uint64_t factor = p - c;
    for (const Term& term : g.terms()) {
      int j = t.index(u * term.mono);
      v[j] = static_cast<Coeff>((v[j] + factor * term.coeff) % p);
    }
  }
}

void add_scaled_shift(std::vector<Coeff>& v, const DegreeTable& t, const Polynomial& g,
                      const Monomial& u, Coeff c, const PrimeField& field) {
  for (const Term& term : g.terms()) {
    int j = t.index(u * term.mono);
    v[j] = field.add(v[j], field.mul(c, term.coeff));
  }
}

bool all_zero(const std::vector<Coeff>& v) {
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

void check_homogeneous(const Polynomial& p) {
  if (!p.is_homogeneous()) throw ArgumentError("non-homogeneous polynomial " + p.to_string());
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, int max_degree) {
  std::map<int, std::vector<Polynomial>> inputs;
  std::optional<PrimeField> field;
  for (const Polynomial& g : generators) {
    if (field && !(g.field() == *field)) throw ArgumentError("generators over different primes");
    field = g.field();
    if (g.is_zero()) continue;
    check_homogeneous(g);
    inputs[g.degree()].push_back(g);
  }
  if (inputs.empty()) return {};
  const PrimeField F = *field;

  std::vector<Polynomial> basis;
  std::vector<Monomial> lts;
  std::map<int, std::vector<Pair>> pairs;

  auto add_element = [&](Polynomial g) {
    int k = static_cast<int>(basis.size());
    lts.push_back(g.leading().mono);
    basis.push_back(std::move(g));
    for (int i = 0; i < k; ++i) {
      Monomial l = Monomial::lcm(lts[i], lts[k]);
      pairs[l.degree()].push_back({i, k, l});
    }
  };

  while (!inputs.empty() || !pairs.empty()) {
    int n = std::numeric_limits<int>::max();
    if (!inputs.empty()) n = inputs.begin()->first;
    if (!pairs.empty()) n = std::min(n, pairs.begin()->first);
    if (max_degree >= 0 && n > max_degree) break;

    const DegreeTable& t = degree_table(n);
    std::vector<std::vector<Coeff>> candidates;
    if (auto it = pairs.find(n); it != pairs.end()) {
      for (const Pair& pr : it->second) {
        if (lts[pr.i].coprime(lts[pr.j])) continue;
        bool chain = false;
        for (std::size_t k = 0; k < lts.size() && !chain; ++k) {
          if (static_cast<int>(k) == pr.i || static_cast<int>(k) == pr.j) continue;
          chain = lts[k].divides(pr.lcm) && !(Monomial::lcm(lts[pr.i], lts[k]) == pr.lcm) &&
                  !(Monomial::lcm(lts[pr.j], lts[k]) == pr.lcm);
        }
        if (chain) continue;
        std::vector<Coeff> v(t.size(), 0);
        add_scaled_shift(v, t, basis[pr.i], pr.lcm / lts[pr.i], 1, F);
        add_scaled_shift(v, t, basis[pr.j], pr.lcm / lts[pr.j], F.neg(1), F);
        candidates.push_back(std::move(v));
      }
      pairs.erase(it);
    }
    if (auto it = inputs.find(n); it != inputs.end()) {
      for (const Polynomial& g : it->second) candidates.push_back(to_dense(g, n));
      inputs.erase(it);
    }

    ReducerTable rt = make_reducer_table(basis, n);
    for (auto& v : candidates) {
      reduce_dense(v, rt, basis, F);
      if (all_zero(v)) continue;
      Polynomial g = from_dense(v, n, F).monic();
      rt.reducer[t.index(g.leading().mono)] = static_cast<int>(basis.size());
      add_element(std::move(g));
    }
  }

  // Tail-reduce. Elements are already minimal: each new leading monomial was
  // irreducible by all earlier ones, and degrees never decrease.
  std::map<int, std::vector<int>> by_degree;
  for (std::size_t k = 0; k < basis.size(); ++k) by_degree[basis[k].degree()].push_back(k);
  std::vector<Polynomial> reduced = basis;
  for (const auto& [n, members] : by_degree) {
    ReducerTable rt = make_reducer_table(basis, n);
    const DegreeTable& t = degree_table(n);
    for (int k : members) {
      int lt_idx = t.index(lts[k]);
      int saved = rt.reducer[lt_idx];
      rt.reducer[lt_idx] = -1;
      std::vector<Coeff> v = to_dense(basis[k], n);
      reduce_dense(v, rt, basis, F);
      rt.reducer[lt_idx] = saved;
      reduced[k] = from_dense(v, n, F);
    }
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading().mono < b.leading().mono;
  });
  return reduced;
}

DivisionResult normal_form_with_cofactors(const Polynomial& f,
                                          std::span<const Polynomial> divisors) {
  const PrimeField& F = f.field();
  DivisionResult result{Polynomial(F), std::vector<Polynomial>(divisors.size(), Polynomial(F))};
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lead = rest.leading();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& d = divisors[i];
      if (d.is_zero() || !d.leading().mono.divides(lead.mono)) continue;
      Monomial u = lead.mono / d.leading().mono;
      Coeff c = F.mul(lead.coeff, F.inv(d.leading().coeff));
      result.cofactors[i] += Polynomial::term(F, u, c);
      rest -= d.times_term(u, c);
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial lt = Polynomial::term(F, lead.mono, lead.coeff);
      result.remainder += lt;
      rest -= lt;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using Series = std::vector<long long>;

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

Series add_series(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
  return a;
}

// Numerator of the Hilbert series of R/(gens) over (1-t)^4; gens minimal.
Series numerator_of(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {0};
  bool coprime = true;
  std::array<int, kNumVars> count{};
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (int v = 0; v < kNumVars; ++v) count[v] += gens[a][v] > 0;
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b) {
      coprime = gens[a].coprime(gens[b]);
    }
  }
  if (coprime) {
    Series s{1};
    for (const Monomial& g : gens) {
      Series next(s.size() + g.degree(), 0);
      for (std::size_t k = 0; k < s.size(); ++k) {
        next[k] += s[k];
        next[k + g.degree()] -= s[k];
      }
      s = std::move(next);
    }
    return s;
  }
  int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = std::numeric_limits<int>::max();
  for (const Monomial& g : gens) {
    if (g[var] > 0) e = std::min(e, g[var]);
  }
  std::array<int, kNumVars> pe{};
  pe[var] = e;
  Monomial pivot(pe[0], pe[1], pe[2], pe[3]);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  minimalize(with_pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const Monomial& g : gens) colon.push_back(g / Monomial::gcd(g, pivot));
  minimalize(colon);
  return add_series(numerator_of(std::move(with_pivot)), numerator_of(std::move(colon)), e);
}

long long binom_poly(long long x, int r) {
  // x choose r as a polynomial in x; exact for integer x.
  long long num = 1;
  long long den = 1;
  for (int i = 0; i < r; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace

HilbertSeries HilbertSeries::of_monomial_ideal(std::vector<Monomial> monomials) {
  minimalize(monomials);
  HilbertSeries hs;
  Series n = numerator_of(std::move(monomials));
  int d = kNumVars;
  auto at_one = [](const Series& s) {
    long long v = 0;
    for (long long c : s) v += c;
    return v;
  };
  bool zero = std::all_of(n.begin(), n.end(), [](long long c) { return c == 0; });
  if (zero) {
    hs.numerator_ = {};
    hs.dimension_ = 0;
    return hs;
  }
  while (d > 0 && at_one(n) == 0) {
    // synthetic division by (1 - t)
    Series q(n.size() - 1, 0);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      acc += n[k];
      q[k] = acc;
    }
    n = std::move(q);
    --d;
  }
  while (n.size() > 1 && n.back() == 0) n.pop_back();
  hs.numerator_ = std::move(n);
  hs.dimension_ = d;
  return hs;
}

long long HilbertSeries::value(int n) const {
  if (n < 0) return 0;
  if (dimension_ == 0) return n < static_cast<int>(numerator_.size()) ? numerator_[n] : 0;
  long long v = 0;
  for (int k = 0; k < static_cast<int>(numerator_.size()) && k <= n; ++k) {
    v += numerator_[k] * binom_poly(n - k + dimension_ - 1, dimension_ - 1);
  }
  return v;
}

long long HilbertSeries::polynomial_value(int n) const {
  if (dimension_ == 0) return 0;
  long long v = 0;
  for (int k = 0; k < static_cast<int>(numerator_.size()); ++k) {
    v += numerator_[k] * binom_poly(static_cast<long long>(n) - k + dimension_ - 1, dimension_ - 1);
  }
  return v;
}

int HilbertSeries::regularity_index() const {
  int n = std::max(0, static_cast<int>(numerator_.size()) - 1 - dimension_ + 1);
  while (n > 0 && value(n - 1) == polynomial_value(n - 1)) --n;
  return n;
}

long long HilbertSeries::multiplicity() const {
  long long v = 0;
  for (long long c : numerator_) v += c;
  return v;
}

long long HilbertSeries::arithmetic_genus() const {
  if (dimension_ != 2) throw ArgumentError("arithmetic genus needs a one-dimensional scheme");
  return 1 - polynomial_value(0);
}

// ---------------------------------------------------------------------------
// Ideal

namespace {

// Normal forms of every monomial of degree n, in coordinates of the
// standard monomials of that degree.
struct NormalFormTable {
  std::vector<int> standard;      // monomial indices that are standard
  std::vector<int> position;      // monomial index -> column in `nf`, or -1
  std::vector<int> reducer;       // monomial index -> basis element, or -1
  Matrix nf;                      // rows: all monomials of degree n
};

}  // namespace

struct Ideal::State {
  PrimeField field;
  std::vector<Polynomial> gens;
  std::recursive_mutex mutex;
  std::optional<std::vector<Polynomial>> gb;
  std::optional<HilbertSeries> hs;
  std::map<int, GradedSubspace> pieces;
  std::map<int, NormalFormTable> nf_tables;

  const std::vector<Polynomial>& groebner() {
    std::lock_guard lock(mutex);
    if (!gb) gb = groebner_basis(gens);
    return *gb;
  }

  const NormalFormTable& nf_table(int n) {
    std::lock_guard lock(mutex);
    if (auto it = nf_tables.find(n); it != nf_tables.end()) return it->second;
    const auto& basis = groebner();
    ReducerTable rt = make_reducer_table(basis, n);
    const DegreeTable& t = *rt.table;
    NormalFormTable tab;
    tab.reducer = rt.reducer;
    tab.position.assign(t.size(), -1);
    for (int idx = 0; idx < t.size(); ++idx) {
      if (rt.reducer[idx] < 0) {
        tab.position[idx] = static_cast<int>(tab.standard.size());
        tab.standard.push_back(idx);
      }
    }
    const int cols = static_cast<int>(tab.standard.size());
    tab.nf = Matrix(t.size(), cols);
    // Tail monomials of a reducer are smaller, hence have larger indices, so
    // filling from the last index backwards only reads finished rows.
    for (int idx = t.size() - 1; idx >= 0; --idx) {
      if (tab.position[idx] >= 0) {
        tab.nf.at(idx, tab.position[idx]) = 1;
        continue;
      }
      const Polynomial& g = basis[rt.reducer[idx]];
      Monomial u = t[idx] / g.leading().mono;
      auto row = tab.nf.row(idx);
      for (std::size_t k = 1; k < g.terms().size(); ++k) {
        const Term& term = g.terms()[k];
        auto src = tab.nf.row(t.index(u * term.mono));
        Coeff c = field.neg(term.coeff);
        for (int j = 0; j < cols; ++j) {
          if (src[j] != 0) row[j] = field.add(row[j], field.mul(c, src[j]));
        }
      }
    }
    return nf_tables.emplace(n, std::move(tab)).first->second;
  }
};

Ideal::Ideal(PrimeField field, std::vector<Polynomial> generators)
    : state_(std::make_shared<State>()) {
  state_->field = field;
  for (Polynomial& g : generators) {
    if (!(g.field() == field)) throw ArgumentError("generator over a different prime");
    if (g.is_zero()) continue;
    check_homogeneous(g);
    state_->gens.push_back(std::move(g));
  }
}

Ideal::Ideal(std::vector<Polynomial> generators)
    : Ideal(generators.empty() ? PrimeField() : generators.front().field(),
            std::move(generators)) {}

Ideal Ideal::zero(PrimeField field) { return Ideal(field, {}); }
Ideal Ideal::unit(PrimeField field) { return Ideal(field, {Polynomial::constant(field, 1)}); }
Ideal Ideal::irrelevant(PrimeField field) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < kNumVars; ++i) vars.push_back(Polynomial::variable(field, i));
  return Ideal(field, std::move(vars));
}

const PrimeField& Ideal::field() const { return state_->field; }
const std::vector<Polynomial>& Ideal::generators() const { return state_->gens; }
const std::vector<Polynomial>& Ideal::groebner() const { return state_->groebner(); }

int Ideal::max_groebner_degree() const {
  int d = -1;
  for (const Polynomial& g : groebner()) d = std::max(d, g.degree());
  return d;
}

GradedSubspace Ideal::piece(int n) const {
  if (n < 0) throw ArgumentError("negative degree");
  std::lock_guard lock(state_->mutex);
  if (auto it = state_->pieces.find(n); it != state_->pieces.end()) return it->second;
  const NormalFormTable& tab = state_->nf_table(n);
  const PrimeField& F = state_->field;
  const int size = dim_R(n);
  // u - NF(u) for each non-standard u: pivots at u, other entries only in
  // standard columns, so the rows are already in reduced echelon form.
  Matrix rows(0, size);
  std::vector<Coeff> v(size);
  for (int idx = 0; idx < size; ++idx) {
    if (tab.position[idx] >= 0) continue;
    std::fill(v.begin(), v.end(), 0);
    v[idx] = 1;
    auto nf = tab.nf.row(idx);
    for (std::size_t j = 0; j < tab.standard.size(); ++j) {
      if (nf[j] != 0) v[tab.standard[j]] = F.neg(nf[j]);
    }
    rows.append_row(v);
  }
  GradedSubspace s = GradedSubspace::from_rows(F, n, std::move(rows));
  state_->pieces.emplace(n, s);
  return s;
}

const HilbertSeries& Ideal::hilbert_series() const {
  std::lock_guard lock(state_->mutex);
  if (!state_->hs) {
    std::vector<Monomial> lts;
    for (const Polynomial& g : groebner()) lts.push_back(g.leading().mono);
    state_->hs = HilbertSeries::of_monomial_ideal(std::move(lts));
  }
  return *state_->hs;
}

int Ideal::hilbert_function(int n) const {
  return static_cast<int>(hilbert_series().value(n));
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!(f.field() == field())) throw ArgumentError("polynomial over a different prime");
  std::map<int, std::vector<Term>> parts;
  for (const Term& t : f.terms()) parts[t.mono.degree()].push_back(t);
  const PrimeField& F = field();
  Polynomial out(F);
  for (auto& [n, terms] : parts) {
    const NormalFormTable& tab = state_->nf_table(n);
    const DegreeTable& t = degree_table(n);
    std::vector<Coeff> acc(tab.standard.size(), 0);
    for (const Term& term : terms) {
      auto row = tab.nf.row(t.index(term.mono));
      for (std::size_t j = 0; j < acc.size(); ++j) {
        if (row[j] != 0) acc[j] = F.add(acc[j], F.mul(term.coeff, row[j]));
      }
    }
    std::vector<Term> nf_terms;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (acc[j] != 0) nf_terms.push_back({t[tab.standard[j]], acc[j]});
    }
    out += Polynomial::from_terms(F, std::move(nf_terms));
  }
  return out;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::operator==(const Ideal& other) const {
  return field() == other.field() && groebner() == other.groebner();
}

bool Ideal::is_zero() const { return generators().empty(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return !gb.empty() && gb.front().degree() == 0;
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  std::vector<Polynomial> sorted = generators();
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Polynomial> minimal;
  std::optional<GradedSubspace> span;
  int current = -1;
  for (const Polynomial& g : sorted) {
    int n = g.degree();
    if (n != current) {
      current = n;
      span = n == 0 ? GradedSubspace(field(), 0) : piece(n - 1).times_monomials(1);
    }
    if (span->contains(g)) continue;
    minimal.push_back(g);
    std::vector<Polynomial> one = {g};
    span = span->sum(GradedSubspace::from_polys(one, n, field()));
  }
  return minimal;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.field(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) {
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.field(), std::move(gens));
}

namespace {

// (I : J)_n as the left kernel of u -> (NF_I(u h))_h.
GradedSubspace quotient_piece(const Ideal& I, const std::vector<Polynomial>& hs, int n) {
  const PrimeField& F = I.field();
  const DegreeTable& src = degree_table(n);
  std::vector<Matrix> blocks;
  int total_cols = 0;
  for (const Polynomial& h : hs) {
    int d = h.degree();
    GradedSubspace piece = I.piece(n + d);
    // Coordinates modulo I_{n+d}: project onto the non-pivot columns after
    // reducing by the RREF basis of the piece.
    const DegreeTable& dst = degree_table(n + d);
    std::vector<int> free_cols;
    std::vector<char> is_pivot(dst.size(), 0);
    for (int c : piece.pivots()) is_pivot[c] = 1;
    for (int c = 0; c < dst.size(); ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix block(src.size(), static_cast<int>(free_cols.size()));
    std::vector<Coeff> v(dst.size());
    for (int idx = 0; idx < src.size(); ++idx) {
      std::fill(v.begin(), v.end(), 0);
      for (const Term& t : h.terms()) v[dst.index(src[idx] * t.mono)] = t.coeff;
      // reduce by the piece basis
      for (int k = 0; k < piece.dim(); ++k) {
        Coeff c = v[piece.pivots()[k]];
        if (c == 0) continue;
        auto row = piece.basis().row(k);
        Coeff factor = F.neg(c);
        for (int j = 0; j < dst.size(); ++j) {
          if (row[j] != 0) v[j] = F.add(v[j], F.mul(factor, row[j]));
        }
      }
      for (std::size_t j = 0; j < free_cols.size(); ++j) block.at(idx, j) = v[free_cols[j]];
    }
    total_cols += block.cols();
    blocks.push_back(std::move(block));
  }
  Matrix m(src.size(), total_cols);
  int offset = 0;
  for (const Matrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i) {
      for (int j = 0; j < b.cols(); ++j) m.at(i, offset + j) = b.at(i, j);
    }
    offset += b.cols();
  }
  return GradedSubspace::from_rows(F, n, left_kernel(m, F));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J, QuotientInfo* info) {
  const PrimeField& F = I.field();
  if (!(J.field() == F)) throw ArgumentError("ideals over different primes");
  QuotientInfo local;
  QuotientInfo& out = info ? *info : local;
  out = QuotientInfo{};
  std::vector<Polynomial> hs = J.generators();
  if (hs.empty()) {
    out.by_zero_ideal = true;
    return Ideal::unit(F);
  }
  if (I.is_unit() || I.contains(J)) return Ideal::unit(F);

  int bound = I.max_groebner_degree();
  for (const Polynomial& h : hs) bound = std::max(bound, h.degree());

  std::vector<Polynomial> gens;
  GradedSubspace prev(F, 0);
  int quiet = 0;
  int n = 0;
  for (;; ++n) {
    GradedSubspace q = quotient_piece(I, hs, n);
    std::vector<char> lower_pivot(dim_R(n), 0);
    if (n > 0) {
      GradedSubspace lower = prev.times_monomials(1);
      for (int c : lower.pivots()) lower_pivot[c] = 1;
    }
    // Rows of the RREF basis whose pivots are not leading positions of
    // R_1 * Q_{n-1} complete it to a basis of Q_n.
    int added = 0;
    for (int k = 0; k < q.dim(); ++k) {
      if (lower_pivot[q.pivots()[k]]) continue;
      gens.push_back(from_dense(q.basis().row(k), n, F));
      ++added;
    }
    prev = std::move(q);
    if (n >= bound) {
      quiet = added ? 0 : quiet + 1;
      if (quiet >= 2) break;
    }
    if (n > bound + 24) break;
  }
  out.degrees_checked = n;
  return Ideal(F, std::move(gens));
}

Ideal saturate(const Ideal& I) {
  Ideal current = I;
  Ideal m = Ideal::irrelevant(I.field());
  for (int iter = 0; iter < 64; ++iter) {
    Ideal next = ideal_quotient(current, m);
    if (next == current) return current;
    current = std::move(next);
  }
  throw DegenerateInput("saturation did not stabilize");
}

GradedSubspace graded_piece(const Ideal& I, int n) { return I.piece(n); }
int hilbert_function(const Ideal& I, int n) { return I.hilbert_function(n); }

ArtinianInfo is_artinian(const Ideal& I) {
  const HilbertSeries& hs = I.hilbert_series();
  ArtinianInfo info;
  if (!hs.is_artinian()) return info;
  info.artinian = true;
  info.socle_degree = -1;
  for (int n = 0; n < static_cast<int>(hs.numerator().size()); ++n) {
    if (hs.value(n) != 0) info.socle_degree = n;
  }
  for (int k = 1; k <= 4; ++k) {
    if (I.hilbert_function(info.socle_degree + k) != 0) {
      throw DegenerateInput("Hilbert function does not stay zero past the socle degree");
    }
  }
  return info;
}

GenerationTest generated_in_degrees_leq(const Ideal& I, int m) {
  GenerationTest result;
  std::vector<Polynomial> low;
  for (const Polynomial& g : I.minimal_generators()) {
    if (g.degree() <= m) low.push_back(g);
  }
  Ideal J(I.field(), low);
  int reg = I.is_zero() ? 0 : I.hilbert_series().regularity_index();
  result.checked_up_to = std::max({m, reg, I.max_groebner_degree()}) + 2;
  for (int n = 0; n <= result.checked_up_to; ++n) {
    if (J.hilbert_function(n) != I.hilbert_function(n)) {
      result.first_failure = n;
      return result;
    }
  }
  result.generated = true;
  return result;
}

Ideal minors_ideal(const PolyMatrix& m, int r) {
  return Ideal(m.field(), all_minors(m, r));
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, std::span<const Polynomial> gens) {
  const PrimeField& F = f.field();
  if (f.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial(F));
  DivisionResult div = normal_form_with_cofactors(f, gens);
  if (div.remainder.is_zero()) return div.cofactors;
  const int s = f.degree();
  const DegreeTable& target = degree_table(s);
  Matrix rows(0, target.size());
  std::vector<std::pair<int, Monomial>> labels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int k = s - gens[i].degree();
    if (gens[i].is_zero() || k < 0) continue;
    for (const Monomial& u : monomial_basis(k)) {
      rows.append_row(to_dense(gens[i].times_term(u, 1), s));
      labels.emplace_back(static_cast<int>(i), u);
    }
  }
  if (rows.rows() == 0) return std::nullopt;
  auto c = solve_left(rows, to_dense(f, s), F);
  if (!c) return std::nullopt;
  std::vector<Polynomial> cofactors(gens.size(), Polynomial(F));
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if ((*c)[r] == 0) continue;
    cofactors[labels[r].first] += Polynomial::term(F, labels[r].second, (*c)[r]);
  }
  return cofactors;
}

}  // namespace nlc

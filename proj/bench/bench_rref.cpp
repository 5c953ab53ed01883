// Serial vs OpenMP row reduction on dense random matrices over F_32003,
// plus the Macaulay matrix of the twisted cubic in a high degree.

#include <benchmark/benchmark.h>

#include "nlc/groebner.hpp"
#include "nlc/random.hpp"

namespace {

nlc::Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  nlc::PrimeField F;
  nlc::Rng rng(seed);
  nlc::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.coeff(F);
  }
  return m;
}

template <std::vector<int> (*Kernel)(nlc::Matrix&, const nlc::PrimeField&)>
void BM_dense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nlc::PrimeField F;
  const nlc::Matrix base = random_matrix(n, n, 1);
  for (auto _ : state) {
    nlc::Matrix m = base;
    benchmark::DoNotOptimize(Kernel(m, F));
  }
  state.SetComplexityN(n);
}

template <std::vector<int> (*Kernel)(nlc::Matrix&, const nlc::PrimeField&)>
void BM_macaulay(benchmark::State& state) {
  nlc::PrimeField F;
  const int n = static_cast<int>(state.range(0));
  std::vector<nlc::Polynomial> gens{nlc::Polynomial::parse("x*z - y^2"), nlc::Polynomial::parse("x*w - y*z"),
                                    nlc::Polynomial::parse("y*w - z^2")};
  const nlc::DegreeTable& target = nlc::degree_table(n);
  const nlc::DegreeTable& shifts = nlc::degree_table(n - 2);
  nlc::Matrix base(0, target.size());
  std::vector<nlc::Coeff> row(target.size());
  for (const nlc::Polynomial& g : gens) {
    for (const nlc::Monomial& u : shifts.monomials()) {
      std::fill(row.begin(), row.end(), 0);
      for (const nlc::Term& t : g.terms()) row[target.index(u * t.mono)] = t.coeff;
      base.append_row(row);
    }
  }
  for (auto _ : state) {
    nlc::Matrix m = base;
    benchmark::DoNotOptimize(Kernel(m, F));
  }
}

}  // namespace

BENCHMARK(BM_dense<nlc::rref_serial>)->Name("rref_serial/dense")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_dense<nlc::rref_parallel>)->Name("rref_parallel/dense")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_macaulay<nlc::rref_serial>)->Name("rref_serial/macaulay_twisted_cubic")->DenseRange(8, 14, 3);
BENCHMARK(BM_macaulay<nlc::rref_parallel>)->Name("rref_parallel/macaulay_twisted_cubic")->DenseRange(8, 14, 3);

BENCHMARK_MAIN();

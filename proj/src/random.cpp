#include "nlc/random.hpp"

#include <limits>

namespace nlc {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  for (;;) {
    std::uint64_t v = engine_();
    if (v < limit) return v % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Polynomial random_form(const PrimeField& field, int degree, Rng& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomial_basis(degree)) terms.push_back({m, rng.coeff(field)});
  return Polynomial::from_terms(field, std::move(terms));
}

}  // namespace nlc

#pragma once

#include <cstdint>
#include <random>

#include "nlc/polynomial.hpp"

namespace nlc {

/// mt19937_64 with explicit rejection sampling, so draws are identical on
/// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  Coeff coeff(const PrimeField& field) { return static_cast<Coeff>(below(field.prime())); }

 private:
  std::mt19937_64 engine_;
};

/// Independent seed for sub-stream `stream` of `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Form of the given degree with independent uniform coefficients.
Polynomial random_form(const PrimeField& field, int degree, Rng& rng);

}  // namespace nlc

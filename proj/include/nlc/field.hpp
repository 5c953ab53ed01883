#pragma once

#include <cstdint>

namespace nlc {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ for a prime p < 2^31. Values are kept in [0, p).
class PrimeField {
 public:
  static constexpr Coeff kDefaultPrime = 32003;
  static constexpr Coeff kDefaultCheckPrime = 32009;

  /// Throws ArgumentError unless p is a prime below 2^31.
  explicit PrimeField(Coeff p = kDefaultPrime);

  Coeff prime() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;

  Coeff from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Coeff p_;
};

}  // namespace nlc

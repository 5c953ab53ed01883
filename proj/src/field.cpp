#include "nlc/field.hpp"

#include <string>

#include "nlc/errors.hpp"

namespace nlc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p >= (Coeff(1) << 31) || !is_prime(p)) {
    throw ArgumentError("field characteristic must be a prime below 2^31, got " +
                        std::to_string(p));
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw ArgumentError("inverse of zero");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
}

}  // namespace nlc

#include <cmath>
#include <numeric>

#include "nlc/catalog.hpp"
#include "nlc/errors.hpp"

namespace nlc {

N0Data n0_of_degree(int d) {
  if (d < 3) throw ArgumentError("n0 needs d >= 3");
  for (long long n = 1;; ++n) {
    long long binom = (n + 3) * (n + 2) * (n + 1) / 6;
    if (binom - n * d - 1 >= 0) return {static_cast<int>(n), static_cast<int>(n) + 3};
  }
}

int n0_closed_form(int d) {
  if (d < 3) throw ArgumentError("n0 needs d >= 3");
  const long long target = 6LL * d - 2;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(target)));
  while (r * r < target) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= target) --r;
  return static_cast<int>(std::max(1LL, r - 3));
}

long long lattice_determinant(long long x, long long y, long long q) {
  return x * x + 4 * x * y - 2 * y * y - 24 * q;
}

std::vector<LatticeSolution> lattice_classification(int max_deg) {
  std::vector<LatticeSolution> out;
  for (int x = 1; x <= max_deg; ++x) {
    // q >= -x bounds |y| by 4x + 24
    for (int y = 0; y <= 4 * x + 24; ++y) {
      long long num = static_cast<long long>(x) * x + 4LL * x * y - 2LL * y * y;
      if (num % 24 != 0) continue;
      const int q = static_cast<int>(num / 24);
      if (q < -x) continue;  // p_a of a reduced curve of degree x is >= 1 - x
      // kernel of M: cross product of its first two rows
      long long p = 4LL * y + 2LL * x, m = 4LL * x - 4LL * y, n = -24;
      long long g = std::gcd(std::gcd(p, m), n);
      p /= g, m /= g, n /= g;
      if (n < 0) p = -p, m = -m, n = -n;
      if (m == 0 || std::gcd(m, n) != 1) continue;
      LatticeSolution s;
      s.x = x, s.y = y, s.q = q, s.t = y / 2;
      s.p = static_cast<int>(p), s.m = static_cast<int>(m), s.n = static_cast<int>(n);
      if ((2 - q) % 3 == 0 && 2 - q >= 0) {
        int a = static_cast<int>(std::lround(std::sqrt((2.0 - q) / 3.0)));
        if (3 * a * a == 2 - q) s.a = a;
      }
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace nlc

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlc/groebner.hpp"
#include "nlc/polymatrix.hpp"

namespace nlc {

/// A homogeneous relation sum_i components[i] * gens[i] = 0 of degree
/// `degree`; components[i] is zero or of degree degree - deg gens[i].
struct Syzygy {
  int degree;
  std::vector<Polynomial> components;
};

struct SyzygyResult {
  std::vector<Syzygy> generators;
  int checked_up_to = 0;
};

/// Minimal generators of the first syzygy module, found degree by degree as
/// kernels of Macaulay matrices. The scan runs at least to the larger of the
/// two largest generator degrees summed and the Groebner degree plus one,
/// then stops after three consecutive degrees with no new generator.
SyzygyResult syzygies(std::span<const Polynomial> gens);

/// Thrown by hilbert_burch when the first syzygies do not form a free module
/// of rank (#generators - 1).
class NotACM : public std::runtime_error {
 public:
  NotACM(const std::string& why, std::vector<int> generator_degrees,
         std::vector<int> syzygy_degrees);
  const std::vector<int>& generator_degrees() const { return generator_degrees_; }
  const std::vector<int>& syzygy_degrees() const { return syzygy_degrees_; }

 private:
  std::vector<int> generator_degrees_;
  std::vector<int> syzygy_degrees_;
};

/// Resolution 0 -> (+) R(-b_j) --phi--> (+) R(-a_i) -> I_C -> 0 of a
/// codimension-two arithmetically Cohen-Macaulay ideal.
struct HilbertBurchData {
  PolyMatrix phi;                      ///< (r+1) x r
  std::vector<int> a_degrees;          ///< generator degrees, length r+1
  std::vector<int> b_degrees;          ///< syzygy degrees, length r
  std::vector<Polynomial> generators;  ///< minimal generators h_i of I_C
  int r() const { return static_cast<int>(b_degrees.size()); }
};

/// Verifies the degree balance, the Euler characteristic of the complex up to
/// max b_j + 3, and fixes the column scaling so that the minor with row i
/// deleted equals (-1)^i h_i. Throws NotACM otherwise.
HilbertBurchData hilbert_burch(const Ideal& curve_ideal);

/// phi with the column of cofactors of the surface equation appended.
struct PsiData {
  PolyMatrix psi;                    ///< (r+1) x (r+1)
  std::vector<Polynomial> g_column;  ///< f = sum g_i h_i
  int s;
};

/// Builds psi = [phi | (-1)^r g] so that det(psi) = f exactly. Throws
/// MembershipError when f is not in I_C.
PsiData build_psi(const HilbertBurchData& hb, const Polynomial& f);

}  // namespace nlc

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlc/groebner.hpp"

namespace nlc {

/// A curve in P^3 together with the numeric data the reconstruction and
/// perfectness criteria consume. Cohomological rules are only known for
/// catalog curves and for ACM residuals.
struct CurveModel {
  std::string name;
  Ideal ideal;  ///< saturated
  int degree = 0;
  int genus = 0;
  bool acm = false;
  int sC = 0;
  std::optional<int> eC{};
  std::function<long long(int)> h0_OC{};       ///< n -> h^0(O_C(n))
  std::function<bool(int)> normal_vanishing{};  ///< n -> [h^0(N_C(n)) = 0]
  std::optional<int> link_degree{};             ///< k when this curve is ~ kH - C
};

/// Catalog names: twisted_cubic, rational_quartic_31, line, conic and
/// complete_intersection(d1,d2). Throws ArgumentError on anything else.
CurveModel catalog(std::string_view name, const PrimeField& field = PrimeField());
CurveModel complete_intersection(int d1, int d2, const PrimeField& field = PrimeField());
std::vector<std::string> catalog_names();

struct SurfaceModel {
  Polynomial f;
  int s = 0;
  Ideal jacobian;
  int attempts = 1;  ///< draws needed to hit a smooth surface
};

SurfaceModel surface_from_equation(const Polynomial& f);

/// f = sum u_i h_i over the minimal generators h_i of I_C with random u_i,
/// redrawn until J_S is artinian. Throws ArgumentError for s < s(C) and
/// DegenerateInput when no smooth surface turns up within max_attempts.
SurfaceModel random_surface_containing(const CurveModel& curve, int s, std::uint64_t seed,
                                       int max_attempts = 16);

/// Residual curve (f, g) : I_C, the unit ideal (degree 0) when C is all of
/// V(g) n S. Throws MembershipError when g is not in I_C and DegenerateInput
/// when V(g) and S share a component.
CurveModel residual(const CurveModel& curve, const SurfaceModel& surface, const Polynomial& g);

/// Smallest n with (I)_n != 0.
int minimal_surface_degree(const Ideal& ideal);

struct SpecialityData {
  int eC;
  int sC;
};
/// e(C) = max{n : h^1(O_C(n)) > 0} from the h0 rule. Throws ArgumentError
/// for curves without one.
SpecialityData speciality_and_minimal_degree(const CurveModel& curve);

/// h^1(J_C(n)) = h^0(O_C(n)) - HF(R/I_C, n).
long long h1_ideal_sheaf(const CurveModel& curve, int n);

struct CriterionReport {
  int h1_twist = 0;  ///< 2s - 4 - p
  long long h1_value = 0;
  bool h1_vanishes = false;
  int normal_twist = 0;  ///< p - s
  bool normal_vanishes = false;
  bool generated = false;  ///< I_C generated in degrees <= p
  bool holds() const { return h1_vanishes && normal_vanishes && generated; }
};

/// The three sufficient conditions for reconstruction at level p. Throws
/// ArgumentError for curves without cohomology rules.
CriterionReport reconstruction_criterion(const CurveModel& curve, const SurfaceModel& surface,
                                         int p);

/// Whether s >= 2 e(C) + 8 - s(C), the range where an ACM curve is
/// reconstructed at level e(C) + 3.
bool acm_bound_applies(const CurveModel& curve, int s);

struct N0Data {
  int n0;
  int min_surface_degree;  ///< n0 + 3
};
/// Smallest positive n with binom(n+3,3) - n d - 1 >= 0. Throws
/// ArgumentError for d < 3.
N0Data n0_of_degree(int d);
/// Same value from (n+3)^2 >= 6d - 2 in integer arithmetic.
int n0_closed_form(int d);

/// Intersection data of a divisor D on a quartic surface containing a
/// rational quartic C (H^2 = 4, C.H = 4, C^2 = -2).
struct LatticeSolution {
  int x = 0;  ///< H.D
  int y = 0;  ///< C.D
  int q = 0;  ///< p_a(D) - 1, D^2 = 2q
  int a = -1;
  int t = 0;  ///< y / 2
  int p = 0, m = 0, n = 0;  ///< m C + n D + p H ~ 0, primitive, n > 0
};

/// det M / 2 for M = [[4,4,x],[4,-2,y],[x,y,2q]].
long long lattice_determinant(long long x, long long y, long long q);

/// All (x, y, q) with 1 <= x <= max_deg, y >= 0, q >= -x and vanishing
/// determinant whose primitive kernel vector has m, n nonzero and coprime.
std::vector<LatticeSolution> lattice_classification(int max_deg);

}  // namespace nlc

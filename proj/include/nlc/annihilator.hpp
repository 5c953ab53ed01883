#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlc/catalog.hpp"

namespace nlc {

/// The annihilator I_alpha of a class alpha on a smooth surface of degree s,
/// stored through its graded pieces in degrees 0..2s-4. It depends only on
/// the hyperplane ker(alpha) in R_{2s-4}.
struct AnnihilatorClass {
  int s = 0;
  int socle_degree = 0;  ///< 2s - 4
  bool zero_class = false;
  std::optional<GradedSubspace> kernel_hyperplane;
  std::vector<GradedSubspace> pieces;  ///< index n = 0..socle_degree
  std::string surface_tag;             ///< fingerprint of the reduced basis of J_S
  int links_used = 0;                  ///< linked curves needed to pin the hyperplane

  /// dim R_n - dim pieces[n]
  std::vector<int> quotient_hf() const;
  std::vector<int> piece_dims() const;
};

/// I_alpha as the r x r minors of psi = [phi | (-1)^r g]. Throws NotACM for
/// non-ACM curves and ArgumentError for a singular surface.
AnnihilatorClass annihilator_acm(const CurveModel& curve, const SurfaceModel& surface);

/// I_alpha from its kernel hyperplane in R_{2s-4}: pieces[n] is the set of f
/// with f R_{2s-4-n} inside it. The hyperplane contains (I_C + J_S)_{2s-4}
/// and the ideals of all curves D with C + D ~ kH. When I_C + J_S leaves
/// codimension >= 2, residuals of C in V(g) n S for g in I_{C,k},
/// s(C) <= k <= s, are added until it drops to 1. Codimension 0 gives the
/// zero class; codimension still >= 2 throws IndeterminateClass.
AnnihilatorClass annihilator_apolar(const CurveModel& curve, const SurfaceModel& surface);

/// Same construction from explicit ideals, all assumed to carry one class.
AnnihilatorClass annihilator_from_ideals(std::span<const Ideal> ideals, const Ideal& jacobian, int s);

/// Class with the given kernel hyperplane in R_{2s-4}.
AnnihilatorClass class_from_hyperplane(const GradedSubspace& hyperplane, int s, std::string surface_tag);

std::string surface_tag(const Ideal& jacobian);

struct GorensteinReport {
  bool symmetric = false;
  bool socle_one_dimensional = false;
  std::vector<int> hf;
  bool ok() const { return symmetric && socle_one_dimensional; }
};
/// Symmetry of the quotient Hilbert function and a one-dimensional top
/// degree. The zero class reports an all-zero function and ok() false.
GorensteinReport gorenstein_report(const AnnihilatorClass& a);

/// Equal hyperplanes. Throws ArgumentError when the classes live on
/// different surfaces.
bool classes_equal(const AnnihilatorClass& a, const AnnihilatorClass& b);

struct ReconstructionVerdict {
  int level = 0;
  bool reconstructed = false;
  bool equal_before_saturation = false;
  std::vector<int> alpha_dims;      ///< dim pieces[n], n <= level
  std::vector<int> curve_dims;      ///< dim I_{C,n}, n <= level
  std::vector<int> generated_dims;  ///< ideal generated by the pieces, n <= level + 2
  std::vector<int> saturated_dims;  ///< its saturation, same range
};

/// Whether the saturation of the ideal generated by pieces[0..m] is I_C.
ReconstructionVerdict reconstruct_check(const CurveModel& curve, const AnnihilatorClass& a, int m);

struct PerfectRow {
  int degree = 0;
  int pool_dim = 0;   ///< dim(sum_D I_{D,j} + J_{S,j})
  int alpha_dim = 0;  ///< dim pieces[j]
};

struct PerfectVerdict {
  int level = 0;
  bool perfect = false;
  int first_failure = -1;
  std::vector<PerfectRow> ledger;
  std::vector<std::string> accepted;
  std::vector<std::string> rejected;  ///< pool members of a different class
};

/// Compares sum_D I_{D,j} + J_{S,j} with pieces[j] for j <= m over the pool
/// members whose class equals a. The zero class is perfect.
PerfectVerdict perfect_check(const AnnihilatorClass& a, const std::vector<CurveModel>& pool,
                             const SurfaceModel& surface, int m);

/// Residuals of C in V(g) n S for a basis g of I_{C,k}, s(C) <= k <= max_link_degree,
/// deduplicated. With double_links the residuals are linked once more in the
/// same range. Every member is checked to carry the class of C.
std::vector<CurveModel> liaison_pool(const CurveModel& curve, const SurfaceModel& surface,
                                     int max_link_degree, bool double_links = false);

}  // namespace nlc

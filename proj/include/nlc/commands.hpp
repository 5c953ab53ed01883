#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nlc/annihilator.hpp"
#include "nlc/report.hpp"

namespace nlc {

struct DemoOptions {
  std::string name;  ///< twisted-cubic, rational-quartic or acm-ci
  PrimeField field;
  std::uint64_t seed = 7;
  int s = 0;  ///< 0: 4 for the rational curves, 6 for acm-ci
  int d1 = 2;
  int d2 = 2;
  std::optional<int> level;  ///< perfectness / reconstruction level
};

/// catalog -> random smooth surface -> annihilator (both paths when the
/// curve is ACM) -> reconstruction scan -> perfect_check over C and its
/// liaison pool. The rational quartic additionally reports the cubic ledger
/// and the lattice classification that bounds the pool.
RunReport cmd_demo(const DemoOptions& options);

/// `count` demos with seeds seed, seed+1, ...; verdicts are tallied and any
/// verdict taking more than one value is reported as an anomaly.
RunReport cmd_trials(const DemoOptions& options, int count);

/// Hilbert function, generator degrees, s(C) and the Hilbert-Burch attempt
/// for an ideal fixture; with a surface fixture also the annihilator table.
RunReport cmd_inspect(const std::string& ideal_path, const std::optional<std::string>& surface_path,
                      const PrimeField& field);

/// Fixture text for a catalog curve with header name, d, g, sC, eC.
std::string catalog_fixture(const std::string& name, const PrimeField& field);

/// Maps a demo name to its catalog curve name.
std::string demo_curve_name(const DemoOptions& options);

}  // namespace nlc

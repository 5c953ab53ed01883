#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace nlc {

/// Result of one CLI command. Every verdict is a JSON scalar backed by the
/// per-degree tables and the evidence objects.
struct RunReport {
  std::string command;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::string curve;
  int s = 0;
  std::string surface_fingerprint;
  std::map<std::string, std::vector<long long>> tables;
  std::map<std::string, nlohmann::json> verdicts;
  std::map<std::string, nlohmann::json> evidence;
  std::vector<std::pair<std::string, double>> timings;  ///< milliseconds
  std::optional<bool> cross_prime_consistent;
  std::vector<std::string> anomalies;

  /// Timings are left out unless asked for, so the output of a fixed
  /// (command, flags, prime, seed) is byte-identical across runs.
  nlohmann::json to_json(bool with_timings = false) const;
  std::string to_jsonl(bool with_timings = false) const;
  std::string to_table() const;
};

/// Parses "key=value".
std::pair<std::string, std::string> parse_expectation(const std::string& text);

/// Expectations that the report's verdicts do not meet, as readable lines.
std::vector<std::string> check_expectations(const RunReport& report,
                                            const std::vector<std::string>& expectations);

/// Whether two runs of the same command under different primes agree on
/// every table and verdict.
bool reports_consistent(const RunReport& a, const RunReport& b, std::string* first_difference = nullptr);

}  // namespace nlc

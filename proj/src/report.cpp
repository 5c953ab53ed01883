#include "nlc/report.hpp"

#include <iomanip>
#include <sstream>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

nlohmann::json RunReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["command"] = command;
  j["prime"] = prime;
  j["seed"] = seed;
  j["curve"] = curve;
  j["s"] = s;
  j["surface_fingerprint"] = surface_fingerprint;
  j["tables"] = tables;
  j["verdicts"] = verdicts;
  j["evidence"] = evidence;
  j["anomalies"] = anomalies;
  j["cross_prime_consistent"] =
      cross_prime_consistent ? nlohmann::json(*cross_prime_consistent) : nlohmann::json();
  if (with_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, ms] : timings) t[k] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

std::string RunReport::to_jsonl(bool with_timings) const { return to_json(with_timings).dump() + "\n"; }

std::string RunReport::to_table() const {
  std::ostringstream out;
  auto row = [&](const std::string& k, const std::string& v) {
    out << std::left << std::setw(26) << k << v << "\n";
  };
  row("command", command);
  row("prime", std::to_string(prime));
  row("seed", std::to_string(seed));
  if (!curve.empty()) row("curve", curve);
  if (s > 0) row("surface", "degree " + std::to_string(s) + ", fingerprint " + surface_fingerprint);
  if (!tables.empty()) {
    std::size_t width = 0;
    for (const auto& [k, v] : tables) width = std::max(width, v.size());
    out << "\n" << std::left << std::setw(26) << "degree n";
    for (std::size_t n = 0; n < width; ++n) out << std::right << std::setw(6) << n;
    out << "\n";
    for (const auto& [k, v] : tables) {
      out << std::left << std::setw(26) << k;
      for (long long x : v) out << std::right << std::setw(6) << x;
      out << "\n";
    }
  }
  out << "\nverdicts\n";
  for (const auto& [k, v] : verdicts) row("  " + k, scalar_text(v));
  if (!evidence.empty()) {
    out << "\nevidence\n";
    for (const auto& [k, v] : evidence) row("  " + k, v.dump());
  }
  if (cross_prime_consistent) row("cross-prime consistent", *cross_prime_consistent ? "yes" : "no");
  for (const std::string& a : anomalies) row("anomaly", a);
  if (!timings.empty()) {
    out << "\ntimings\n";
    for (const auto& [k, ms] : timings) {
      std::ostringstream v;
      v << std::fixed << std::setprecision(1) << ms << " ms";
      row("  " + k, v.str());
    }
  }
  return out.str();
}

std::pair<std::string, std::string> parse_expectation(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ArgumentError("expectation must be key=value: " + text);
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::vector<std::string> check_expectations(const RunReport& report,
                                            const std::vector<std::string>& expectations) {
  std::vector<std::string> failures;
  for (const std::string& e : expectations) {
    auto [key, want] = parse_expectation(e);
    auto it = report.verdicts.find(key);
    if (it == report.verdicts.end()) {
      failures.push_back(key + ": no such verdict");
    } else if (scalar_text(it->second) != want) {
      failures.push_back(key + ": expected " + want + ", got " + scalar_text(it->second));
    }
  }
  return failures;
}

bool reports_consistent(const RunReport& a, const RunReport& b, std::string* first_difference) {
  auto note = [&](const std::string& what) {
    if (first_difference) *first_difference = what;
    return false;
  };
  if (a.tables != b.tables) {
    for (const auto& [k, v] : a.tables) {
      auto it = b.tables.find(k);
      if (it == b.tables.end() || it->second != v) return note("table " + k);
    }
    return note("tables");
  }
  if (a.verdicts != b.verdicts) {
    for (const auto& [k, v] : a.verdicts) {
      auto it = b.verdicts.find(k);
      if (it == b.verdicts.end() || it->second != v) return note("verdict " + k);
    }
    return note("verdicts");
  }
  return true;
}

}  // namespace nlc

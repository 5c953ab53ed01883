// Command-line front end: demos, randomized trials, fixture inspection and
// catalog export.
//
// Exit codes: 0 ok, 2 verdict mismatch (--expect or --check-prime),
// 3 degenerate input, 4 usage or parse error, 1 anything else.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nlc/commands.hpp"
#include "nlc/errors.hpp"

namespace {

constexpr int kMismatch = 2;
constexpr int kDegenerate = 3;
constexpr int kUsage = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilator ideals of curve classes on surfaces in P^3"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint32_t prime = nlc::PrimeField::kDefaultPrime;
  std::optional<std::uint32_t> check_prime;
  std::uint64_t seed = 7;
  int count = 1;
  std::optional<int> level;
  std::vector<std::string> expectations;
  std::string format = "table";
  bool timings = false;
  int d1 = 2, d2 = 2, s = 0;

  app.add_option("--prime", prime, "Field characteristic")->capture_default_str();
  app.add_option("--check-prime", check_prime, "Second prime; rerun and compare tables and verdicts");
  app.add_option("--seed", seed, "Surface seed")->capture_default_str();
  app.add_option("--count", count, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--level", level, "Reconstruction / perfectness level");
  app.add_option("--expect", expectations, "Expected verdict key=value (repeatable)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "jsonl"}))
      ->capture_default_str();
  app.add_flag("--timings", timings, "Include timings in jsonl output");
  app.add_option("--d1", d1, "First degree for acm-ci")->capture_default_str();
  app.add_option("--d2", d2, "Second degree for acm-ci")->capture_default_str();
  app.add_option("--s", s, "Surface degree (default 4, or 6 for acm-ci)");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Full pipeline on a catalog curve");
  demo->add_option("name", demo_name, "twisted-cubic | rational-quartic | acm-ci")
      ->required()
      ->check(CLI::IsMember({"twisted-cubic", "rational-quartic", "acm-ci"}));

  std::string trials_name;
  auto* trials = app.add_subcommand("trials", "Seeded trials seed, seed+1, ... of a demo");
  trials->add_option("name", trials_name, "twisted-cubic | rational-quartic | acm-ci")
      ->required()
      ->check(CLI::IsMember({"twisted-cubic", "rational-quartic", "acm-ci"}));

  std::string ideal_file;
  std::optional<std::string> surface_file;
  auto* inspect = app.add_subcommand("inspect", "Invariants of an ideal fixture");
  inspect->add_option("ideal-file", ideal_file, "Fixture with the ideal generators")->required();
  inspect->add_option("--surface", surface_file, "Fixture whose first polynomial is the surface");

  std::string catalog_name;
  std::optional<std::string> output;
  auto* cat = app.add_subcommand("catalog", "Export a catalog curve as a fixture");
  cat->add_option("name", catalog_name, "twisted_cubic | rational_quartic_31 | line | conic | "
                                        "complete_intersection(d1,d2)")
      ->required();
  cat->add_option("--output", output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (cat->parsed()) {
      std::string text = nlc::catalog_fixture(catalog_name, nlc::PrimeField(prime));
      if (output) {
        std::ofstream out(*output);
        if (!out) throw nlc::ArgumentError("cannot write " + *output);
        out << text;
      } else {
        std::cout << text;
      }
      return 0;
    }

    auto run = [&](std::uint32_t p) {
      nlc::PrimeField field(p);
      if (inspect->parsed()) return nlc::cmd_inspect(ideal_file, surface_file, field);
      nlc::DemoOptions o;
      o.name = demo->parsed() ? demo_name : trials_name;
      o.field = field;
      o.seed = seed;
      o.s = s;
      o.d1 = d1;
      o.d2 = d2;
      o.level = level;
      return demo->parsed() ? nlc::cmd_demo(o) : nlc::cmd_trials(o, count);
    };

    nlc::RunReport report = run(prime);
    if (check_prime) {
      nlc::RunReport other = run(*check_prime);
      std::string diff;
      report.cross_prime_consistent = nlc::reports_consistent(report, other, &diff);
      if (!*report.cross_prime_consistent) {
        report.anomalies.push_back("prime " + std::to_string(*check_prime) + " differs in " + diff);
      }
    }
    std::vector<std::string> failures = nlc::check_expectations(report, expectations);

    if (format == "jsonl") {
      std::cout << report.to_jsonl(timings);
    } else {
      std::cout << report.to_table();
    }
    for (const std::string& f : failures) std::cerr << "expectation failed: " << f << "\n";
    if (!failures.empty()) return kMismatch;
    if (report.cross_prime_consistent == false) return kMismatch;
    return 0;
  } catch (const nlc::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const nlc::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlc::DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

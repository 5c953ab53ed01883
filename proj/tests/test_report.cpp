#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "nlc/commands.hpp"
#include "nlc/errors.hpp"
#include "nlc/fixture.hpp"

using namespace nlc;

namespace {

const PrimeField F;

std::string fixture_path(const std::string& name) { return std::string(NLC_FIXTURE_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(NLC_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("fixture format") {
  Fixture fx = parse_fixture("# name: demo\n# d: 3\n\n# a comment line\nx*z - y^2\n  y*w - z^2  \n");
  CHECK(fx.header.at("name") == "demo");
  CHECK(fx.header.at("d") == "3");
  CHECK(fx.header.size() == 2);
  REQUIRE(fx.polynomials.size() == 2);
  CHECK(fx.polynomials[1].to_string() == "-z^2 + y*w");
  CHECK(parse_fixture(format_fixture(fx)).polynomials == fx.polynomials);
  CHECK(format_fixture(fx).rfind("# name: demo\n", 0) == 0);

  CHECK_THROWS_AS(parse_fixture(""), ParseError);
  CHECK_THROWS_AS(parse_fixture("# name: only a header\n\n"), ParseError);
  try {
    parse_fixture("x\n\ny + * z\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(read_fixture(fixture_path("missing.txt")), ArgumentError);
}

TEST_CASE("catalog fixtures round trip") {
  for (const char* name : {"twisted_cubic", "rational_quartic_31", "line", "conic"}) {
    Fixture fx = read_fixture(fixture_path(std::string(name) + ".txt"));
    CurveModel c = catalog(name);
    CHECK(Ideal(F, fx.polynomials) == c.ideal);
    CHECK(fx.header.at("d") == std::to_string(c.degree));
    CHECK(fx.header.at("g") == std::to_string(c.genus));
    CHECK(fx.header.at("sC") == std::to_string(c.sC));
    CHECK(catalog_fixture(name, F) == format_fixture(fx));
  }
  Fixture ci = read_fixture(fixture_path("complete_intersection22.txt"));
  CHECK(Ideal(F, ci.polynomials) == catalog("complete_intersection(2,2)").ideal);
}

TEST_CASE("expectations") {
  RunReport r;
  r.verdicts["perfect"] = false;
  r.verdicts["reconstructed_at"] = 2;
  r.verdicts["paths_agree"] = "n/a";
  r.verdicts["first_failure"] = nullptr;
  CHECK(check_expectations(r, {"perfect=false", "reconstructed_at=2", "paths_agree=n/a", "first_failure=null"})
            .empty());
  CHECK(check_expectations(r, {"perfect=true"}).size() == 1);
  CHECK(check_expectations(r, {"unknown=1"}).size() == 1);
  CHECK_THROWS_AS(parse_expectation("novalue"), ArgumentError);
  CHECK_THROWS_AS(parse_expectation("=1"), ArgumentError);
  CHECK(parse_expectation("a=b=c").second == "b=c");
}

TEST_CASE("report serialization") {
  RunReport r;
  r.command = "demo x";
  r.timings.emplace_back("phase", 1.5);
  CHECK(r.to_jsonl().find("timings") == std::string::npos);
  CHECK(r.to_jsonl(true).find("timings_ms") != std::string::npos);
  CHECK(r.to_jsonl().back() == '\n');
  CHECK(r.to_table().find("phase") != std::string::npos);

  RunReport a, b;
  a.tables["x"] = {1, 2};
  b.tables["x"] = {1, 2};
  a.verdicts["v"] = true;
  b.verdicts["v"] = true;
  b.surface_fingerprint = "different";
  CHECK(reports_consistent(a, b));
  b.tables["x"] = {1, 3};
  std::string diff;
  CHECK_FALSE(reports_consistent(a, b, &diff));
  CHECK(diff == "table x");
}

TEST_CASE("demos") {
  DemoOptions o;
  o.name = "twisted-cubic";
  o.seed = 7;
  RunReport tc = cmd_demo(o);
  CHECK(tc.verdicts.at("reconstructed_at") == 2);
  CHECK(tc.verdicts.at("perfect") == true);
  CHECK(tc.verdicts.at("paths_agree") == true);
  CHECK(tc.tables.at("quotient_hf") == std::vector<long long>{1, 4, 7, 4, 1});
  CHECK(cmd_demo(o).to_jsonl() == tc.to_jsonl());

  o.field = PrimeField(PrimeField::kDefaultCheckPrime);
  RunReport other = cmd_demo(o);
  CHECK(reports_consistent(tc, other));
  CHECK(other.surface_fingerprint != tc.surface_fingerprint);

  DemoOptions q;
  q.name = "rational-quartic";
  RunReport rq = cmd_demo(q);
  CHECK(rq.verdicts.at("perfect") == false);
  CHECK(rq.verdicts.at("first_failure") == 3);
  CHECK(rq.evidence.at("cubic_ledger").at("total") == 14);
  CHECK(rq.evidence.at("cubic_ledger").at("alpha3") == 16);
  CHECK(rq.verdicts.at("lattice_a1_only") == true);

  DemoOptions ci;
  ci.name = "acm-ci";
  ci.s = 6;
  RunReport rc = cmd_demo(ci);
  CHECK(rc.verdicts.at("level") == 3);
  CHECK(rc.verdicts.at("reconstructed_at_level") == true);
  CHECK(rc.verdicts.at("perfect") == true);

  DemoOptions bad;
  bad.name = "elliptic";
  CHECK_THROWS_AS(cmd_demo(bad), ArgumentError);
  DemoOptions low = o;
  low.s = 1;
  CHECK_THROWS_AS(cmd_demo(low), ArgumentError);
}

TEST_CASE("trials") {
  DemoOptions o;
  o.name = "twisted-cubic";
  o.seed = 7;
  RunReport one = cmd_trials(o, 1);
  RunReport demo = cmd_demo(o);
  for (const auto& [k, v] : demo.verdicts) CHECK(one.verdicts.at(k) == v);
  CHECK(one.verdicts.at("count") == 1);

  RunReport many = cmd_trials(o, 12);
  CHECK(many.anomalies.empty());
  CHECK(many.verdicts.at("errors") == 0);
  CHECK(many.verdicts.at("reconstructed_at") == 2);
  CHECK(many.evidence.at("counts").at("perfect").at("true") == 12);
  CHECK(cmd_trials(o, 12).to_jsonl() == many.to_jsonl());
  CHECK_THROWS_AS(cmd_trials(o, 0), ArgumentError);
}

TEST_CASE("inspect") {
  RunReport tc = cmd_inspect(fixture_path("twisted_cubic.txt"), std::nullopt, F);
  CHECK(tc.curve == "twisted_cubic");
  CHECK(tc.tables.at("hf") == std::vector<long long>{1, 4, 7, 10, 13, 16, 19, 22, 25});
  CHECK(tc.verdicts.at("acm") == true);
  CHECK(tc.evidence.at("hilbert_burch").at("r") == 2);
  CHECK(tc.evidence.at("hilbert_burch").at("a") == std::vector<int>{2, 2, 2});
  CHECK(tc.evidence.at("hilbert_burch").at("b") == std::vector<int>{3, 3});
  CHECK(tc.verdicts.at("sC") == 2);

  RunReport rq = cmd_inspect(fixture_path("rational_quartic_31.txt"), std::nullopt, F);
  CHECK(rq.verdicts.at("acm") == false);
  CHECK(rq.verdicts.at("degree") == 4);

  SurfaceModel s = random_surface_containing(catalog("twisted_cubic"), 4, 7);
  std::string surface = write_temp("surface.txt", "# name: quartic\n" + s.f.to_string() + "\n");
  RunReport with = cmd_inspect(fixture_path("twisted_cubic.txt"), surface, F);
  CHECK(with.tables.at("alpha_dims") == std::vector<long long>{0, 0, 3, 16, 34});
  CHECK(with.surface_fingerprint == fingerprint(s.f));

  std::string empty = write_temp("empty.txt", "");
  CHECK_THROWS_AS(cmd_inspect(empty, std::nullopt, F), ParseError);
}

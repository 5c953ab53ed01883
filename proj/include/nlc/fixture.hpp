#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nlc/polynomial.hpp"

namespace nlc {

/// Polynomial list with a `# key: value` header, one polynomial per line.
/// Blank lines are skipped; other `#` lines are comments.
struct Fixture {
  std::map<std::string, std::string> header;
  std::vector<Polynomial> polynomials;
};

/// Throws ParseError (with the fixture line and column) on bad polynomials
/// and on input without any polynomial.
Fixture parse_fixture(std::string_view text, const PrimeField& field = PrimeField());
Fixture read_fixture(const std::string& path, const PrimeField& field = PrimeField());
std::string format_fixture(const Fixture& fixture);

}  // namespace nlc

#include "nlc/fixture.hpp"

#include <fstream>
#include <sstream>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Fixture parse_fixture(std::string_view text, const PrimeField& field) {
  Fixture fx;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      std::string body = trim(std::string_view(t).substr(1));
      auto colon = body.find(':');
      if (colon != std::string::npos && colon > 0 &&
          body.find_first_of(" \t") > colon) {
        fx.header[body.substr(0, colon)] = trim(std::string_view(body).substr(colon + 1));
      }
      continue;
    }
    try {
      fx.polynomials.push_back(Polynomial::parse(line, field));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_no, e.column());
    }
  }
  if (fx.polynomials.empty()) throw ParseError("fixture contains no polynomial", line_no, 1);
  return fx;
}

Fixture read_fixture(const std::string& path, const PrimeField& field) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), field);
}

std::string format_fixture(const Fixture& fixture) {
  std::string out;
  auto name = fixture.header.find("name");
  if (name != fixture.header.end()) out += "# name: " + name->second + "\n";
  for (const auto& [k, v] : fixture.header) {
    if (k != "name") out += "# " + k + ": " + v + "\n";
  }
  for (const Polynomial& p : fixture.polynomials) out += p.to_string() + "\n";
  return out;
}

}  // namespace nlc

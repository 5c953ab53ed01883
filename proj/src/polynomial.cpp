#include "nlc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "nlc/errors.hpp"

namespace nlc {

Polynomial Polynomial::constant(PrimeField field, std::int64_t c) {
  return term(field, Monomial(), field.from_int(c));
}

Polynomial Polynomial::variable(PrimeField field, int var) {
  if (var < 0 || var >= kNumVars) throw ArgumentError("variable index out of range");
  return term(field, Monomial::variable(var), 1);
}

Polynomial Polynomial::term(PrimeField field, const Monomial& m, Coeff c) {
  Polynomial p(field);
  c %= field.prime();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(PrimeField field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p(field);
  for (const Term& t : terms) {
    Coeff c = t.coeff % field.prime();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mono, c});
    }
  }
  return p;
}

int Polynomial::max_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

void Polynomial::check_field(const Polynomial& other) const {
  if (!(field_ == other.field_)) throw ArgumentError("polynomials over different primes");
}

Polynomial Polynomial::combine(const Polynomial& other, bool subtract) const {
  check_field(other);
  Polynomial out(field_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.terms_.push_back({b->mono, subtract ? field_.neg(b->coeff) : b->coeff});
      ++b;
    } else {
      Coeff c = subtract ? field_.sub(a->coeff, b->coeff) : field_.add(a->coeff, b->coeff);
      if (c != 0) out.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const { return combine(other, false); }
Polynomial Polynomial::operator-(const Polynomial& other) const { return combine(other, true); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = field_.neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_field(other);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      products.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
    }
  }
  return from_terms(field_, std::move(products));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= field_.prime();
  if (c == 0) return Polynomial(field_);
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = field_.mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c %= field_.prime();
  if (c == 0) return Polynomial(field_);
  Polynomial out = *this;
  for (Term& t : out.terms_) {
    t.mono = t.mono * m;
    t.coeff = field_.mul(t.coeff, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading().coeff));
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= kNumVars) throw ArgumentError("variable index out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    std::array<int, kNumVars> exps = {t.mono[0], t.mono[1], t.mono[2], t.mono[3]};
    exps[var] -= 1;
    out.push_back({Monomial(exps[0], exps[1], exps[2], exps[3]),
                   field_.mul(t.coeff, field_.from_int(e))});
  }
  return from_terms(field_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::int64_t c = field_.to_signed(terms_[i].coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Monomial& m = terms_[i].mono;
    if (m.degree() == 0) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += std::to_string(mag) + "*" + m.to_string();
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, PrimeField field) : text_(text), field_(field) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return Polynomial::from_terms(field_, std::move(terms));
  }

 private:
  Term parse_term() {
    Coeff coeff = 1;
    std::array<int, kNumVars> exps{};
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field_.mul(coeff, parse_integer_mod());
      } else if (int var = var_index(c); var >= 0) {
        ++pos_;
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        exps[var] += e;
        if (exps[var] > 0xffff) fail("exponent too large");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {Monomial(exps[0], exps[1], exps[2], exps[3]), coeff};
  }

  Coeff parse_integer_mod() {
    Coeff value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = field_.add(field_.mul(value, 10), static_cast<Coeff>(peek() - '0'));
      ++pos_;
    }
    return value;
  }

  int parse_exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 0xffff) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  static int var_index(char c) {
    for (int i = 0; i < kNumVars; ++i) {
      if (kVarNames[i] == c) return i;
    }
    return -1;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, PrimeField field) {
  return Parser(text, field).parse();
}

std::vector<Coeff> to_dense(const Polynomial& p, int n) {
  const DegreeTable& table = degree_table(n);
  std::vector<Coeff> v(table.size(), 0);
  for (const Term& t : p.terms()) {
    if (t.mono.degree() != n) {
      throw ArgumentError("term " + t.mono.to_string() + " is not of degree " + std::to_string(n));
    }
    v[table.index(t.mono)] = t.coeff;
  }
  return v;
}

Polynomial from_dense(std::span<const Coeff> v, int n, PrimeField field) {
  const DegreeTable& table = degree_table(n);
  std::vector<Term> terms;
  for (int i = 0; i < table.size(); ++i) {
    if (v[i] != 0) terms.push_back({table[i], v[i]});
  }
  // Already descending and duplicate-free.
  return Polynomial::from_terms(field, std::move(terms));
}

std::string fingerprint(const Polynomial& p) { return fingerprint_text(p.to_string()); }

std::string fingerprint_text(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nlc

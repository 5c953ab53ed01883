#include "nlc/monomial.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>

#include "nlc/errors.hpp"

namespace nlc {

Monomial::Monomial(int a, int b, int c, int d) {
  const std::array<int, kNumVars> e = {a, b, c, d};
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] < 0 || e[i] > 0xffff) throw ArgumentError("monomial exponent out of range");
    exps_[i] = static_cast<std::uint16_t>(e[i]);
  }
  degree_ = static_cast<std::uint16_t>(a + b + c + d);
}

Monomial Monomial::variable(int var) {
  Monomial m;
  m.exps_[var] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.exps_[i] = exps_[i] + other.exps_[i];
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.exps_[i] = exps_[i] - other.exps_[i];
  m.degree_ = degree_ - other.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) {
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

// Among equal degrees the monomial with the smaller exponent in the last
// differing variable (scanning from w back to x) is the larger one.
std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

DegreeTable::DegreeTable(int n) : degree_(n), stride_(n + 1) {
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      for (int c = 0; a + b + c <= n; ++c) {
        monomials_.emplace_back(a, b, c, n - a - b - c);
      }
    }
  }
  std::sort(monomials_.begin(), monomials_.end(), std::greater<>());
  index_.assign(std::size_t(stride_) * stride_ * stride_, -1);
  for (int i = 0; i < size(); ++i) {
    const Monomial& m = monomials_[i];
    index_[(m[0] * stride_ + m[1]) * stride_ + m[2]] = i;
  }
}

const DegreeTable& degree_table(int n) {
  if (n < 0) throw ArgumentError("negative degree " + std::to_string(n));
  static std::mutex mutex;
  static std::deque<std::unique_ptr<DegreeTable>> tables;
  std::lock_guard lock(mutex);
  while (static_cast<int>(tables.size()) <= n) {
    tables.push_back(std::make_unique<DegreeTable>(static_cast<int>(tables.size())));
  }
  return *tables[n];
}

const std::vector<Monomial>& monomial_basis(int n) { return degree_table(n).monomials(); }

int dim_R(int n) {
  if (n < 0) return 0;
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

}  // namespace nlc

#include "reflekt/cyclotomic.hpp"

#include "reflekt/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reflekt {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Coefficients of zeta_r^j in the power basis 1, zeta, ..., zeta^(phi-1),
// for every j in [0, r).
struct FieldTables {
  IntPoly phi_poly;
  std::vector<IntPoly> powers;
};

std::mutex g_table_mutex;
std::map<int, FieldTables> g_tables;

IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size())
    fail(ErrorCode::Consistency, "cyclotomic division: degree underflow");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) fail(ErrorCode::Consistency, "cyclotomic division: nonzero remainder");
  return quot;
}

const FieldTables& tables_locked(int r);

IntPoly compute_phi(int r) {
  // x^r - 1 = prod_{d | r} Phi_d(x)
  IntPoly num(static_cast<std::size_t>(r) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d)
    if (r % d == 0) num = exact_divide(std::move(num), tables_locked(d).phi_poly);
  return num;
}

const FieldTables& tables_locked(int r) {
  auto it = g_tables.find(r);
  if (it != g_tables.end()) return it->second;

  FieldTables t;
  t.phi_poly = compute_phi(r);
  const std::size_t deg = t.phi_poly.size() - 1;
  t.powers.resize(static_cast<std::size_t>(r));
  IntPoly cur(deg, 0);
  cur[0] = 1;
  for (int j = 0; j < r; ++j) {
    t.powers[static_cast<std::size_t>(j)] = cur;
    // multiply by x and reduce the overflow coefficient with the monic Phi_r
    IntPoly next(deg, 0);
    const std::int64_t top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) next[i] -= top * t.phi_poly[i];
    cur = std::move(next);
  }
  return g_tables.emplace(r, std::move(t)).first->second;
}

const FieldTables& tables(int r) {
  if (r < 1) fail(ErrorCode::Parameter, "cyclotomic modulus must be positive, got " + std::to_string(r));
  std::lock_guard lock(g_table_mutex);
  return tables_locked(r);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t v = a % m;
  return v < 0 ? v + m : v;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) fail(ErrorCode::Parameter, "euler_phi of non-positive integer");
  int result = m;
  int x = m;
  for (int q = 2; q * q <= x; ++q) {
    if (x % q != 0) continue;
    while (x % q == 0) x /= q;
    result -= result / q;
  }
  if (x > 1) result -= result / x;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int r) { return tables(r).phi_poly; }

CycloNumber::CycloNumber() : r_(1), coeffs_{Rational(0)} {}

CycloNumber::CycloNumber(const Rational& q) : r_(1), coeffs_{q} {}

CycloNumber::CycloNumber(int r, std::vector<Rational> coeffs)
    : r_(r), coeffs_(std::move(coeffs)) {
  normalize_rational_modulus();
}

void CycloNumber::normalize_rational_modulus() {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  coeffs_.resize(1);
  r_ = 1;
}

CycloNumber CycloNumber::root_of_unity(std::int64_t i, int r) {
  const auto& t = tables(r);
  const auto& p = t.powers[static_cast<std::size_t>(mod_floor(i, r))];
  std::vector<Rational> c(p.begin(), p.end());
  return CycloNumber(r, std::move(c));
}

CycloNumber CycloNumber::from_exponent_counts(int r, std::span<const std::int64_t> counts,
                                              const Rational& scale) {
  if (counts.size() != static_cast<std::size_t>(r))
    fail(ErrorCode::Parameter, "exponent count vector must have length r");
  const auto& t = tables(r);
  const std::size_t deg = t.phi_poly.size() - 1;
  std::vector<std::int64_t> acc(deg, 0);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    const auto& p = t.powers[e];
    for (std::size_t i = 0; i < deg; ++i) acc[i] += counts[e] * p[i];
  }
  std::vector<Rational> c(deg);
  for (std::size_t i = 0; i < deg; ++i) c[i] = Rational(acc[i]) * scale;
  return CycloNumber(r, std::move(c));
}

bool CycloNumber::is_rational() const noexcept { return r_ == 1; }

bool CycloNumber::is_zero() const noexcept { return r_ == 1 && coeffs_[0] == 0; }

Rational CycloNumber::as_rational() const {
  if (!is_rational()) fail(ErrorCode::Domain, "value " + str() + " is not rational");
  return coeffs_[0];
}

int CycloNumber::common_modulus(const CycloNumber& a, const CycloNumber& b) {
  if (a.r_ == b.r_) return a.r_;
  if (a.is_rational()) return b.r_;
  if (b.is_rational()) return a.r_;
  fail(ErrorCode::Parameter, "cyclotomic modulus mismatch: " + std::to_string(a.r_) + " vs " +
                                 std::to_string(b.r_));
}

CycloNumber CycloNumber::embedded(int r) const {
  if (r == r_) return *this;
  // only rationals are ever embedded
  const std::size_t deg = tables(r).phi_poly.size() - 1;
  std::vector<Rational> c(deg, Rational(0));
  c[0] = coeffs_[0];
  CycloNumber out;
  out.r_ = r;
  out.coeffs_ = std::move(c);
  return out;
}

CycloNumber CycloNumber::conjugate() const {
  if (is_rational()) return *this;
  const auto& t = tables(r_);
  const std::size_t deg = t.phi_poly.size() - 1;
  std::vector<Rational> c(deg, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& p = t.powers[static_cast<std::size_t>(mod_floor(-static_cast<std::int64_t>(i), r_))];
    for (std::size_t k = 0; k < deg; ++k)
      if (p[k] != 0) c[k] += coeffs_[i] * p[k];
  }
  return CycloNumber(r_, std::move(c));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& b) {
  const int r = common_modulus(*this, b);
  CycloNumber a = embedded(r);
  const CycloNumber bb = b.embedded(r);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += bb.coeffs_[i];
  a.normalize_rational_modulus();
  return *this = std::move(a);
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& b) { return *this += -b; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& b) {
  if (is_rational() || b.is_rational()) {
    const Rational s = is_rational() ? coeffs_[0] : b.coeffs_[0];
    CycloNumber a = is_rational() ? b : *this;
    for (auto& c : a.coeffs_) c *= s;
    a.normalize_rational_modulus();
    return *this = std::move(a);
  }
  const int r = common_modulus(*this, b);
  const auto& t = tables(r);
  const std::size_t deg = t.phi_poly.size() - 1;
  // convolve, folding exponents mod r since zeta^r = 1
  std::vector<Rational> folded(static_cast<std::size_t>(r), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      folded[(i + j) % static_cast<std::size_t>(r)] += coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> c(deg, Rational(0));
  for (std::size_t e = 0; e < folded.size(); ++e) {
    if (folded[e] == 0) continue;
    const auto& p = t.powers[e];
    for (std::size_t k = 0; k < deg; ++k)
      if (p[k] != 0) c[k] += folded[e] * p[k];
  }
  return *this = CycloNumber(r, std::move(c));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
}

nlohmann::json CycloNumber::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_)
    coeffs.push_back({numerator(c).str(), denominator(c).str()});
  return {{"r", r_}, {"coeffs", coeffs}};
}

CycloNumber CycloNumber::from_json(const nlohmann::json& j) {
  const int r = j.at("r").get<int>();
  const auto& t = tables(r);
  const std::size_t deg = t.phi_poly.size() - 1;
  const auto& arr = j.at("coeffs");
  if (arr.size() > deg) fail(ErrorCode::Parameter, "too many coefficients for modulus " + std::to_string(r));
  std::vector<Rational> c(deg, Rational(0));
  for (std::size_t i = 0; i < arr.size(); ++i)
    c[i] = Rational(BigInt(arr[i].at(0).get<std::string>()), BigInt(arr[i].at(1).get<std::string>()));
  return CycloNumber(r, std::move(c));
}

std::string CycloNumber::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeffs_[i];
    if (i == 1) out << "*z" << r_;
    if (i > 1) out << "*z" << r_ << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace reflekt

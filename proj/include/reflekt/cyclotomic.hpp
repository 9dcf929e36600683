#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_r).
//
// Elements are stored densely as polynomials in zeta_r of degree < phi(r),
// reduced modulo the r-th cyclotomic polynomial. With that basis two equal
// field elements always have identical coefficient vectors, so equality is
// a plain comparison.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace reflekt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

int euler_phi(int m);

/// Integer coefficients of Phi_r, lowest degree first. Memoized.
const std::vector<std::int64_t>& cyclotomic_polynomial(int r);

class CycloNumber {
public:
  /// The rational number zero (modulus 1).
  CycloNumber();
  explicit CycloNumber(const Rational& q);
  CycloNumber(std::int64_t q) : CycloNumber(Rational(q)) {}  // NOLINT

  /// zeta_r^(i mod r).
  static CycloNumber root_of_unity(std::int64_t i, int r);

  /// scale * sum_e counts[e] * zeta_r^e, with counts indexed by exponent
  /// in [0, r). The cheap path for character sums.
  static CycloNumber from_exponent_counts(int r,
                                          std::span<const std::int64_t> counts,
                                          const Rational& scale = Rational(1));

  int modulus() const noexcept { return r_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_rational() const noexcept;
  bool is_zero() const noexcept;
  /// Throws ErrorCode::Domain when the value is not in Q.
  Rational as_rational() const;

  /// Galois conjugation zeta_r -> zeta_r^(r-1), i.e. complex conjugation.
  CycloNumber conjugate() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& b);
  CycloNumber& operator-=(const CycloNumber& b);
  CycloNumber& operator*=(const CycloNumber& b);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// {"r":..,"coeffs":[["num","den"],...]}
  nlohmann::json to_json() const;
  static CycloNumber from_json(const nlohmann::json& j);
  std::string str() const;

private:
  CycloNumber(int r, std::vector<Rational> coeffs);
  void normalize_rational_modulus();
  static int common_modulus(const CycloNumber& a, const CycloNumber& b);
  CycloNumber embedded(int r) const;

  int r_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace reflekt

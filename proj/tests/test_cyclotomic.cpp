#include "oracles.hpp"

#include <doctest.h>

#include <random>

using reflekt::CycloNumber;
using reflekt::Rational;

TEST_CASE("cyclotomic polynomials") {
  CHECK(reflekt::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(reflekt::cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(reflekt::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(reflekt::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (int r = 1; r <= 40; ++r)
    CHECK(reflekt::cyclotomic_polynomial(r).size() == static_cast<std::size_t>(reflekt::euler_phi(r)) + 1);
}

TEST_CASE("roots of unity") {
  for (int r = 1; r <= 12; ++r) {
    CycloNumber sum;
    for (int k = 0; k < r; ++k) {
      auto z = CycloNumber::root_of_unity(k, r);
      CHECK(std::abs(oracle::evaluate(z) - oracle::zeta(r, k)) < 1e-9);
      sum += z;
    }
    CHECK(sum == CycloNumber(r == 1 ? 1 : 0));
    auto z = CycloNumber::root_of_unity(1, r);
    CycloNumber acc(1);
    for (int k = 0; k < r; ++k) acc *= z;
    CHECK(acc == CycloNumber(1));
    CHECK(z * z.conjugate() == CycloNumber(1));
  }
  CHECK(CycloNumber::root_of_unity(2, 4) == CycloNumber(-1));
  CHECK(CycloNumber::root_of_unity(3, 6) == CycloNumber(-1));
  CHECK(CycloNumber::root_of_unity(-1, 5) == CycloNumber::root_of_unity(4, 5));
}

TEST_CASE("field arithmetic matches numeric evaluation") {
  std::mt19937 rng(7);
  for (int r : {3, 5, 7, 8, 9, 12}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::int64_t> ca(static_cast<std::size_t>(r)), cb(static_cast<std::size_t>(r));
      for (auto& v : ca) v = static_cast<std::int64_t>(rng() % 7) - 3;
      for (auto& v : cb) v = static_cast<std::int64_t>(rng() % 7) - 3;
      auto a = CycloNumber::from_exponent_counts(r, ca, Rational(1, 2));
      auto b = CycloNumber::from_exponent_counts(r, cb);
      CHECK(std::abs(oracle::evaluate(a * b) - oracle::evaluate(a) * oracle::evaluate(b)) < 1e-8);
      CHECK(std::abs(oracle::evaluate(a + b) - (oracle::evaluate(a) + oracle::evaluate(b))) < 1e-8);
      CHECK(std::abs(oracle::evaluate(a.conjugate()) - std::conj(oracle::evaluate(a))) < 1e-8);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("rational detection and json") {
  // zeta_5 + zeta_5^4 + zeta_5^2 + zeta_5^3 = -1
  std::vector<std::int64_t> c{0, 1, 1, 1, 1};
  auto v = CycloNumber::from_exponent_counts(5, c);
  CHECK(v.is_rational());
  CHECK(v.as_rational() == -1);
  auto z = CycloNumber::root_of_unity(1, 8);
  CHECK_THROWS_AS(z.as_rational(), reflekt::Error);
  CHECK(CycloNumber::from_json(z.to_json()) == z);
  CHECK(CycloNumber::from_json(CycloNumber(Rational(3, 4)).to_json()) == CycloNumber(Rational(3, 4)));
  CHECK_THROWS_AS(CycloNumber::root_of_unity(1, 3) + CycloNumber::root_of_unity(1, 4), reflekt::Error);
}

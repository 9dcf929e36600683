#include "oracles.hpp"

#include "reflekt/characters.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace reflekt;

namespace {

RPartite rp(std::vector<std::vector<int>> comps) {
  RPartite t;
  for (auto& c : comps) t.components.push_back({c});
  return t;
}

// Frobenius sum over every t in G, straight from the definition.
CycloNumber frobenius_oracle(const RPartite& theta, const WreathElement& g) {
  const int r = theta.r();
  const int n = theta.size();
  auto G = enumerate({r, 1, n});
  std::vector<int> block_of;
  for (int b = 0; b < r; ++b)
    for (int k = 0; k < theta.components[static_cast<std::size_t>(b)].size(); ++k) block_of.push_back(b);
  std::int64_t s_order = 1;
  for (int b = 0; b < r; ++b)
    for (int k = 2; k <= theta.components[static_cast<std::size_t>(b)].size(); ++k) s_order *= k;
  for (int i = 0; i < n; ++i) s_order *= r;
  CycloNumber acc;
  for (const auto& t : G->elements()) {
    const WreathElement h = multiply(multiply(invert(t), g), t);
    bool inside = true;
    for (int i = 0; i < n; ++i)
      if (block_of[static_cast<std::size_t>(h.perm()(i))] != block_of[static_cast<std::size_t>(i)]) inside = false;
    if (!inside) continue;
    // product over blocks of (psi_b wr theta_b) on the block restriction
    CycloNumber v(1);
    int pos = 0;
    for (int b = 0; b < r; ++b) {
      const int m = theta.components[static_cast<std::size_t>(b)].size();
      if (m == 0) continue;
      std::vector<int> phases, images;
      for (int k = 0; k < m; ++k) {
        phases.push_back(h.phases()[pos + k]);
        images.push_back(h.perm()(pos + k) - pos);
      }
      v *= wreath_linear_value(b, theta.components[static_cast<std::size_t>(b)], WreathElement::make(r, phases, images));
      pos += m;
    }
    acc += v;
  }
  return acc * CycloNumber(Rational(1, s_order));
}

}  // namespace

TEST_CASE("partitions and tableaux") {
  CHECK(partitions(5).size() == 7);
  CHECK(syt_count({{4}}) == 1);
  CHECK(syt_count({{1, 1, 1}}) == 1);
  CHECK(syt_count({{2, 1}}) == 2);
  CHECK(syt_count({{3, 2}}) == 5);
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t sq = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
    for (const auto& p : partitions(n)) {
      sq += syt_count(p) * syt_count(p);
      std::vector<int> id(static_cast<std::size_t>(n), 1);
      CHECK(sym_char_value(p, id) == static_cast<std::int64_t>(syt_count(p)));
    }
    CHECK(sq == fact);
  }
  CHECK(rpartite_partitions(2, 2).size() == 5);
}

TEST_CASE("Murnaghan-Nakayama against explicit characters") {
  CHECK(sym_char_value({{2, 1}}, {3}) == -1);
  for (int n = 2; n <= 6; ++n) {
    Partition triv{{n}}, sgn{std::vector<int>(static_cast<std::size_t>(n), 1)}, std_rep{{n - 1, 1}};
    for (std::uint64_t k = 0; k < 720 && k < [&] { std::uint64_t f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; }(); ++k) {
      const Perm pi = Perm::from_lex_rank(n, k);
      CHECK(sym_char_value(triv, pi.cycle_type()) == 1);
      CHECK(sym_char_value(sgn, pi.cycle_type()) == pi.sign());
      CHECK(sym_char_value(std_rep, pi.cycle_type()) == static_cast<std::int64_t>(pi.fixed_points().size()) - 1);
    }
  }
  CHECK_THROWS_AS(sym_char_value({{2}}, {3}), Error);
}

TEST_CASE("wreath linear values") {
  auto g = WreathElement::make(2, {1}, {0});
  CHECK(wreath_linear_value(1, {{1}}, g) == CycloNumber(-1));
  auto h = WreathElement::make(3, {1, 2}, {1, 0});
  CHECK(wreath_linear_value(1, {{1, 1}}, h) == CycloNumber(-1));
  CHECK(wreath_linear_value(0, {{2}}, h) == CycloNumber(1));
}

TEST_CASE("chi_theta matches the Frobenius oracle") {
  for (auto [r, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 2}}) {
    auto G = enumerate({r, 1, n});
    for (const auto& theta : rpartite_partitions(r, n)) {
      const auto chi = chi_theta(theta);
      CHECK(chi.degree() == CycloNumber(static_cast<std::int64_t>(chi_theta_degree(theta))));
      for (std::size_t c = 0; c < G->classes().size(); ++c) {
        const auto& x = G->element(G->class_rep(c));
        CHECK(chi.on_class(c) == frobenius_oracle(theta, x));
      }
    }
  }
  CHECK(chi_theta(rp({{2}, {}})).values() == std::vector<CycloNumber>(5, CycloNumber(1)));
  CHECK(chi_theta_degree(rp({{1}, {1}})) == 2);
}

TEST_CASE("orthogonality and Burnside") {
  for (auto [r, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    auto G = enumerate({r, 1, n});
    const auto thetas = rpartite_partitions(r, n);
    std::vector<ClassFunction> chars;
    std::uint64_t sumsq = 0, sum = 0;
    for (const auto& t : thetas) {
      chars.push_back(chi_theta(t));
      sumsq += chi_theta_degree(t) * chi_theta_degree(t);
      sum += chi_theta_degree(t);
    }
    CHECK(sumsq == G->order());
    if (r == 2) CHECK(sum == 6);
    CHECK(chars.size() == G->classes().size());
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b)
        CHECK(inner_product(chars[a], chars[b]).as_rational() == (a == b ? 1 : 0));
    for (std::size_t c1 = 0; c1 < G->classes().size(); ++c1)
      for (std::size_t c2 = 0; c2 < G->classes().size(); ++c2) {
        CycloNumber acc;
        for (const auto& chi : chars) acc += chi.on_class(c1) * chi.on_class(c2).conjugate();
        if (c1 != c2) CHECK(acc.is_zero());
        else CHECK(acc == CycloNumber(static_cast<std::int64_t>(G->centralizer_order(c1))));
      }
  }
}

TEST_CASE("gamma and the shift action") {
  const GroupKey k422{4, 2, 2};
  CHECK(gamma_value(k422, WreathElement::make(4, {1, 0}, {0, 1})) == CycloNumber(-1));
  for (const auto& g : enumerate(k422)->elements()) CHECK(gamma_value(k422, g) == CycloNumber(1));
  for (GroupKey key : {GroupKey{4, 2, 2}, GroupKey{6, 3, 2}}) {
    auto gamma = gamma_character(key);
    RPartite trivial;
    trivial.components.resize(static_cast<std::size_t>(key.r));
    trivial.components[0].parts = {key.n};
    const auto one = chi_theta(trivial);
    ClassFunction acc = gamma;
    int order = 1;
    while (!(acc == one)) {
      acc = acc * gamma;
      ++order;
    }
    CHECK(order == key.p);
  }
  CHECK(shift_theta(rp({{1}, {1}}), {2, 2, 2}) == rp({{1}, {1}}));
  CHECK(shift_theta(rp({{2}, {}}), {2, 2, 2}) == rp({{}, {2}}));
  for (GroupKey key : {GroupKey{2, 2, 2}, GroupKey{4, 2, 2}, GroupKey{6, 2, 3}}) {
    auto gamma = gamma_character(key);
    for (const auto& theta : rpartite_partitions(key.r, key.n)) {
      RPartite cur = theta;
      for (int i = 0; i < key.p; ++i) cur = shift_theta(cur, key);
      CHECK(cur == theta);
      CHECK(chi_theta(shift_theta(theta, key)) == gamma * chi_theta(theta));
    }
  }
}

TEST_CASE("orbits, degrees and symmetric counts") {
  for (const auto& theta : rpartite_partitions(2, 3)) CHECK(orbit_and_stabilizer(theta, {2, 2, 3}).stabilizer_order == 1);
  auto a = orbit_and_stabilizer(rp({{1}, {1}}), {2, 2, 2});
  CHECK(a.orbit.size() == 1);
  CHECK(a.stabilizer_order == 2);
  auto b = orbit_and_stabilizer(rp({{2}, {}}), {2, 2, 2});
  CHECK(b.orbit.size() == 2);
  CHECK(b.stabilizer_order == 1);
  CHECK(irr_degree_list({2, 1, 2}) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(irr_degree_list({2, 2, 2}) == std::vector<std::uint64_t>{1, 1, 1, 1});
  for (int r = 1; r <= 6; ++r)
    for (int p = 1; p <= r; ++p) {
      if (r % p) continue;
      for (int n = 1; n <= 4; ++n) {
        GroupKey key{r, p, n};
        if (key.order() > 100000) continue;
        auto degs = irr_degree_list(key);
        std::uint64_t sq = 0;
        for (auto d : degs) sq += d * d;
        CHECK(sq == key.order());
        auto G = enumerate(key);
        CHECK(degs.size() == G->classes().size());
        const auto sc = symmetric_count_check(key);
        CHECK(sc.symmetric_count <= sc.degree_sum);
        CHECK_MESSAGE(sc.equal == (key.gcd_pn() <= 2), key.str());
      }
    }
  const auto s = symmetric_count_check({2, 1, 2});
  CHECK(s.symmetric_count == 6);
  CHECK(s.degree_sum == 6);
  CHECK(symmetric_count_check({4, 2, 2}).equal);
  const auto t = symmetric_count_check({3, 3, 3});
  CHECK_FALSE(t.equal);
  CHECK(t.symmetric_count < t.degree_sum);
}

TEST_CASE("twisted indicators") {
  auto G = enumerate({3, 1, 1});
  const auto psi1 = chi_theta(rp({{}, {1}, {}}));
  CHECK(epsilon_tau(psi1, GroupMap::identity(G)) == 0);
  CHECK(epsilon_tau(chi_theta(rp({{1}, {}, {}})), inverse_transpose(G)) == 1);
  auto H = enumerate({3, 1, 2});
  const auto tau = inverse_transpose(H);
  for (const auto& theta : rpartite_partitions(3, 2)) CHECK(epsilon_tau(chi_theta(theta), tau) == 1);
}

TEST_CASE("restriction of free orbits stays irreducible") {
  const GroupKey key{4, 2, 3};
  auto H = enumerate(key);
  for (const auto& e : irreducible_labels(key)) {
    if (e.stabilizer != 1) continue;
    auto res = chi_theta(e.theta).restrict_to(H);
    CHECK(inner_product(res, res).as_rational() == 1);
  }
}

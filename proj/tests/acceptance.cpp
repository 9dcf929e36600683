// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include "reflekt/automorphism.hpp"
#include "reflekt/characters.hpp"
#include "reflekt/involution.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace reflekt;

namespace {

std::vector<GroupKey> base_grid() {
  std::vector<GroupKey> out;
  for (int r = 1; r <= 6; ++r)
    for (int p = 1; p <= r; ++p)
      if (r % p == 0)
        for (int n = 1; n <= 3; ++n) out.push_back({r, p, n});
  return out;
}

std::vector<GroupKey> order_grid() {
  auto g = base_grid();
  g.push_back({4, 2, 4});
  g.push_back({2, 2, 4});
  return g;
}

std::uint64_t expected_order(const GroupKey& k) {
  std::uint64_t v = 1;
  for (int i = 2; i <= k.n; ++i) v *= static_cast<std::uint64_t>(i);
  for (int i = 0; i < k.n; ++i) v *= static_cast<std::uint64_t>(k.r);
  return v / static_cast<std::uint64_t>(k.p);
}

std::int64_t as_int(const CycloNumber& z) { return static_cast<std::int64_t>(numerator(z.as_rational())); }

// Independent rank-two closed form.
std::int64_t closed_form(int r, int p, const WreathElement& g) {
  const int a = g.phases()[0], b = g.phases()[1];
  if (!g.perm().is_identity()) return 0;
  if (a == 0 && b == 0) return (r * r + 2 * r) / p;
  return ((a + b) % r == 0 && a % 2 == 0) ? 2 * r / p : 0;
}

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::function<std::string()> body;  // returns "" on success, else the failure
};

#define EXPECT(cond, msg)                 \
  do {                                    \
    if (!(cond)) {                        \
      std::ostringstream why_;            \
      why_ << msg;                        \
      return why_.str();                  \
    }                                     \
  } while (0)

std::string c1_orders() {
  for (const auto& k : order_grid()) EXPECT(enumerate(k)->order() == expected_order(k), "order of " << k.str());
  return "";
}

std::string c2_center() {
  for (const auto& k : order_grid()) {
    auto G = enumerate(k);
    std::vector<WreathElement> brute;
    for (const auto& z : G->elements()) {
      bool central = true;
      for (const auto& g : G->elements())
        if (!(multiply(z, g) == multiply(g, z))) {
          central = false;
          break;
        }
      if (central) brute.push_back(z);
    }
    auto formula = center_formula(k);
    std::sort(formula.begin(), formula.end());
    EXPECT(brute == formula, "center of " << k.str());
  }
  return "";
}

std::string c3_symmetric_count() {
  auto keys = base_grid();
  keys.push_back({4, 4, 4});
  for (const auto& k : keys) {
    auto G = enumerate(k);
    std::uint64_t symmetric = 0;
    for (const auto& g : G->elements())
      if (transpose(g) == g) ++symmetric;
    std::uint64_t degrees = 0;
    for (auto d : irr_degree_list(k)) degrees += d;
    if (k.gcd_pn() <= 2)
      EXPECT(symmetric == degrees, k.str() << ": " << symmetric << " vs " << degrees);
    else
      EXPECT(symmetric < degrees, k.str() << ": " << symmetric << " not below " << degrees);
  }
  return "";
}

std::string c4_apr() {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
    const GroupKey k{r, 1, n};
    const auto res = gelfand_check(ModelVariant::Apr, k);
    EXPECT(res.character_match && res.gelfand, "APR on " << k.str());
    // multiplicity free with every irreducible present
    const auto classes = static_cast<std::int64_t>(enumerate(k)->classes().size());
    EXPECT(inner_product(res.rep_char, res.rep_char) == CycloNumber(classes), "norm of APR character on " << k.str());
  }
  return "";
}

std::string c5_variants() {
  for (GroupKey k : {GroupKey{6, 2, 3}, GroupKey{4, 4, 3}, GroupKey{6, 3, 2}})
    EXPECT(gelfand_check(ModelVariant::Restricted, k).gelfand, "restricted on " << k.str());
  EXPECT(!gelfand_check(ModelVariant::Restricted, {4, 2, 3}).gelfand, "restricted on (4,2,3) should fail");
  for (GroupKey k : {GroupKey{4, 2, 3}, GroupKey{8, 2, 3}})
    EXPECT(gelfand_check(ModelVariant::Twisted, k).gelfand, "twisted on " << k.str());
  return "";
}

std::string c6_extraction() {
  const std::vector<std::pair<ModelVariant, GroupKey>> cases{{ModelVariant::Restricted, {6, 2, 3}},
                                                             {ModelVariant::Restricted, {4, 4, 3}},
                                                             {ModelVariant::Restricted, {6, 3, 2}},
                                                             {ModelVariant::Twisted, {4, 2, 3}},
                                                             {ModelVariant::Twisted, {8, 2, 3}}};
  for (const auto& [v, k] : cases) {
    const auto rep = ModelRep::build(v, k);
    EXPECT(verify_gim(extract_gim(rep), inverse_transpose(rep.group_ptr())), "extracted model on " << k.str());
  }
  return "";
}

std::string c7_rank_two() {
  for (auto [r, p] : std::vector<std::pair<int, int>>{{2, 2}, {6, 2}, {10, 2}, {6, 6}}) {
    const auto cand = gim_grp2(r, p);
    auto G = cand.group;
    EXPECT(verify_gim(cand, inverse_transpose(G)), "rank-two model (" << r << "," << p << ")");
    std::vector<CycloNumber> sum(G->classes().size());
    for (const auto& e : cand.entries) {
      const auto ind = induce_linear(G, e.lambda);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += ind.on_class(c);
    }
    for (std::size_t c = 0; c < sum.size(); ++c) {
      const auto& g = G->element(G->class_rep(c));
      EXPECT(as_int(sum[c]) == closed_form(r, p, g), "closed form at " << g.str());
    }
    if (r == 6 && p == 2) {
      EXPECT(closed_form(6, 2, WreathElement::identity(6, 2)) == 24, "");
      EXPECT(as_int(sum[G->class_of(G->index_of(WreathElement::make(6, {2, 4}, {0, 1})))]) == 6, "value 6 at ((2,4),1)");
      EXPECT(as_int(sum[G->class_of(G->identity())]) == 24, "value 24 at identity");
    }
  }
  return "";
}

std::string c8_aut_counts() {
  for (const auto& k : order_grid()) {
    if (k.order() > 20000) continue;
    const auto aut = enumerate_aut(k);
    EXPECT(BigInt(aut.size()) == aut_order_formula(k).aut, "|Aut| of " << k.str() << " = " << aut.size());
  }
  const std::vector<std::pair<GroupKey, std::size_t>> listed{{{1, 1, 2}, 1},   {{2, 2, 2}, 6},    {{2, 1, 2}, 8},
                                                             {{4, 2, 2}, 48},  {{3, 3, 3}, 432},  {{2, 2, 4}, 1152},
                                                             {{1, 1, 6}, 1440}};
  for (const auto& [k, expected] : listed) {
    EXPECT(enumerate_aut(k).size() == expected, "|Aut| of " << k.str());
    EXPECT(aut_order_formula(k).aut == expected, "formula for " << k.str());
  }
  return "";
}

// An automorphism by brute force, without consulting the validity conditions.
bool table_is_automorphism(const GroupData& G, const AlphaParams& a) {
  std::vector<GroupData::Index> table(G.order());
  std::vector<bool> hit(G.order(), false);
  for (GroupData::Index x = 0; x < G.order(); ++x) {
    const auto y = G.find(alpha_apply(a, G.element(x)));
    if (y == GroupData::npos || hit[y]) return false;
    hit[y] = true;
    table[x] = y;
  }
  for (GroupData::Index x = 0; x < G.order(); ++x)
    for (GroupData::Index y = 0; y < G.order(); ++y)
      if (table[G.mul(x, y)] != G.mul(table[x], table[y])) return false;
  return true;
}

std::string c9_composition() {
  for (GroupKey k : {GroupKey{4, 2, 2}, GroupKey{6, 2, 3}, GroupKey{3, 1, 3}}) {
    auto G = enumerate(k);
    std::vector<AlphaParams> valid;
    for (int j = 0; j < k.r; ++j)
      for (int kk = 0; kk < k.r; ++kk)
        for (int m = 0; m < k.r; ++m) {
          const AlphaParams a{j, kk, m};
          const bool accepted = alpha_violation(a, k).empty();
          // the validity conditions accept exactly the parameters whose table is an automorphism
          EXPECT(accepted == table_is_automorphism(*G, a),
                 "alpha(" << j << "," << kk << "," << m << ") on " << k.str() << (accepted ? " accepted" : " rejected"));
          if (accepted) {
            valid.push_back(a);
          } else {
            bool threw = false;
            try {
              alpha_map(a, k);
            } catch (const Error& e) {
              threw = e.code() == ErrorCode::NotAnAutomorphism;
            }
            EXPECT(threw, "rejected alpha(" << j << "," << kk << "," << m << ") did not raise");
          }
        }
    for (const auto& a : valid) {
      if (a.k == 0 && a.m == 0)
        for (const auto& b : valid)
          if (b.k == 0 && b.m == 0) EXPECT(beta_map(a.j, k).compose(beta_map(b.j, k)) == beta_map(a.j * b.j, k), "beta law");
      if (a.j != 1) continue;
      for (const auto& b : valid)
        if (b.j == 1)
          EXPECT(gamma_map(a.k, a.m, k).compose(gamma_map(b.k, b.m, k)) == gamma_map(a.k + b.k + k.n * a.k * b.k, a.m + b.m, k),
                 "gamma law");
      for (const auto& b : valid)
        if (b.k == 0 && b.m == 0) {
          const auto joint = alpha_map({b.j, b.j * a.k, a.m}, k);
          EXPECT(beta_map(b.j, k).compose(gamma_map(a.k, a.m, k)) == joint, "beta gamma law");
          EXPECT(gamma_map(a.k, a.m, k).compose(beta_map(b.j, k)) == joint, "gamma beta law");
        }
    }
  }
  return "";
}

std::string c10_inner() {
  for (GroupKey k : {GroupKey{4, 2, 2}, GroupKey{4, 2, 3}, GroupKey{6, 2, 2}}) {
    auto G = enumerate(k);
    auto A = enumerate(k.ambient());
    // every Ad(h) with h in G(r,p,n) as a table
    std::vector<std::vector<GroupData::Index>> inner;
    for (const auto& h : G->elements()) {
      std::vector<GroupData::Index> t;
      for (const auto& x : G->elements()) t.push_back(G->index_of(multiply(multiply(h, x), invert(h))));
      inner.push_back(std::move(t));
    }
    std::sort(inner.begin(), inner.end());
    for (const auto& g : A->elements()) {
      std::vector<GroupData::Index> t;
      for (const auto& x : G->elements()) t.push_back(G->index_of(multiply(multiply(g, x), invert(g))));
      const bool member = std::binary_search(inner.begin(), inner.end(), t);
      EXPECT(member == is_inner(g, k), "inner criterion at " << g.str() << " on " << k.str());
    }
  }
  return "";
}

std::string c11_obstruction() {
  EXPECT(commutator_obstruction({4, 2, 2}), "obstruction on (4,2,2)");
  EXPECT(commutator_obstruction({4, 2, 4}), "obstruction on (4,2,4)");
  {
    auto G = enumerate({4, 2, 2});
    EXPECT(!brute_gim_search(G, inverse_transpose(G)).model, "search found a model on (4,2,2)");
  }
  for (GroupKey k : {GroupKey{2, 2, 2}, GroupKey{6, 2, 2}}) {
    auto G = enumerate(k);
    const auto res = brute_gim_search(G, inverse_transpose(G));
    EXPECT(res.model && verify_gim(*res.model, inverse_transpose(G)), "search on " << k.str());
  }
  for (const auto& k : base_grid()) {
    const bool expected = k.gcd_pn() == 1 || (k.n == 2 && (k.r / k.p) % 2 == 1);
    EXPECT(gim_exists(k).exists == expected, "classification of " << k.str());
  }
  return "";
}

std::string c12_plus_minus() {
  const auto fix = chi_pm_check({2, 1, 3});
  EXPECT(!fix.swap_predicted && fix.passed, "fix branch on (2,1,3)");
  const auto swap = chi_pm_check({6, 2, 3});
  EXPECT(swap.swap_predicted && swap.passed, "swap branch on (6,2,3)");
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "group orders on the grid", 5, c1_orders},
      {2, "brute-force center equals the formula", 5, c2_center},
      {3, "symmetric elements vs sum of irreducible degrees", 30, c3_symmetric_count},
      {4, "APR model is a Gelfand model", 60, c4_apr},
      {5, "restricted and twisted model boundary", 180, c5_variants},
      {6, "extracted involution models verify", 120, c6_extraction},
      {7, "explicit rank-two model and closed form", 30, c7_rank_two},
      {8, "automorphism counts match the order formula", 300, c8_aut_counts},
      {9, "alpha validity and composition laws", 30, c9_composition},
      {10, "inner automorphism criterion", 60, c10_inner},
      {11, "obstruction, search and classification", 300, c11_obstruction},
      {12, "gamma on the parity halves of the model", 60, c12_plus_minus},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs > c.limit_s) why = "took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s";
    std::printf("criterion %2d %s  %s (%.2f s)%s%s\n", c.number, why.empty() ? "PASS" : "FAIL", c.title.c_str(), secs,
                why.empty() ? "" : ": ", why.c_str());
    if (!why.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

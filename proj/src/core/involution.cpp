#include "reflekt/involution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace reflekt {

namespace {

bool contains_sorted(const std::vector<Index>& v, Index x) { return std::binary_search(v.begin(), v.end(), x); }

Index element_order_power_identity(const GroupData& G, Index g, int& order) {
  Index x = g;
  order = 1;
  while (x != G.identity()) {
    x = G.mul(x, g);
    ++order;
  }
  return x;
}

std::vector<Index> centralizer_of(const GroupData& G, const GroupMap& tau, Index omega) {
  std::vector<Index> out;
  for (Index g = 0; g < G.order(); ++g)
    if (G.mul(G.mul(g, omega), G.inv(tau(g))) == omega) out.push_back(g);
  return out;
}

void require_group_key(const GroupMap& tau, const GroupData& G) {
  if (!(tau.group().key() == G.key())) fail(ErrorCode::Parameter, "automorphism acts on a different group");
}

}  // namespace

// ---------------------------------------------------------------- twisted classes

Index TwistedOrbitDecomposition::act(Index g, Index omega) const {
  return group->mul(group->mul(g, omega), group->inv((*tau)(g)));
}

TwistedOrbitDecomposition twisted_decomposition(std::shared_ptr<const GroupData> group, const GroupMap& tau) {
  const GroupData& G = *group;
  require_group_key(tau, G);
  if (!tau.compose(tau).is_identity()) fail(ErrorCode::Parameter, "twisting automorphism is not an involution");
  TwistedOrbitDecomposition d;
  d.group = group;
  d.tau = std::make_shared<const GroupMap>(tau);
  d.orbit_of.assign(G.order(), -1);
  for (Index w = 0; w < G.order(); ++w)
    if (G.mul(w, tau(w)) == G.identity()) d.involutions.push_back(w);
  for (Index w : d.involutions) {
    if (d.orbit_of[w] >= 0) continue;
    const auto id = static_cast<std::int32_t>(d.orbits.size());
    std::vector<Index> orbit{w};
    d.orbit_of[w] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (Index s : G.generators()) {
        const Index y = d.act(s, orbit[head]);
        if (d.orbit_of[y] < 0) {
          d.orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    d.reps.push_back(orbit.front());
    d.centralizers.push_back(centralizer_of(G, tau, orbit.front()));
    if (orbit.size() * d.centralizers.back().size() != G.order())
      fail(ErrorCode::Consistency, "orbit-stabilizer count fails for twisted class of " + G.element(w).str());
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

ClassFunction counting_char(std::shared_ptr<const GroupData> group, const GroupMap& tau) {
  const GroupData& G = *group;
  require_group_key(tau, G);
  std::vector<std::int64_t> counts(G.order(), 0);
  for (Index u = 0; u < G.order(); ++u) ++counts[G.mul(u, tau(u))];
  return ClassFunction::from_element_counts(std::move(group), counts);
}

PermStats perm_stats(const Perm& pi) { return {pi.inversions(), pi.pairs(), pi.fixed_points()}; }

// ---------------------------------------------------------------- signs

namespace {

// |B| with the odd-phase rule (odd = true) or the even-phase rule.
int b_count(const WreathElement& g, const WreathElement& omega, bool odd) {
  const int r = omega.modulus();
  if (r % 2 != 0) return 0;
  int count = 0;
  for (int i : omega.perm().fixed_points()) {
    const int z = omega.phases()[i];
    if ((z % 2 == 1) != odd) continue;
    const int k = odd ? (z - 1) / 2 : z / 2;
    const int v = g.phases()[i] + k;
    if (v >= r / 2 && v <= r - 1) ++count;
  }
  return count;
}

int inv_pair_count(const WreathElement& g, const WreathElement& omega) {
  int count = 0;
  for (auto [i, j] : omega.perm().pairs())
    if (g.perm()(i) > g.perm()(j)) ++count;
  return count;
}

void require_symmetric(const WreathElement& g, const WreathElement& omega) {
  if (g.modulus() != omega.modulus() || g.rank() != omega.rank())
    fail(ErrorCode::Parameter, "sign arguments have different shapes");
  if (!(transpose(omega) == omega)) fail(ErrorCode::Parameter, omega.str() + " is not symmetric");
}

void require_twisted_parity(const GroupKey& key) {
  key.validate();
  if (key.p % 2 != 0 || (key.r / key.p) % 2 != 0 || key.gcd_pn() != 1)
    fail(ErrorCode::Parameter, "twisted model needs p and r/p even and gcd(p,n) = 1, got " + key.str());
}

}  // namespace

int sign_apr(const WreathElement& g, const WreathElement& omega) {
  require_symmetric(g, omega);
  return (b_count(g, omega, true) + inv_pair_count(g, omega)) % 2 == 0 ? 1 : -1;
}

int sign_twisted(const WreathElement& g, const WreathElement& omega, const GroupKey& key) {
  require_twisted_parity(key);
  require_symmetric(g, omega);
  const bool first_branch = omega.delta() % (2 * key.p) == 0;
  return (b_count(g, omega, first_branch) + inv_pair_count(g, omega)) % 2 == 0 ? 1 : -1;
}

const char* variant_name(ModelVariant v) noexcept {
  switch (v) {
    case ModelVariant::Apr: return "apr";
    case ModelVariant::Restricted: return "restricted";
    case ModelVariant::Twisted: return "twisted";
  }
  return "unknown";
}

// ---------------------------------------------------------------- ModelRep

int ModelRep::sign(Index g, Index omega) const {
  const auto& a = group_->element(g);
  const auto& w = group_->element(omega);
  if (variant_ == ModelVariant::Twisted) return sign_twisted(a, w, group_->key());
  return sign_apr(a, w);
}

ModelRep ModelRep::build(ModelVariant variant, const GroupKey& key) {
  key.validate();
  if (variant == ModelVariant::Apr && key.p != 1)
    fail(ErrorCode::Parameter, "the APR model is defined on G(r,1,n), got " + key.str());
  if (variant == ModelVariant::Twisted) require_twisted_parity(key);
  ModelRep rep;
  rep.variant_ = variant;
  rep.group_ = enumerate(key);
  const GroupData& G = *rep.group_;
  rep.position_.assign(G.order(), -1);
  for (Index w = 0; w < G.order(); ++w)
    if (transpose(G.element(w)) == G.element(w)) {
      rep.position_[w] = static_cast<std::int32_t>(rep.basis_.size());
      rep.basis_.push_back(w);
    }
  const std::size_t dim = rep.basis_.size();
  rep.target_.resize(G.order() * dim);
  rep.sign_.resize(G.order() * dim);
  for (Index g = 0; g < G.order(); ++g) {
    const WreathElement& a = G.element(g);
    const WreathElement at = transpose(a);
    for (std::size_t b = 0; b < dim; ++b) {
      const WreathElement& w = G.element(rep.basis_[b]);
      const Index y = G.index_of(multiply(multiply(a, w), at));
      const std::int32_t pos = rep.position_[y];
      if (pos < 0) fail(ErrorCode::Consistency, "g w g^T left the symmetric elements");
      rep.target_[g * dim + b] = static_cast<std::uint32_t>(pos);
      rep.sign_[g * dim + b] = static_cast<std::int8_t>(rep.sign(g, rep.basis_[b]));
    }
  }

  auto check_pair = [&](Index g, Index h) {
    const Index gh = G.mul(g, h);
    for (std::size_t b = 0; b < dim; ++b) {
      const std::uint32_t hb = rep.target_[h * dim + b];
      if (rep.target_[gh * dim + b] != rep.target_[g * dim + hb] ||
          rep.sign_[gh * dim + b] != rep.sign_[g * dim + hb] * rep.sign_[h * dim + b])
        fail(ErrorCode::Consistency, std::string(variant_name(variant)) + " action on G" + key.str() +
                                         " is not a homomorphism at g = " + G.element(g).str() +
                                         ", h = " + G.element(h).str());
    }
    ++rep.audited_pairs_;
  };
  if (G.order() <= 2000) {
    for (Index g = 0; g < G.order(); ++g)
      for (Index h = 0; h < G.order(); ++h) check_pair(g, h);
  } else {
    for (Index g = 0; g < G.order(); ++g)
      for (Index s : G.generators()) check_pair(g, s);
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 10000; ++i)
      check_pair(static_cast<Index>(rng() % G.order()), static_cast<Index>(rng() % G.order()));
  }
  return rep;
}

ClassFunction rep_character(const ModelRep& rep) { return rep_character(rep, {}); }

ClassFunction rep_character(const ModelRep& rep, const std::function<bool(const WreathElement&)>& filter) {
  const GroupData& G = *rep.group_ptr();
  const std::size_t dim = rep.dimension();
  std::vector<bool> keep(dim, true);
  if (filter)
    for (std::size_t b = 0; b < dim; ++b) keep[b] = filter(G.element(rep.basis()[b]));
  std::vector<std::int64_t> trace(G.order(), 0);
  for (Index g = 0; g < G.order(); ++g)
    for (std::size_t b = 0; b < dim; ++b)
      if (keep[b] && rep.target(g, b) == b) trace[g] += rep.sign_at(g, b);
  return ClassFunction::from_element_counts(rep.group_ptr(), trace);
}

GelfandResult gelfand_check(ModelVariant variant, const GroupKey& key) {
  key.validate();
  if (key.gcd_pn() > 2)
    fail(ErrorCode::Unsupported, "gelfand check needs gcd(p,n) <= 2, got " + key.str());
  const ModelRep rep = ModelRep::build(variant, key);
  auto G = rep.group_ptr();
  ClassFunction rc = rep_character(rep);
  ClassFunction count = counting_char(G, inverse_transpose(G));
  const bool equal = symmetric_count_check(key).equal;
  const bool match = rc == count;
  return {equal && match, equal, match, std::move(rc), std::move(count)};
}

// ---------------------------------------------------------------- linear characters

std::optional<std::size_t> LinearChar::position(Index g) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), g);
  if (it == domain.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - domain.begin());
}

void LinearChar::verify(const GroupData& group) const {
  if (domain.size() != exponent.size() || domain.empty())
    fail(ErrorCode::Consistency, "linear character shape is malformed");
  const auto id = position(group.identity());
  if (!id || exponent[*id] % modulus != 0) fail(ErrorCode::Consistency, "linear character is not 1 at the identity");
  for (Index s : subgroup_generators(group, domain)) {
    const std::int64_t es = exponent[*position(s)];
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const auto pos = position(group.mul(domain[i], s));
      if (!pos) fail(ErrorCode::Consistency, "linear character domain is not a subgroup");
      if ((exponent[i] + es - exponent[*pos]) % modulus != 0)
        fail(ErrorCode::Consistency, "linear character is not multiplicative at " +
                                         group.element(domain[i]).str() + " * " + group.element(s).str());
    }
  }
}

std::vector<Index> subgroup_generators(const GroupData& group, const std::vector<Index>& subgroup) {
  std::vector<Index> gens;
  std::vector<Index> span{group.identity()};
  for (Index h : subgroup) {
    if (contains_sorted(span, h)) continue;
    gens.push_back(h);
    span = subgroup_closure(group, gens);
  }
  if (span != subgroup) fail(ErrorCode::Parameter, "element set is not a subgroup");
  return gens;
}

std::vector<Index> derived_subgroup(const GroupData& group, const std::vector<Index>& subgroup) {
  const auto gens = subgroup_generators(group, subgroup);
  std::vector<Index> normal_gens;
  for (Index x : gens)
    for (Index y : gens) {
      const Index c = group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y)));
      if (c != group.identity() && std::find(normal_gens.begin(), normal_gens.end(), c) == normal_gens.end())
        normal_gens.push_back(c);
    }
  // normal closure inside the subgroup
  std::vector<Index> closure = subgroup_closure(group, normal_gens);
  for (bool grown = true; grown;) {
    grown = false;
    for (Index x : gens)
      for (Index k : std::vector<Index>(normal_gens)) {
        const Index y = group.mul(group.mul(x, k), group.inv(x));
        if (!contains_sorted(closure, y)) {
          normal_gens.push_back(y);
          closure = subgroup_closure(group, normal_gens);
          grown = true;
        }
      }
  }
  return closure;
}

int group_exponent(const GroupData& group) {
  int e = 1;
  for (Index g = 0; g < group.order(); ++g) {
    int order = 1;
    element_order_power_identity(group, g, order);
    e = std::lcm(e, order);
  }
  return e;
}

std::vector<LinearChar> linear_characters(const GroupData& group, const std::vector<Index>& subgroup, int modulus) {
  const std::vector<Index> derived = derived_subgroup(group, subgroup);
  const std::size_t H = subgroup.size();
  auto pos_in_h = [&](Index g) {
    return static_cast<std::size_t>(std::lower_bound(subgroup.begin(), subgroup.end(), g) - subgroup.begin());
  };
  // label cosets hD
  std::vector<std::int32_t> coset(H, -1);
  std::vector<Index> coset_rep;
  for (std::size_t i = 0; i < H; ++i) {
    if (coset[i] >= 0) continue;
    const auto id = static_cast<std::int32_t>(coset_rep.size());
    coset_rep.push_back(subgroup[i]);
    for (Index d : derived) coset[pos_in_h(group.mul(subgroup[i], d))] = id;
  }
  const std::size_t q = coset_rep.size();
  auto qmul = [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(coset[pos_in_h(group.mul(coset_rep[a], coset_rep[b]))]);
  };
  const std::size_t qid = static_cast<std::size_t>(coset[pos_in_h(group.identity())]);

  // greedy generators of the quotient and their orders
  std::vector<std::size_t> qgens;
  std::vector<int> qorders;
  std::vector<bool> span(q, false);
  span[qid] = true;
  for (std::size_t x = 0; x < q; ++x) {
    if (span[x]) continue;
    qgens.push_back(x);
    int order = 1;
    for (std::size_t y = x; y != qid; y = qmul(y, x)) ++order;
    qorders.push_back(order);
    if (modulus % order != 0)
      fail(ErrorCode::Parameter, "modulus " + std::to_string(modulus) + " too small for the abelianization");
    std::vector<std::size_t> members;
    for (std::size_t y = 0; y < q; ++y)
      if (span[y]) members.push_back(y);
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t g : qgens) {
        const std::size_t y = qmul(members[head], g);
        if (!span[y]) {
          span[y] = true;
          members.push_back(y);
        }
      }
  }

  std::vector<LinearChar> out;
  std::vector<int> digits(qgens.size(), 0);
  std::vector<std::int64_t> val(q);
  std::vector<bool> set(q);
  for (;;) {
    std::fill(set.begin(), set.end(), false);
    val[qid] = 0;
    set[qid] = true;
    std::vector<std::size_t> queue{qid};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head)
      for (std::size_t k = 0; k < qgens.size() && ok; ++k) {
        const std::size_t y = qmul(queue[head], qgens[k]);
        const std::int64_t e = (val[queue[head]] + static_cast<std::int64_t>(digits[k]) * (modulus / qorders[k])) % modulus;
        if (!set[y]) {
          set[y] = true;
          val[y] = e;
          queue.push_back(y);
        } else if (val[y] != e) {
          ok = false;
        }
      }
    if (ok) {
      LinearChar lc;
      lc.domain = subgroup;
      lc.modulus = modulus;
      for (std::size_t i = 0; i < H; ++i) lc.exponent.push_back(val[static_cast<std::size_t>(coset[i])]);
      out.push_back(std::move(lc));
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == qorders[k]) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  if (out.size() != q)
    fail(ErrorCode::Consistency, "found " + std::to_string(out.size()) + " linear characters for an abelianization of order " +
                                     std::to_string(q));
  std::sort(out.begin(), out.end(), [](const LinearChar& a, const LinearChar& b) { return a.exponent < b.exponent; });
  return out;
}

ClassFunction induce_linear(std::shared_ptr<const GroupData> group, const LinearChar& lambda) {
  const GroupData& G = *group;
  subgroup_generators(G, lambda.domain);  // throws unless a subgroup
  std::vector<CycloNumber> values;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(lambda.modulus));
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Index h : G.classes()[c])
      if (auto pos = lambda.position(h)) {
        const std::int64_t e = lambda.exponent[*pos] % lambda.modulus;
        ++counts[static_cast<std::size_t>(e < 0 ? e + lambda.modulus : e)];
      }
    const Rational scale(static_cast<std::int64_t>(G.centralizer_order(c)), static_cast<std::int64_t>(lambda.domain.size()));
    values.push_back(CycloNumber::from_exponent_counts(lambda.modulus, counts, scale));
  }
  return ClassFunction(std::move(group), std::move(values));
}

// ---------------------------------------------------------------- models

nlohmann::json ModelCandidate::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json lambda = nlohmann::json::object();
    for (std::size_t i = 0; i < e.lambda.domain.size(); ++i) {
      const auto v = e.lambda.value(i);
      const std::string name = group->element(e.lambda.domain[i]).str();
      if (v.is_rational())
        lambda[name] = static_cast<std::int64_t>(numerator(v.as_rational()));
      else
        lambda[name] = v.to_json();
    }
    classes.push_back({{"rep", group->element(e.rep).to_json()},
                       {"centralizer_order", e.lambda.domain.size()},
                       {"lambda", std::move(lambda)}});
  }
  return classes;
}

ModelCandidate extract_gim(const ModelRep& rep) {
  auto G = rep.group_ptr();
  const auto d = twisted_decomposition(G, inverse_transpose(G));
  ModelCandidate cand;
  cand.group = G;
  for (std::size_t o = 0; o < d.reps.size(); ++o) {
    const Index w = d.reps[o];
    const std::size_t b = static_cast<std::size_t>(rep.position(w));
    LinearChar lc;
    lc.modulus = 2;
    lc.domain = d.centralizers[o];
    for (Index g : lc.domain) {
      if (rep.target(g, b) != b) fail(ErrorCode::Consistency, "centralizer element moves its basis vector");
      lc.exponent.push_back(rep.sign_at(g, b) == 1 ? 0 : 1);
    }
    lc.verify(*G);
    cand.entries.push_back({w, std::move(lc)});
  }
  return cand;
}

bool verify_gim(const ModelCandidate& candidate, const GroupMap& tau) {
  const auto& G = candidate.group;
  const auto d = twisted_decomposition(G, tau);
  std::vector<bool> hit(d.orbits.size(), false);
  for (const auto& e : candidate.entries) {
    const std::int32_t o = d.orbit_of[e.rep];
    if (o < 0) fail(ErrorCode::Parameter, G->element(e.rep).str() + " is not a generalized involution");
    if (hit[static_cast<std::size_t>(o)]) fail(ErrorCode::Parameter, "two entries share a twisted class");
    hit[static_cast<std::size_t>(o)] = true;
    if (e.lambda.domain != centralizer_of(*G, tau, e.rep))
      fail(ErrorCode::Parameter, "character domain differs from the twisted centralizer of " + G->element(e.rep).str());
    e.lambda.verify(*G);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    fail(ErrorCode::Parameter, "entries miss a twisted class");
  std::uint64_t degree_sum = 0;
  for (auto deg : irr_degree_list(G->key())) degree_sum += deg;
  if (degree_sum != d.involutions.size()) return false;
  const ClassFunction target = counting_char(G, tau);
  std::optional<ClassFunction> sum;
  for (const auto& e : candidate.entries) {
    ClassFunction ind = induce_linear(G, e.lambda);
    sum = sum ? *sum + ind : ind;
  }
  return sum && *sum == target;
}

ModelCandidate gim_grp2(int r, int p) {
  if (r % 2 != 0 || p % 2 != 0 || p < 1 || r % p != 0 || (r / p) % 2 == 0)
    fail(ErrorCode::Parameter, "rank-two model needs r, p even, p | r and r/p odd");
  const GroupKey key{r, p, 2};
  auto G = enumerate(key);
  const GroupMap tau = inverse_transpose(G);
  auto el = [&](int a, int b, bool swap) {
    return G->index_of(WreathElement::make(r, {a, b}, swap ? std::vector<int>{1, 0} : std::vector<int>{0, 1}));
  };
  const int h = r / 2;
  const std::vector<Index> omega{el(0, 0, false), el(1, -1, false), el(0, 0, true), el(p / 2, p / 2, true)};

  auto sorted = [](std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<Index> grr2;
  for (Index g = 0; g < G->order(); ++g)
    if (G->element(g).delta() == 0) grr2.push_back(g);
  const std::vector<std::vector<Index>> expected{
      sorted({el(0, 0, false), el(h, h, false), el(0, 0, true), el(h, h, true)}),
      sorted({el(0, 0, false), el(h, h, false), el(-1, 1, true), el(h - 1, h + 1, true)}), grr2, grr2};

  const auto d = twisted_decomposition(G, tau);
  if (d.orbits.size() != 4) fail(ErrorCode::Consistency, "expected four twisted classes");
  std::vector<bool> seen(4, false);
  ModelCandidate cand;
  cand.group = G;
  for (int i = 0; i < 4; ++i) {
    const std::int32_t o = d.orbit_of[omega[static_cast<std::size_t>(i)]];
    if (o < 0 || seen[static_cast<std::size_t>(o)]) fail(ErrorCode::Consistency, "representatives do not split the twisted classes");
    seen[static_cast<std::size_t>(o)] = true;
    const auto C = centralizer_of(*G, tau, omega[static_cast<std::size_t>(i)]);
    if (C != expected[static_cast<std::size_t>(i)])
      fail(ErrorCode::Consistency, "twisted centralizer " + std::to_string(i + 1) + " differs from the stated set");
    LinearChar lc;
    lc.modulus = 2;
    lc.domain = C;
    for (Index g : C) {
      const WreathElement& x = G->element(g);
      int v = 1;
      switch (i) {
        case 0: break;
        case 1:
          v = (g == el(0, 0, false) || g == el(h - 1, h + 1, true)) ? 1 : -1;
          break;
        case 2: v = x.perm().sign(); break;
        case 3: v = x.perm().sign() * (x.phases()[0] % 2 == 0 ? 1 : -1); break;
      }
      lc.exponent.push_back(v == 1 ? 0 : 1);
    }
    lc.verify(*G);
    cand.entries.push_back({omega[static_cast<std::size_t>(i)], std::move(lc)});
  }

  // h_ij = ((ip + j, -j), 1) give left coset representatives
  for (int i = 0; i < 4; ++i) {
    std::vector<Index> reps;
    for (int a = 0; a < r / p; ++a)
      for (int j = 0; j < (i < 2 ? r / 2 : 1); ++j) reps.push_back(el(a * p + j, -j, false));
    const auto& C = cand.entries[static_cast<std::size_t>(i)].lambda.domain;
    if (reps.size() * C.size() != G->order()) fail(ErrorCode::Consistency, "coset representative count is off");
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        if (contains_sorted(C, G->mul(G->inv(reps[a]), reps[b])))
          fail(ErrorCode::Consistency, "two coset representatives share a coset");
  }
  return cand;
}

std::int64_t model_char_grp2(int r, int p, const WreathElement& g) {
  if (r % 2 != 0 || p % 2 != 0 || r % p != 0 || (r / p) % 2 == 0)
    fail(ErrorCode::Parameter, "rank-two model character needs r, p even, p | r and r/p odd");
  if (!is_member(g, {r, p, 2})) fail(ErrorCode::Parameter, g.str() + " is not in G(r,p,2)");
  const int a = g.phases()[0];
  const int b = g.phases()[1];
  if (!g.perm().is_identity()) return 0;
  if (a == 0 && b == 0) return (static_cast<std::int64_t>(r) * r + 2 * r) / p;
  if ((a + b) % r == 0 && a % 2 == 0) return 2 * r / p;
  return 0;
}

ChiPmResult chi_pm_check(const GroupKey& key) {
  key.validate();
  if (key.r % 2 != 0) fail(ErrorCode::Unsupported, "chi+/chi- split needs r even, got " + key.str());
  const ModelRep rep = ModelRep::build(ModelVariant::Apr, key.ambient());
  ClassFunction plus = rep_character(rep, [](const WreathElement& w) { return w.delta() % 2 == 0; });
  ClassFunction minus = rep_character(rep, [](const WreathElement& w) { return w.delta() % 2 != 0; });
  const ClassFunction gamma = gamma_character(key);
  const bool swap = key.n % 2 == 1 && (key.r / key.p) % 2 == 1;
  const bool passed = swap ? (gamma * plus == minus && gamma * minus == plus)
                           : (gamma * plus == plus && gamma * minus == minus);
  return {swap, passed, std::move(plus), std::move(minus)};
}

bool commutator_obstruction(const GroupKey& key) {
  key.validate();
  if (key.gcd_pn() != 2 || (key.r / key.p) % 2 != 0)
    fail(ErrorCode::Parameter, "commutator obstruction needs gcd(p,n) = 2 and r/p even, got " + key.str());
  auto G = enumerate(key);
  const auto d = twisted_decomposition(G, inverse_transpose(G));
  const Index z = G->index_of(central_power(key.r, key.n, key.r / 2));
  for (const auto& C : d.centralizers)
    if (!contains_sorted(derived_subgroup(*G, C), z)) return false;
  return true;
}

SearchResult brute_gim_search(std::shared_ptr<const GroupData> group, const GroupMap& tau, std::uint64_t budget) {
  SearchResult result;
  const auto d = twisted_decomposition(group, tau);
  std::uint64_t degree_sum = 0;
  for (auto deg : irr_degree_list(group->key())) degree_sum += deg;
  if (degree_sum != d.involutions.size()) return result;

  const int modulus = group_exponent(*group);
  std::vector<std::size_t> order(d.reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.centralizers[a].size() > d.centralizers[b].size();
  });
  std::vector<std::vector<LinearChar>> chars;
  std::vector<std::vector<ClassFunction>> induced;
  result.combinations = 1;
  for (std::size_t o : order) {
    chars.push_back(linear_characters(*group, d.centralizers[o], modulus));
    const auto count = static_cast<std::uint64_t>(chars.back().size());
    result.combinations = result.combinations > budget / count + 1 ? budget + 1 : result.combinations * count;
    if (result.combinations > budget)
      fail(ErrorCode::Size, "GIM search space exceeds budget " + std::to_string(budget));
  }
  for (const auto& list : chars) {
    induced.emplace_back();
    for (const auto& lc : list) induced.back().push_back(induce_linear(group, lc));
  }

  const ClassFunction target = counting_char(group, tau);
  std::vector<std::size_t> choice(order.size());
  // a partial sum X of a multiplicity-free sum of irreducibles has <X,X> = <X,target>
  auto rec = [&](auto&& self, std::size_t level, const std::optional<ClassFunction>& partial) -> bool {
    ++result.nodes;
    if (level == order.size()) return partial && *partial == target;
    for (std::size_t k = 0; k < induced[level].size(); ++k) {
      ClassFunction next = partial ? *partial + induced[level][k] : induced[level][k];
      if (!(inner_product(next, next) == inner_product(next, target))) continue;
      choice[level] = k;
      if (self(self, level + 1, next)) return true;
    }
    return false;
  };
  if (rec(rec, 0, std::nullopt)) {
    ModelCandidate cand;
    cand.group = group;
    for (std::size_t level = 0; level < order.size(); ++level)
      cand.entries.push_back({d.reps[order[level]], chars[level][choice[level]]});
    result.model = std::move(cand);
  }
  return result;
}

}  // namespace reflekt

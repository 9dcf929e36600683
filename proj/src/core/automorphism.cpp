#include "reflekt/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace reflekt {

namespace {

using Index = GroupData::Index;

int mod(std::int64_t a, int m) {
  const auto v = static_cast<int>(a % m);
  return v < 0 ? v + m : v;
}

WreathElement cycles(int n, std::vector<std::vector<int>> cs) { return {PhaseVector(1, n), Perm::from_cycles(n, cs)}; }

}  // namespace

WreathElement alpha_apply(const AlphaParams& a, const WreathElement& g) {
  const int r = g.modulus();
  const int n = g.rank();
  const std::int64_t shift = static_cast<std::int64_t>(g.perm().length()) * a.m + static_cast<std::int64_t>(g.delta()) * a.k;
  std::vector<int> phases(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    phases[static_cast<std::size_t>(i)] = mod(static_cast<std::int64_t>(a.j) * g.phases()[i] + shift, r);
  return {PhaseVector(r, phases), g.perm()};
}

std::string alpha_violation(const AlphaParams& a, const GroupKey& key) {
  key.validate();
  const int r = key.r;
  const int q = key.r / key.p;
  const int j = mod(a.j, r);
  const int m = mod(a.m, r);
  std::ostringstream out;
  if (std::gcd(j, r) != 1) {
    out << "gcd(j, r) = gcd(" << j << ", " << r << ") != 1";
  } else if (std::gcd(mod(static_cast<std::int64_t>(a.j) + static_cast<std::int64_t>(key.n) * a.k, q), q) != 1) {
    out << "gcd(j + nk, r/p) != 1 for j = " << a.j << ", k = " << a.k;
  } else if ((2 * m) % r != 0) {
    out << "z = c^" << m << " does not square to 1";
  } else if ((static_cast<std::int64_t>(key.n) * m) % key.p != 0) {
    out << "z = c^" << m << " is not in G" << key.str();
  }
  return out.str();
}

GroupMap alpha_map(const AlphaParams& a, const GroupKey& key) {
  if (auto why = alpha_violation(a, key); !why.empty())
    fail(ErrorCode::NotAnAutomorphism, "alpha(" + std::to_string(a.j) + "," + std::to_string(a.k) + ",c^" +
                                           std::to_string(a.m) + ") on G" + key.str() + ": " + why);
  return GroupMap::from_function(enumerate(key), [&](const WreathElement& g) { return alpha_apply(a, g); });
}

GroupMap ad_map(const WreathElement& g, const GroupKey& key) {
  key.validate();
  if (g.modulus() != key.r || g.rank() != key.n)
    fail(ErrorCode::Parameter, g.str() + " is not in G(" + std::to_string(key.r) + ",1," + std::to_string(key.n) + ")");
  const WreathElement gi = invert(g);
  return GroupMap::from_function(enumerate(key), [&](const WreathElement& x) { return multiply(multiply(g, x), gi); });
}

bool is_inner(const WreathElement& g, const GroupKey& key) {
  key.validate();
  return g.delta() % key.gcd_pn() == 0;
}

bool is_inner(const GroupMap& m) {
  const GroupData& G = m.group();
  for (Index h = 0; h < G.order(); ++h) {
    const Index hi = G.inv(h);
    bool same = true;
    for (Index s : G.generators())
      if (G.mul(G.mul(h, s), hi) != m(s)) {
        same = false;
        break;
      }
    if (same) return true;
  }
  return false;
}

GroupMap extend_generators(std::shared_ptr<const GroupData> group, const std::vector<WreathElement>& gens,
                           const std::vector<WreathElement>& images) {
  const GroupData& G = *group;
  if (gens.size() != images.size()) fail(ErrorCode::Parameter, "generator and image lists differ in length");
  std::vector<Index> gi, ii;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Index a = G.find(gens[i]);
    if (a == GroupData::npos) fail(ErrorCode::Parameter, gens[i].str() + " is not in G" + G.key().str());
    const Index b = G.find(images[i]);
    if (b == GroupData::npos)
      fail(ErrorCode::NotAnAutomorphism, "image " + images[i].str() + " is not in G" + G.key().str());
    gi.push_back(a);
    ii.push_back(b);
  }
  std::vector<Index> table(G.order(), GroupData::npos);
  table[G.identity()] = G.identity();
  std::vector<Index> queue{G.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index w = queue[head];
    for (std::size_t i = 0; i < gi.size(); ++i) {
      const Index y = G.mul(w, gi[i]);
      const Index img = G.mul(table[w], ii[i]);
      if (table[y] == GroupData::npos) {
        table[y] = img;
        queue.push_back(y);
      } else if (table[y] != img) {
        fail(ErrorCode::NotAHomomorphism, "generator images violate a relation at " + G.element(y).str());
      }
    }
  }
  if (queue.size() != G.order()) fail(ErrorCode::Parameter, "elements do not generate G" + G.key().str());
  return GroupMap(std::move(group), std::move(table));
}

GroupMap extend_generators(const std::map<std::string, WreathElement>& images, const GroupKey& key) {
  std::vector<WreathElement> gens, imgs;
  for (const auto& [name, img] : images) {
    gens.push_back(named_element(key, name));
    imgs.push_back(img);
  }
  return extend_generators(enumerate(key), gens, imgs);
}

std::vector<EtaSpec> eta_specs(const GroupKey& key) {
  key.validate();
  auto g = [&](const std::string& name) { return named_element(key, name); };
  auto spec = [&](std::string name, std::vector<std::pair<std::string, std::string>> rows) {
    EtaSpec e{std::move(name), {}};
    for (auto& [from, to] : rows) e.images.emplace_back(from, g(to));
    return e;
  };
  if (key == GroupKey{2, 1, 2}) return {spec("eta", {{"s1", "t"}, {"t", "s1"}})};
  if (key == GroupKey{2, 2, 2}) return {spec("eta", {{"s1", "s"}, {"s1'", "s1"}, {"s", "s1'"}})};
  if (key == GroupKey{4, 2, 2}) return {spec("eta", {{"s1", "t^2"}, {"s1'", "s1"}, {"t^2", "s1'"}})};
  if (key == GroupKey{3, 3, 3})
    return {spec("eta", {{"s1", "s2"}, {"s2", "s1'"}, {"s1'", "s1"}}),
            spec("eta'", {{"s1", "s1"}, {"s2", "s2"}, {"s1'", "s2'"}})};
  if (key == GroupKey{2, 2, 4}) return {spec("eta", {{"s1", "s1'"}, {"s2", "s2"}, {"s3", "s1"}, {"s1'", "s3"}})};
  if (key == GroupKey{1, 1, 6}) {
    EtaSpec e{"eta", {}};
    e.images = {{"s1", cycles(6, {{1, 2}, {3, 4}, {5, 6}})},
                {"s2", cycles(6, {{1, 5}, {2, 3}, {4, 6}})},
                {"s3", cycles(6, {{1, 2}, {3, 6}, {4, 5}})},
                {"s4", cycles(6, {{1, 5}, {2, 6}, {3, 4}})},
                {"s5", cycles(6, {{1, 2}, {3, 5}, {4, 6}})}};
    return {e};
  }
  return {};
}

std::vector<GroupMap> eta_maps(const GroupKey& key) {
  std::vector<GroupMap> out;
  for (const auto& spec : eta_specs(key)) {
    std::vector<WreathElement> gens, imgs;
    for (const auto& [name, img] : spec.images) {
      gens.push_back(named_element(key, name));
      imgs.push_back(img);
    }
    out.push_back(extend_generators(enumerate(key), gens, imgs));
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

GroupMap AutEnumeration::map(std::size_t i) const {
  std::vector<WreathElement> imgs;
  for (Index x : images_.at(i)) imgs.push_back(group_->element(x));
  return extend_generators(group_, gens_, imgs);
}

std::size_t AutEnumeration::find(const GroupMap& m) const {
  std::vector<Index> tuple;
  for (const auto& s : gens_) tuple.push_back(m(group_->index_of(s)));
  auto it = std::lower_bound(images_.begin(), images_.end(), tuple);
  return it != images_.end() && *it == tuple ? static_cast<std::size_t>(it - images_.begin()) : size();
}

bool AutEnumeration::closed_under_composition(std::size_t samples, std::uint64_t seed) const {
  if (images_.empty()) return false;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupMap f = map(rng() % size());
    const auto& h = images_[rng() % size()];
    std::vector<Index> tuple;
    for (Index x : h) tuple.push_back(f(x));
    if (!std::binary_search(images_.begin(), images_.end(), tuple)) return false;
  }
  return true;
}

AutEnumeration enumerate_aut(const GroupKey& key, std::uint64_t budget) {
  key.validate();
  AutEnumeration out;
  out.group_ = enumerate(key, budget);
  const GroupData& G = *out.group_;
  auto A = enumerate(key.ambient(), budget);
  out.gens_ = generating_set(key);
  if (out.gens_.empty()) out.gens_.push_back(WreathElement::identity(key.r, key.n));

  // X = <eta> <eta'>
  std::vector<GroupMap> etas = eta_maps(key);
  std::vector<GroupMap> xs{GroupMap::identity(out.group_)};
  if (!etas.empty()) {
    const GroupMap& eta = etas[0];
    const GroupMap eta2 = etas.size() > 1 ? etas[1] : GroupMap::identity(out.group_);
    xs.clear();
    for (int a = 0; a < eta.order(); ++a)
      for (int b = 0; b < eta2.order(); ++b) {
        GroupMap x = eta.power(a).compose(eta2.power(b));
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(std::move(x));
      }
  }

  std::set<std::vector<Index>> seen;
  std::vector<Index> base(out.gens_.size());
  std::vector<Index> tuple(out.gens_.size());
  for (int j = 0; j < key.r; ++j)
    for (int k = 0; k < key.r; ++k)
      for (int m = 0; m < key.r; ++m) {
        const AlphaParams a{j, k, m};
        if (!alpha_violation(a, key).empty()) continue;
        std::vector<WreathElement> alpha_imgs;
        for (const auto& s : out.gens_) alpha_imgs.push_back(alpha_apply(a, s));
        for (const auto& g : A->elements()) {
          const WreathElement gi = invert(g);
          for (std::size_t i = 0; i < alpha_imgs.size(); ++i)
            base[i] = G.index_of(multiply(multiply(g, alpha_imgs[i]), gi));
          for (const auto& x : xs) {
            for (std::size_t i = 0; i < base.size(); ++i) tuple[i] = x(base[i]);
            seen.insert(tuple);
          }
        }
      }
  out.images_.assign(seen.begin(), seen.end());
  return out;
}

// ---------------------------------------------------------------- orders

nlohmann::json AutOrders::to_json() const {
  std::ostringstream cs;
  cs << c;
  return {{"aut", aut.convert_to<std::int64_t>()},
          {"out", out.convert_to<std::int64_t>()},
          {"center", center.convert_to<std::int64_t>()},
          {"c", cs.str()},
          {"c_prime", c_prime},
          {"e", e}};
}

AutOrders aut_order_formula(const GroupKey& key) {
  key.validate();
  const int r = key.r, p = key.p, n = key.n;
  const int q = r / p;
  AutOrders o;
  if (n == 1) {
    o.aut = o.out = euler_phi(q);
    o.center = q;
    o.c = 1;
    o.e = q;
    return o;
  }
  static const std::map<GroupKey, Rational> exceptional{
      {{1, 1, 2}, Rational(1)}, {{2, 2, 2}, Rational(3)},    {{2, 1, 2}, Rational(1)}, {{4, 2, 2}, Rational(3, 2)},
      {{3, 3, 3}, Rational(4)}, {{2, 2, 4}, Rational(6)},    {{1, 1, 6}, Rational(2)}};
  if (auto it = exceptional.find(key); it != exceptional.end())
    o.c = it->second;
  else if (n == 2)
    o.c = Rational(1, 2);
  else if (r % 2 == 1 || (p % 2 == 0 && q % 2 == 1 && n % 2 == 1))
    o.c = 1;
  else
    o.c = 2;
  o.c_prime = (key == GroupKey{1, 1, 2} || key == GroupKey{2, 2, 2}) ? 2 : 1;
  for (int d = q; d >= 1; --d)
    if (q % d == 0 && std::gcd(d, n) == 1) {
      o.e = d;
      break;
    }
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  BigInt rn = 1;
  for (int i = 0; i < n; ++i) rn *= r;
  const Rational phis = Rational(euler_phi(r)) * Rational(euler_phi(o.e), o.e);
  const Rational aut = o.c / o.c_prime * phis * Rational(fact * rn / p);
  const Rational out = o.c * phis * q * std::gcd(p, n);
  if (denominator(aut) != 1 || denominator(out) != 1)
    fail(ErrorCode::Consistency, "automorphism order formula is not integral at " + key.str());
  o.aut = numerator(aut);
  o.out = numerator(out);
  o.center = BigInt(o.c_prime) * q * std::gcd(p, n);
  return o;
}

GimVerdict gim_exists(const GroupKey& key) {
  key.validate();
  const int g = key.gcd_pn();
  if (g == 1) return {true, "gcd-one"};
  if (key.n == 2 && (key.r / key.p) % 2 == 1) return {true, "rank-two-odd-quotient"};
  if (g > 2) return {false, "too-few-symmetric-elements"};
  if ((key.r / key.p) % 2 == 0) return {false, "commutator-obstruction"};
  return {false, "odd-quotient-above-rank-two"};
}

}  // namespace reflekt

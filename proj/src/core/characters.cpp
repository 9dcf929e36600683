#include "reflekt/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reflekt {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void partitions_into(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back({prefix});
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_into(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

std::int64_t mn_recursive(const std::vector<int>& lambda, std::size_t mu_from, const std::vector<int>& mu);

std::mutex g_mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> g_mn_memo;

std::int64_t mn_memo(const std::vector<int>& lambda, const std::vector<int>& mu) {
  {
    std::lock_guard lock(g_mn_mutex);
    if (auto it = g_mn_memo.find({lambda, mu}); it != g_mn_memo.end()) return it->second;
  }
  const std::int64_t v = mn_recursive(lambda, 0, mu);
  std::lock_guard lock(g_mn_mutex);
  g_mn_memo.emplace(std::make_pair(lambda, mu), v);
  return v;
}

// Remove a rim hook of length mu[0] in every possible way, on beta-sets.
std::int64_t mn_recursive(const std::vector<int>& lambda, std::size_t, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const int m = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int k = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (k - 1 - i);
  std::int64_t total = 0;
  for (int idx = 0; idx < k; ++idx) {
    const int b = beta[static_cast<std::size_t>(idx)];
    const int target = b - m;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(idx)] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> next;
    for (int i = 0; i < k; ++i) {
      const int part = nb[static_cast<std::size_t>(i)] - (k - 1 - i);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = mn_memo(next, rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

std::vector<int> normalized_cycle_type(std::vector<int> mu) {
  std::sort(mu.rbegin(), mu.rend());
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

}  // namespace

// ---------------------------------------------------------------- partitions

int Partition::size() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Partition> partitions(int n) {
  if (n < 0) fail(ErrorCode::Parameter, "partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

int RPartite::size() const noexcept {
  int s = 0;
  for (const auto& p : components) s += p.size();
  return s;
}

nlohmann::json RPartite::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : components) j.push_back(p.parts);
  return j;
}

std::string RPartite::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out << ",";
    out << "(";
    for (std::size_t k = 0; k < components[i].parts.size(); ++k) out << (k ? "," : "") << components[i].parts[k];
    out << ")";
  }
  out << ")";
  return out.str();
}

std::vector<RPartite> rpartite_partitions(int r, int n) {
  if (r < 1 || n < 0) fail(ErrorCode::Parameter, "bad r-partite shape");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) by_size[static_cast<std::size_t>(m)] = partitions(m);
  std::vector<RPartite> out;
  RPartite cur;
  cur.components.resize(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == r - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
        cur.components[static_cast<std::size_t>(slot)] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int m = left; m >= 0; --m)
      for (const auto& p : by_size[static_cast<std::size_t>(m)]) {
        cur.components[static_cast<std::size_t>(slot)] = p;
        self(self, slot + 1, left - m);
      }
  };
  rec(rec, 0, n);
  return out;
}

std::uint64_t syt_count(const Partition& lambda) {
  const int n = lambda.size();
  std::uint64_t hooks = 1;
  const auto& p = lambda.parts;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++below;
      hooks *= static_cast<std::uint64_t>(p[i] - j + below);
    }
  return factorial(n) / hooks;
}

std::int64_t sym_char_value(const Partition& lambda, const std::vector<int>& mu) {
  const auto m = normalized_cycle_type(mu);
  if (lambda.size() != std::accumulate(m.begin(), m.end(), 0))
    fail(ErrorCode::Parameter, "partition and cycle type have different sizes");
  return mn_memo(lambda.parts, m);
}

CycloNumber wreath_linear_value(int i, const Partition& lambda, const WreathElement& g) {
  if (g.rank() != lambda.size()) fail(ErrorCode::Parameter, "element rank differs from partition size");
  return CycloNumber(sym_char_value(lambda, g.perm().cycle_type())) *
         CycloNumber::root_of_unity(static_cast<std::int64_t>(i) * g.delta(), g.modulus());
}

// ---------------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(std::shared_ptr<const GroupData> group, std::vector<CycloNumber> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->classes().size())
    fail(ErrorCode::Parameter, "class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::from_element_values(std::shared_ptr<const GroupData> group,
                                                 const std::vector<CycloNumber>& per_element) {
  if (per_element.size() != group->order()) fail(ErrorCode::Parameter, "need one value per element");
  std::vector<CycloNumber> v;
  for (const auto& cls : group->classes()) {
    const CycloNumber& first = per_element[cls.front()];
    for (auto i : cls)
      if (!(per_element[i] == first))
        fail(ErrorCode::Consistency, "values are not constant on the class of " + group->element(cls.front()).str());
    v.push_back(first);
  }
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::from_element_counts(std::shared_ptr<const GroupData> group,
                                                 const std::vector<std::int64_t>& per_element) {
  std::vector<CycloNumber> v(per_element.begin(), per_element.end());
  return from_element_values(std::move(group), v);
}

ClassFunction ClassFunction::restrict_to(std::shared_ptr<const GroupData> sub) const {
  const GroupKey& a = group_->key();
  const GroupKey& b = sub->key();
  if (a.r != b.r || a.n != b.n || b.p % a.p != 0)
    fail(ErrorCode::Parameter, "G" + b.str() + " is not a subgroup of G" + a.str());
  std::vector<CycloNumber> v;
  for (std::size_t c = 0; c < sub->classes().size(); ++c) v.push_back(at(sub->element(sub->class_rep(c))));
  return ClassFunction(std::move(sub), std::move(v));
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<CycloNumber> v;
  for (const auto& x : values_) v.push_back(x.conjugate());
  return ClassFunction(group_, std::move(v));
}

namespace {
void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (!(a.group().key() == b.group().key())) fail(ErrorCode::Parameter, "class functions on different groups");
}
}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<CycloNumber> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] + b.values_[i]);
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<CycloNumber> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] * b.values_[i]);
  return ClassFunction(a.group_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_->key() == b.group_->key() && a.values_ == b.values_;
}

nlohmann::json ClassFunction::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t c = 0; c < values_.size(); ++c) j[std::to_string(c)] = values_[c].to_json();
  return j;
}

CycloNumber inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const auto& G = a.group();
  CycloNumber acc;
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    acc += CycloNumber(static_cast<std::int64_t>(G.classes()[c].size())) * a.on_class(c) * b.on_class(c).conjugate();
  return acc * CycloNumber(Rational(1, static_cast<std::int64_t>(G.order())));
}

// ---------------------------------------------------------------- chi_theta

ClassFunction chi_theta(const RPartite& theta) {
  static std::mutex mutex;
  static std::map<RPartite, std::shared_ptr<const ClassFunction>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(theta); it != memo.end()) return *it->second;
  }
  const int r = theta.r();
  const int n = theta.size();
  auto G = enumerate({r, 1, n});

  // S_theta = prod_b Z_r wr S_{|theta_b|}, block b on consecutive positions
  std::vector<int> block_of(static_cast<std::size_t>(n));
  std::uint64_t s_order = 1;
  {
    int pos = 0;
    for (int b = 0; b < r; ++b) {
      const int m = theta.components[static_cast<std::size_t>(b)].size();
      for (int k = 0; k < m; ++k) block_of[static_cast<std::size_t>(pos++)] = b;
      s_order *= factorial(m);
    }
    for (int i = 0; i < n; ++i) s_order *= static_cast<std::uint64_t>(r);
  }

  std::vector<CycloNumber> values;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r));
  std::vector<std::vector<int>> block_cycles(static_cast<std::size_t>(r));
  for (std::size_t c = 0; c < G->classes().size(); ++c) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto idx : G->classes()[c]) {
      const WreathElement& h = G->element(idx);
      const Perm& pi = h.perm();
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        inside = block_of[static_cast<std::size_t>(pi(i))] == block_of[static_cast<std::size_t>(i)];
      if (!inside) continue;
      for (auto& bc : block_cycles) bc.clear();
      std::array<bool, kMaxRank> seen{};
      for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = pi(j)) {
          seen[static_cast<std::size_t>(j)] = true;
          ++len;
        }
        block_cycles[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])].push_back(len);
      }
      std::int64_t coef = 1;
      for (int b = 0; b < r && coef != 0; ++b)
        coef *= sym_char_value(theta.components[static_cast<std::size_t>(b)], block_cycles[static_cast<std::size_t>(b)]);
      if (coef == 0) continue;
      std::int64_t exponent = 0;
      for (int i = 0; i < n; ++i) exponent += static_cast<std::int64_t>(block_of[static_cast<std::size_t>(i)]) * h.phases()[i];
      counts[static_cast<std::size_t>(exponent % r)] += coef;
    }
    // (1/|S|) sum_{t in G} phi(t^-1 g t) = |C_G(g)|/|S| * sum_{h in cl(g) cap S} phi(h)
    const Rational scale(static_cast<std::int64_t>(G->centralizer_order(c)), static_cast<std::int64_t>(s_order));
    values.push_back(CycloNumber::from_exponent_counts(r, counts, scale));
  }
  auto result = std::make_shared<const ClassFunction>(G, std::move(values));
  std::lock_guard lock(mutex);
  return *memo.emplace(theta, result).first->second;
}

CycloNumber chi_theta_value(const RPartite& theta, const WreathElement& g) {
  if (g.modulus() != theta.r() || g.rank() != theta.size())
    fail(ErrorCode::Parameter, "element does not lie in G(r,1,n) of the r-partite partition");
  return chi_theta(theta).at(g);
}

std::uint64_t chi_theta_degree(const RPartite& theta) {
  std::uint64_t d = factorial(theta.size());
  for (const auto& p : theta.components) d = d / factorial(p.size()) * syt_count(p);
  return d;
}

CycloNumber gamma_value(const GroupKey& key, const WreathElement& g) {
  key.validate();
  return CycloNumber::root_of_unity(static_cast<std::int64_t>(key.r / key.p) * g.delta(), key.r);
}

ClassFunction gamma_character(const GroupKey& key) {
  auto G = enumerate(key.ambient());
  std::vector<CycloNumber> v;
  for (std::size_t c = 0; c < G->classes().size(); ++c) v.push_back(gamma_value(key, G->element(G->class_rep(c))));
  return ClassFunction(G, std::move(v));
}

RPartite shift_theta(const RPartite& theta, const GroupKey& key) {
  key.validate();
  if (theta.r() != key.r) fail(ErrorCode::Parameter, "r-partite partition has the wrong number of components");
  const int s = key.r / key.p;
  RPartite out;
  out.components.resize(theta.components.size());
  for (int x = 0; x < key.r; ++x)
    out.components[static_cast<std::size_t>(x)] = theta.components[static_cast<std::size_t>(((x - s) % key.r + key.r) % key.r)];
  return out;
}

OrbitStabilizer orbit_and_stabilizer(const RPartite& theta, const GroupKey& key) {
  OrbitStabilizer out;
  RPartite cur = theta;
  do {
    out.orbit.push_back(cur);
    cur = shift_theta(cur, key);
  } while (!(cur == theta));
  out.stabilizer_order = key.p / static_cast<int>(out.orbit.size());
  std::sort(out.orbit.begin(), out.orbit.end());
  return out;
}

std::vector<IrreducibleEntry> irreducible_labels(const GroupKey& key) {
  key.validate();
  std::vector<IrreducibleEntry> out;
  for (const auto& theta : rpartite_partitions(key.r, key.n)) {
    const auto os = orbit_and_stabilizer(theta, key);
    if (!(os.orbit.front() == theta)) continue;
    const std::uint64_t d = chi_theta_degree(theta);
    const auto k = static_cast<std::uint64_t>(os.stabilizer_order);
    if (d % k != 0) fail(ErrorCode::Consistency, "degree of " + theta.str() + " not divisible by its stabilizer order");
    out.push_back({theta, os.stabilizer_order, d / k});
  }
  return out;
}

std::vector<std::uint64_t> irr_degree_list(const GroupKey& key) {
  std::vector<std::uint64_t> out;
  for (const auto& e : irreducible_labels(key))
    for (int i = 0; i < e.stabilizer; ++i) out.push_back(e.degree);
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricCount symmetric_count_check(const GroupKey& key) {
  auto G = enumerate(key);
  SymmetricCount out;
  for (const auto& g : G->elements())
    if (transpose(g) == g) ++out.symmetric_count;
  for (auto d : irr_degree_list(key)) out.degree_sum += d;
  out.equal = out.symmetric_count == out.degree_sum;
  return out;
}

int epsilon_tau(const ClassFunction& chi, const GroupMap& tau) {
  const auto& G = chi.group();
  if (!(tau.group().key() == G.key())) fail(ErrorCode::Parameter, "automorphism acts on a different group");
  // accumulate by class so each value is multiplied once
  std::vector<std::int64_t> hits(G.classes().size(), 0);
  for (GroupData::Index g = 0; g < G.order(); ++g) ++hits[G.class_of(G.mul(g, tau(g)))];
  CycloNumber acc;
  for (std::size_t c = 0; c < hits.size(); ++c)
    if (hits[c]) acc += CycloNumber(hits[c]) * chi.on_class(c);
  acc *= CycloNumber(Rational(1, static_cast<std::int64_t>(G.order())));
  if (!acc.is_rational())
    fail(ErrorCode::Consistency, "twisted indicator is not rational: " + acc.str());
  const Rational q = acc.as_rational();
  if (q != 0 && q != 1 && q != -1)
    fail(ErrorCode::Consistency, "twisted indicator outside {-1,0,1}: " + acc.str());
  return static_cast<int>(numerator(q));
}

}  // namespace reflekt

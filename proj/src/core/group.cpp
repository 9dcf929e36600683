#include "reflekt/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reflekt {

namespace {

int mod(std::int64_t a, int m) {
  std::int64_t v = a % m;
  return static_cast<int>(v < 0 ? v + m : v);
}

void check_compatible(const WreathElement& a, const WreathElement& b) {
  if (a.modulus() != b.modulus())
    fail(ErrorCode::Parameter, "modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                   std::to_string(b.modulus()));
  if (a.rank() != b.rank())
    fail(ErrorCode::Parameter,
         "rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Dense code tables above this size fall back to binary search.
constexpr std::uint64_t kDenseCodeLimit = std::uint64_t{1} << 25;

}  // namespace

// ---------------------------------------------------------------- GroupKey

void GroupKey::validate() const {
  if (r < 1 || p < 1 || n < 1)
    fail(ErrorCode::Parameter, "r, p, n must be positive, got " + str());
  if (r % p != 0) fail(ErrorCode::Parameter, "p must divide r, got " + str());
  if (n > kMaxRank) fail(ErrorCode::Parameter, "rank above " + std::to_string(kMaxRank) + " unsupported");
  if (r > kMaxModulus)
    fail(ErrorCode::Parameter, "modulus above " + std::to_string(kMaxModulus) + " unsupported");
}

int GroupKey::d() const { return std::gcd(r, p); }
int GroupKey::gcd_pn() const { return std::gcd(p, n); }

std::uint64_t GroupKey::order() const {
  std::uint64_t o = factorial(n);
  for (int i = 0; i < n; ++i) {
    if (o > (std::uint64_t{1} << 56)) return UINT64_MAX;
    o *= static_cast<std::uint64_t>(r);
  }
  return o / static_cast<std::uint64_t>(p);
}

std::string GroupKey::str() const {
  return "(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

GroupKey parse_key(const std::string& text) {
  GroupKey k;
  std::string s = text;
  for (char& ch : s)
    if (ch == '(' || ch == ')') ch = ' ';
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> k.r >> c1 >> k.p >> c2 >> k.n) || c1 != ',' || c2 != ',')
    fail(ErrorCode::Parameter, "expected r,p,n but got '" + text + "'");
  std::string rest;
  if (in >> rest) fail(ErrorCode::Parameter, "trailing text in key '" + text + "'");
  k.validate();
  return k;
}

// ---------------------------------------------------------------- Perm

Perm Perm::identity(int n) {
  if (n < 0 || n > kMaxRank) fail(ErrorCode::Parameter, "rank out of range");
  Perm p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxRank) fail(ErrorCode::Parameter, "rank out of range");
  Perm p;
  p.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxRank> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::Parameter, "permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::from_one_based(const std::vector<int>& images) {
  std::vector<int> z(images);
  for (int& v : z) --v;
  return from_images(z);
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm result = identity(n);
  for (const auto& cyc : cycles) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k] - 1;
      const int b = cyc[(k + 1) % cyc.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorCode::Parameter, "cycle entry out of range");
      img[static_cast<std::size_t>(a)] = b;
    }
    result = result * from_images(img);
  }
  return result;
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p = identity(n);
  if (i < 0 || i >= n || j < 0 || j >= n) fail(ErrorCode::Parameter, "transposition out of range");
  std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(j)]);
  return p;
}

std::vector<int> Perm::images() const {
  return std::vector<int>(img_.begin(), img_.begin() + n_);
}

std::vector<int> Perm::one_based() const {
  auto v = images();
  for (int& x : v) ++x;
  return v;
}

Perm Perm::inverse() const {
  Perm q;
  q.n_ = n_;
  for (int i = 0; i < n_; ++i) q.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return q;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.n_ != b.n_) fail(ErrorCode::Parameter, "permutation rank mismatch");
  Perm c;
  c.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i)
    c.img_[static_cast<std::size_t>(i)] = a.img_[b.img_[static_cast<std::size_t>(i)]];
  return c;
}

bool Perm::is_identity() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int Perm::length() const noexcept {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++count;
  return count;
}

std::vector<std::pair<int, int>> Perm::inversions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Perm::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    const int j = img_[static_cast<std::size_t>(i)];
    if (j > i && img_[static_cast<std::size_t>(j)] == i) out.emplace_back(i, j);
  }
  return out;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] == i) out.push_back(i);
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  std::array<bool, kMaxRank> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool Perm::is_involution() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (img_[img_[static_cast<std::size_t>(i)]] != i) return false;
  return true;
}

std::uint64_t Perm::lex_rank() const noexcept {
  std::uint64_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)]) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n_ - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

Perm Perm::from_lex_rank(int n, std::uint64_t rank) {
  if (n < 0 || n > kMaxRank || rank >= factorial(n)) fail(ErrorCode::Parameter, "lex rank out of range");
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img;
  for (int i = 0; i < n; ++i) {
    const auto at = pool.begin() + digits[static_cast<std::size_t>(i)];
    img.push_back(*at);
    pool.erase(at);
  }
  return from_images(img);
}

bool operator==(const Perm& a, const Perm& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.begin() + a.n_,
                                                b.img_.begin(), b.img_.begin() + b.n_);
}

// ---------------------------------------------------------------- PhaseVector

PhaseVector::PhaseVector(int modulus, int n) {
  if (modulus < 1 || modulus > kMaxModulus) fail(ErrorCode::Parameter, "modulus out of range");
  if (n < 0 || n > kMaxRank) fail(ErrorCode::Parameter, "rank out of range");
  r_ = static_cast<std::uint8_t>(modulus);
  n_ = static_cast<std::uint8_t>(n);
}

PhaseVector::PhaseVector(int modulus, const std::vector<int>& entries)
    : PhaseVector(modulus, static_cast<int>(entries.size())) {
  for (int i = 0; i < n_; ++i) set(i, entries[static_cast<std::size_t>(i)]);
}

PhaseVector PhaseVector::basis(int modulus, int n, int i) {
  PhaseVector v(modulus, n);
  v.set(i, 1);
  return v;
}

void PhaseVector::set(int i, int value) {
  if (i < 0 || i >= n_) fail(ErrorCode::Parameter, "phase index out of range");
  v_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(mod(value, r_));
}

std::vector<int> PhaseVector::entries() const { return std::vector<int>(v_.begin(), v_.begin() + n_); }

int PhaseVector::sum() const noexcept {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += v_[static_cast<std::size_t>(i)];
  return s % r_;
}

PhaseVector PhaseVector::permuted(const Perm& pi) const {
  // entry x_i moves to position pi(i)
  PhaseVector out(r_, n_);
  for (int i = 0; i < n_; ++i) out.v_[static_cast<std::size_t>(pi(i))] = v_[static_cast<std::size_t>(i)];
  return out;
}

PhaseVector PhaseVector::scaled(int j) const {
  PhaseVector out(r_, n_);
  for (int i = 0; i < n_; ++i)
    out.v_[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(mod(static_cast<std::int64_t>(j) * v_[static_cast<std::size_t>(i)], r_));
  return out;
}

PhaseVector PhaseVector::operator-() const { return scaled(-1); }

PhaseVector operator+(const PhaseVector& a, const PhaseVector& b) {
  if (a.r_ != b.r_ || a.n_ != b.n_) fail(ErrorCode::Parameter, "phase vector shape mismatch");
  PhaseVector out(a.r_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    out.v_[i] = static_cast<std::uint8_t>((a.v_[i] + b.v_[i]) % a.r_);
  return out;
}

bool operator==(const PhaseVector& a, const PhaseVector& b) noexcept {
  return a.r_ == b.r_ && a.n_ == b.n_ && std::equal(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin());
}

std::strong_ordering operator<=>(const PhaseVector& a, const PhaseVector& b) noexcept {
  if (auto c = a.r_ <=> b.r_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin(),
                                                b.v_.begin() + b.n_);
}

// ---------------------------------------------------------------- WreathElement

WreathElement::WreathElement(PhaseVector phases, Perm perm)
    : phases_(std::move(phases)), perm_(std::move(perm)) {
  if (phases_.size() != perm_.size()) fail(ErrorCode::Parameter, "phase/permutation rank mismatch");
}

WreathElement WreathElement::identity(int r, int n) { return {PhaseVector(r, n), Perm::identity(n)}; }

WreathElement WreathElement::make(int r, const std::vector<int>& phases, const std::vector<int>& perm) {
  return {PhaseVector(r, phases), Perm::from_images(perm)};
}

bool WreathElement::is_identity() const noexcept {
  if (!perm_.is_identity()) return false;
  for (int i = 0; i < phases_.size(); ++i)
    if (phases_[i] != 0) return false;
  return true;
}

nlohmann::json WreathElement::to_json() const {
  return {{"phases", phases_.entries()}, {"perm", perm_.one_based()}};
}

WreathElement WreathElement::from_json(int r, const nlohmann::json& j) {
  try {
    return {PhaseVector(r, j.at("phases").get<std::vector<int>>()),
            Perm::from_one_based(j.at("perm").get<std::vector<int>>())};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parameter, std::string("malformed element: ") + e.what());
  }
}

std::string WreathElement::str() const {
  std::ostringstream out;
  out << "((";
  for (int i = 0; i < phases_.size(); ++i) out << (i ? "," : "") << phases_[i];
  out << "),[";
  for (int i = 0; i < perm_.size(); ++i) out << (i ? "," : "") << perm_(i) + 1;
  out << "])";
  return out.str();
}

std::strong_ordering operator<=>(const WreathElement& a, const WreathElement& b) noexcept {
  if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
  return a.phases_ <=> b.phases_;
}

bool operator==(const WreathElement& a, const WreathElement& b) noexcept {
  return a.perm_ == b.perm_ && a.phases_ == b.phases_;
}

WreathElement multiply(const WreathElement& a, const WreathElement& b) {
  check_compatible(a, b);
  // sigma^-1(x) has entry x_{sigma(i)} at position i
  const int r = a.modulus();
  const int n = a.rank();
  PhaseVector z(r, n);
  for (int i = 0; i < n; ++i) z.set(i, a.phases()[b.perm()(i)] + b.phases()[i]);
  return {z, a.perm() * b.perm()};
}

WreathElement invert(const WreathElement& g) {
  return {-g.phases().permuted(g.perm()), g.perm().inverse()};
}

WreathElement power(const WreathElement& g, std::int64_t k) {
  WreathElement base = k < 0 ? invert(g) : g;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  WreathElement acc = WreathElement::identity(g.modulus(), g.rank());
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

WreathElement transpose(const WreathElement& g) {
  return {g.phases().permuted(g.perm()), g.perm().inverse()};
}

WreathElement bar(const WreathElement& g) { return {-g.phases(), g.perm()}; }

Conjugates conjugates(const WreathElement& g) { return {transpose(g), bar(g)}; }

Decomposition decompose(const WreathElement& g) {
  return {g.perm(), g.phases().entries(), g.delta()};
}

bool is_member(const WreathElement& g, const GroupKey& key) {
  key.validate();
  if (g.modulus() != key.r || g.rank() != key.n)
    fail(ErrorCode::Parameter, "element shape does not match " + key.str());
  return g.delta() % key.d() == 0;
}

WreathElement central_power(int r, int n, std::int64_t k) {
  PhaseVector v(r, n);
  for (int i = 0; i < n; ++i) v.set(i, mod(k, r));
  return {v, Perm::identity(n)};
}

std::map<std::string, WreathElement> standard_generators(const GroupKey& key) {
  key.validate();
  const int r = key.r;
  const int n = key.n;
  std::map<std::string, WreathElement> out;
  for (int i = 0; i + 1 < n; ++i) {
    const Perm tr = Perm::transposition(n, i, i + 1);
    out.emplace("s" + std::to_string(i + 1), WreathElement(PhaseVector(r, n), tr));
    PhaseVector v(r, n);
    v.set(i, 1);
    v.set(i + 1, -1);
    out.emplace("s" + std::to_string(i + 1) + "'", WreathElement(v, tr));
  }
  if (n >= 2) {
    PhaseVector v(r, n);
    v.set(0, 1);
    v.set(1, -1);
    out.emplace("s", WreathElement(v, Perm::identity(n)));
  }
  out.emplace("t", WreathElement(PhaseVector::basis(r, n, 0), Perm::identity(n)));
  out.emplace("c", central_power(r, n, 1));
  return out;
}

WreathElement named_element(const GroupKey& key, const std::string& name) {
  std::string base = name;
  std::int64_t exp = 1;
  if (auto caret = name.find('^'); caret != std::string::npos) {
    base = name.substr(0, caret);
    try {
      std::size_t used = 0;
      exp = std::stoll(name.substr(caret + 1), &used);
      if (used != name.size() - caret - 1) throw std::invalid_argument(name);
    } catch (const std::exception&) {
      fail(ErrorCode::Parameter, "bad exponent in generator name '" + name + "'");
    }
  }
  const auto gens = standard_generators(key);
  auto it = gens.find(base);
  if (it == gens.end()) fail(ErrorCode::Parameter, "unknown generator '" + base + "' for " + key.str());
  return power(it->second, exp);
}

std::vector<WreathElement> generating_set(const GroupKey& key) {
  const auto gens = standard_generators(key);
  std::vector<WreathElement> out;
  auto add = [&](const WreathElement& g) {
    if (!g.is_identity() && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  };
  for (int i = 1; i < key.n; ++i) add(gens.at("s" + std::to_string(i)));
  if (key.n >= 2) add(gens.at("s"));
  add(power(gens.at("t"), key.p));
  return out;
}

// ---------------------------------------------------------------- GroupData

std::uint64_t GroupData::ambient_code(const WreathElement& g) const noexcept {
  std::uint64_t code = g.perm().lex_rank();
  for (int i = 0; i < key_.n; ++i)
    code = code * static_cast<std::uint64_t>(key_.r) + static_cast<std::uint64_t>(g.phases()[i]);
  return code;
}

GroupData::Index GroupData::find(const WreathElement& g) const noexcept {
  if (g.modulus() != key_.r || g.rank() != key_.n) return npos;
  if (g.delta() % key_.p != 0) return npos;
  if (!code_to_index_.empty()) {
    const auto v = code_to_index_[ambient_code(g)];
    return v < 0 ? npos : static_cast<Index>(v);
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) return npos;
  return static_cast<Index>(it - elements_.begin());
}

GroupData::Index GroupData::index_of(const WreathElement& g) const {
  const Index i = find(g);
  if (i == npos) fail(ErrorCode::Domain, g.str() + " is not an element of G" + key_.str());
  return i;
}

GroupData::Index GroupData::mul(Index a, Index b) const {
  return index_of(multiply(elements_[a], elements_[b]));
}

GroupData::Index GroupData::transpose(Index a) const { return index_of(reflekt::transpose(elements_[a])); }

void GroupData::index_elements() {
  const std::uint64_t ambient = key_.ambient().order();
  code_to_index_.clear();
  if (ambient <= kDenseCodeLimit) {
    code_to_index_.assign(ambient, -1);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      code_to_index_[ambient_code(elements_[i])] = static_cast<std::int32_t>(i);
  }
  identity_ = index_of(WreathElement::identity(key_.r, key_.n));
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(invert(elements_[i]));
  generators_.clear();
  for (const auto& g : generating_set(key_)) generators_.push_back(index_of(g));
}

void GroupData::compute_classes() {
  // Orbits under conjugation by the generators; scanning in canonical order
  // makes the first element of each orbit its minimum.
  const std::size_t N = elements_.size();
  class_of_.assign(N, SIZE_MAX);
  classes_.clear();
  std::vector<Index> gen_inv;
  for (Index s : generators_) gen_inv.push_back(inverse_[s]);
  for (Index start = 0; start < N; ++start) {
    if (class_of_[start] != SIZE_MAX) continue;
    const std::size_t cid = classes_.size();
    std::vector<Index> orbit{start};
    class_of_[start] = cid;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const WreathElement& x = elements_[orbit[head]];
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const WreathElement y =
            multiply(multiply(elements_[generators_[k]], x), elements_[gen_inv[k]]);
        const Index yi = index_of(y);
        if (class_of_[yi] == SIZE_MAX) {
          class_of_[yi] = cid;
          orbit.push_back(yi);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes_.push_back(std::move(orbit));
  }
}

void GroupData::compute_center() {
  center_.clear();
  for (Index i = 0; i < elements_.size(); ++i) {
    bool central = true;
    for (Index s : generators_) {
      if (!(multiply(elements_[i], elements_[s]) == multiply(elements_[s], elements_[i]))) {
        central = false;
        break;
      }
    }
    if (central) center_.push_back(i);
  }
}

namespace {

std::vector<WreathElement> all_members(const GroupKey& key, std::uint64_t budget) {
  key.validate();
  const std::uint64_t order = key.order();
  if (order > budget)
    fail(ErrorCode::Size, "|G" + key.str() + "| = " + std::to_string(order) + " exceeds budget " +
                              std::to_string(budget));
  std::vector<WreathElement> out;
  out.reserve(order);
  const int r = key.r;
  const int n = key.n;
  const std::uint64_t nf = factorial(n);
  std::uint64_t phase_count = 1;
  for (int i = 0; i < n; ++i) phase_count *= static_cast<std::uint64_t>(r);
  for (std::uint64_t pr = 0; pr < nf; ++pr) {
    const Perm pi = Perm::from_lex_rank(n, pr);
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (std::uint64_t c = 0; c < phase_count; ++c) {
      std::uint64_t rest = c;
      int sum = 0;
      for (int i = n - 1; i >= 0; --i) {
        x[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(r));
        rest /= static_cast<std::uint64_t>(r);
        sum += x[static_cast<std::size_t>(i)];
      }
      if (sum % key.p == 0) out.emplace_back(PhaseVector(r, x), pi);
    }
  }
  if (out.size() != order) fail(ErrorCode::Consistency, "enumerated order differs from n! r^n / p");
  return out;
}

}  // namespace

std::shared_ptr<const GroupData> GroupData::build(const GroupKey& key, std::uint64_t budget) {
  std::shared_ptr<GroupData> g(new GroupData());
  g->key_ = key;
  g->elements_ = all_members(key, budget);
  g->index_elements();
  g->compute_classes();
  g->compute_center();
  return g;
}

std::shared_ptr<const GroupData> GroupData::from_classes(
    const GroupKey& key, const std::vector<std::vector<WreathElement>>& classes,
    const std::vector<WreathElement>& center, std::uint64_t budget) {
  std::shared_ptr<GroupData> g(new GroupData());
  g->key_ = key;
  g->elements_ = all_members(key, budget);
  g->index_elements();

  const std::size_t N = g->elements_.size();
  g->class_of_.assign(N, SIZE_MAX);
  std::vector<std::vector<Index>> parts;
  for (const auto& cls : classes) {
    std::vector<Index> part;
    for (const auto& e : cls) {
      const Index i = g->find(e);
      if (i == npos) fail(ErrorCode::Consistency, "cached class contains non-member " + e.str());
      if (g->class_of_[i] != SIZE_MAX) fail(ErrorCode::Consistency, "cached classes overlap");
      g->class_of_[i] = parts.size();
      part.push_back(i);
    }
    if (part.empty()) fail(ErrorCode::Consistency, "cached class is empty");
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  for (std::size_t i = 0; i < N; ++i)
    if (g->class_of_[i] == SIZE_MAX) fail(ErrorCode::Consistency, "cached classes do not cover the group");
  // each cached class must be a single conjugation orbit
  for (std::size_t c = 0; c < parts.size(); ++c) {
    std::vector<Index> orbit{parts[c].front()};
    std::vector<bool> seen(N, false);
    seen[orbit[0]] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Index s : g->generators_) {
        const Index y = g->mul(g->mul(s, orbit[head]), g->inverse_[s]);
        if (g->class_of_[y] != c) fail(ErrorCode::Consistency, "cached class is not conjugation-closed");
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    if (orbit.size() != parts[c].size()) fail(ErrorCode::Consistency, "cached class is not a single orbit");
  }
  std::sort(parts.begin(), parts.end());
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (Index i : parts[c]) g->class_of_[i] = c;
  g->classes_ = std::move(parts);

  g->compute_center();
  std::vector<Index> cached;
  for (const auto& e : center) cached.push_back(g->index_of(e));
  std::sort(cached.begin(), cached.end());
  if (cached != g->center_) fail(ErrorCode::Consistency, "cached center disagrees with commutation test");
  return g;
}

namespace {
std::mutex g_memo_mutex;
std::map<GroupKey, std::shared_ptr<const GroupData>> g_memo;
GroupLoader g_loader;
}  // namespace

void set_group_loader(GroupLoader loader) {
  std::lock_guard lock(g_memo_mutex);
  g_loader = std::move(loader);
}

void clear_group_memo() {
  std::lock_guard lock(g_memo_mutex);
  g_memo.clear();
}

std::shared_ptr<const GroupData> enumerate(const GroupKey& key, std::uint64_t budget) {
  key.validate();
  if (key.order() > budget)
    fail(ErrorCode::Size, "|G" + key.str() + "| = " + std::to_string(key.order()) + " exceeds budget " +
                              std::to_string(budget));
  GroupLoader loader;
  {
    std::lock_guard lock(g_memo_mutex);
    if (auto it = g_memo.find(key); it != g_memo.end()) return it->second;
    loader = g_loader;
  }
  auto g = loader ? loader(key, budget) : GroupData::build(key, budget);
  std::lock_guard lock(g_memo_mutex);
  return g_memo.emplace(key, std::move(g)).first->second;
}

std::vector<WreathElement> center_formula(const GroupKey& key) {
  key.validate();
  if (key == GroupKey{1, 1, 2} || key == GroupKey{2, 2, 2}) return enumerate(key)->elements();
  const int d = key.gcd_pn();
  std::vector<WreathElement> out;
  for (int j = 0; j < d * key.r / key.p; ++j)
    out.push_back(central_power(key.r, key.n, static_cast<std::int64_t>(j) * key.p / d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupData::Index> subgroup_closure(const GroupData& g,
                                               const std::vector<GroupData::Index>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<GroupData::Index> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : gens) {
      const auto y = g.mul(members[head], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

nlohmann::json group_to_json(const GroupData& g) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : g.classes()) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto i : cls) arr.push_back(g.element(i).to_json());
    classes.push_back(std::move(arr));
  }
  nlohmann::json center = nlohmann::json::array();
  for (auto i : g.center()) center.push_back(g.element(i).to_json());
  return {{"key", {{"r", g.key().r}, {"p", g.key().p}, {"n", g.key().n}}},
          {"order", g.order()},
          {"classes", std::move(classes)},
          {"center", std::move(center)}};
}

}  // namespace reflekt

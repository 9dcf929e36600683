#pragma once

// Elements of the wreath product Z_r wr S_n and the subgroups G(r,p,n).
//
// An element is a pair (x, pi) of a phase vector x in (Z_r)^n and a
// permutation pi of [1,n], multiplied by
//
//     (x, pi)(y, sigma) = (sigma^-1(x) + y, pi sigma),
//     pi(x) = (x_{pi^-1(1)}, ..., x_{pi^-1(n)}).
//
// As a matrix, (x, pi) has zeta_r^{x_i} at row pi(i), column i. Positions are
// 0-based in this API; the JSON/report surface converts to 1-based.

#include "reflekt/error.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace reflekt {

inline constexpr int kMaxRank = 8;
inline constexpr int kMaxModulus = 255;
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct GroupKey {
  int r = 1;
  int p = 1;
  int n = 1;

  /// Throws ErrorCode::Parameter unless r,p,n >= 1 and p | r.
  void validate() const;
  int d() const;       ///< gcd(r, p); equals p once p | r
  int gcd_pn() const;  ///< gcd(p, n)
  GroupKey ambient() const { return {r, 1, n}; }
  /// n! r^n / p
  std::uint64_t order() const;
  std::string str() const;

  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

GroupKey parse_key(const std::string& text);  ///< "r,p,n"

class Perm {
public:
  Perm() = default;
  static Perm identity(int n);
  /// 0-based one-line images; throws ErrorCode::Parameter unless bijective.
  static Perm from_images(const std::vector<int>& images);
  static Perm from_one_based(const std::vector<int>& images);
  /// Product of disjoint or overlapping cycles given 1-based, composed
  /// left to right as written (rightmost applied first).
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Perm transposition(int n, int i, int j);

  int size() const noexcept { return n_; }
  int operator()(int i) const noexcept { return img_[static_cast<std::size_t>(i)]; }
  std::vector<int> images() const;
  std::vector<int> one_based() const;

  Perm inverse() const;
  /// (a * b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b);

  bool is_identity() const noexcept;
  int length() const noexcept;  ///< |Inv(pi)|
  int sign() const noexcept { return length() % 2 == 0 ? 1 : -1; }
  /// Inversion set, pairs (i,j) with i<j, pi(i)>pi(j), 0-based.
  std::vector<std::pair<int, int>> inversions() const;
  /// 2-cycles (i,j), i<j.
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<int> fixed_points() const;
  /// Weakly decreasing cycle lengths.
  std::vector<int> cycle_type() const;
  bool is_involution() const noexcept;
  /// Position in the lexicographic order of one-line images.
  std::uint64_t lex_rank() const noexcept;
  static Perm from_lex_rank(int n, std::uint64_t rank);

  friend bool operator==(const Perm& a, const Perm& b) noexcept;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) noexcept;

private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> img_{};
};

class PhaseVector {
public:
  PhaseVector() = default;
  PhaseVector(int modulus, int n);  ///< all zero
  PhaseVector(int modulus, const std::vector<int>& entries);
  static PhaseVector basis(int modulus, int n, int i);  ///< e_i

  int modulus() const noexcept { return r_; }
  int size() const noexcept { return n_; }
  int operator[](int i) const noexcept { return v_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  std::vector<int> entries() const;
  int sum() const noexcept;  ///< Delta(x), in [0, r)

  /// pi(x) = (x_{pi^-1(1)}, ..., x_{pi^-1(n)})
  PhaseVector permuted(const Perm& pi) const;
  PhaseVector scaled(int j) const;
  PhaseVector operator-() const;
  friend PhaseVector operator+(const PhaseVector& a, const PhaseVector& b);

  friend bool operator==(const PhaseVector& a, const PhaseVector& b) noexcept;
  friend std::strong_ordering operator<=>(const PhaseVector& a, const PhaseVector& b) noexcept;

private:
  std::uint8_t r_ = 1;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> v_{};
};

class WreathElement {
public:
  WreathElement() = default;
  WreathElement(PhaseVector phases, Perm perm);
  static WreathElement identity(int r, int n);
  /// Convenience: 0-based perm images and raw phases.
  static WreathElement make(int r, const std::vector<int>& phases, const std::vector<int>& perm);

  const PhaseVector& phases() const noexcept { return phases_; }
  const Perm& perm() const noexcept { return perm_; }
  int modulus() const noexcept { return phases_.modulus(); }
  int rank() const noexcept { return perm_.size(); }
  int delta() const noexcept { return phases_.sum(); }
  bool is_identity() const noexcept;

  /// {"phases":[..],"perm":[..1-based..]}
  nlohmann::json to_json() const;
  static WreathElement from_json(int r, const nlohmann::json& j);
  std::string str() const;

  /// Canonical order: one-line permutation images first, then phases.
  friend std::strong_ordering operator<=>(const WreathElement& a, const WreathElement& b) noexcept;
  friend bool operator==(const WreathElement& a, const WreathElement& b) noexcept;

private:
  PhaseVector phases_;
  Perm perm_;
};

/// Throws ErrorCode::Parameter on modulus or rank mismatch.
WreathElement multiply(const WreathElement& a, const WreathElement& b);
WreathElement invert(const WreathElement& g);
WreathElement power(const WreathElement& g, std::int64_t k);
/// g^T = (pi(x), pi^-1)
WreathElement transpose(const WreathElement& g);
/// conj(g) = (-x, pi), the inverse transpose automorphism.
WreathElement bar(const WreathElement& g);

struct Conjugates {
  WreathElement transpose;
  WreathElement bar;
};
Conjugates conjugates(const WreathElement& g);

struct Decomposition {
  Perm proj;           ///< |g|
  std::vector<int> z;  ///< z_g(i) = x_i
  int delta = 0;       ///< Delta(g) mod r
};
Decomposition decompose(const WreathElement& g);

bool is_member(const WreathElement& g, const GroupKey& key);

/// Named generators: "s1".."s{n-1}", "s1'".."s{n-1}'", "s", "t", "c".
/// The primed generators and s exist only for r >= 2 and n >= 2.
std::map<std::string, WreathElement> standard_generators(const GroupKey& key);

/// Resolve a generator name, also accepting powers such as "t^2".
WreathElement named_element(const GroupKey& key, const std::string& name);

/// s_1..s_{n-1}, s, t^p with identities dropped; generates G(r,p,n).
std::vector<WreathElement> generating_set(const GroupKey& key);

/// c^k = ((k,...,k), 1)
WreathElement central_power(int r, int n, std::int64_t k);

/// An enumerated G(r,p,n): all elements in canonical order, conjugacy
/// classes and center. Immutable once built; share through shared_ptr.
class GroupData {
public:
  using Index = std::uint32_t;
  static constexpr Index npos = static_cast<Index>(-1);

  const GroupKey& key() const noexcept { return key_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<WreathElement>& elements() const noexcept { return elements_; }
  const WreathElement& element(Index i) const { return elements_[i]; }

  /// npos when the element is not a member.
  Index find(const WreathElement& g) const noexcept;
  Index index_of(const WreathElement& g) const;  ///< throws when absent
  Index identity() const noexcept { return identity_; }

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index transpose(Index a) const;

  /// Classes are sorted by representative; each class is sorted and its
  /// first entry is its (canonically minimal) representative.
  const std::vector<std::vector<Index>>& classes() const noexcept { return classes_; }
  std::size_t class_of(Index a) const { return class_of_[a]; }
  Index class_rep(std::size_t c) const { return classes_[c].front(); }
  std::uint64_t centralizer_order(std::size_t c) const { return order() / classes_[c].size(); }

  const std::vector<Index>& center() const noexcept { return center_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }

  /// Code of an ambient element: lex rank of perm * r^n + phase number.
  std::uint64_t ambient_code(const WreathElement& g) const noexcept;

  /// Builds everything from scratch. Throws ErrorCode::Size beyond budget.
  static std::shared_ptr<const GroupData> build(const GroupKey& key, std::uint64_t budget);
  /// Rebuilds from a class partition (cache load) and checks it against a
  /// direct recomputation of membership; throws ErrorCode::Consistency.
  static std::shared_ptr<const GroupData> from_classes(
      const GroupKey& key, const std::vector<std::vector<WreathElement>>& classes,
      const std::vector<WreathElement>& center, std::uint64_t budget);

private:
  GroupData() = default;
  void index_elements();
  void compute_classes();
  void compute_center();

  GroupKey key_;
  std::vector<WreathElement> elements_;
  std::vector<std::int32_t> code_to_index_;
  std::vector<std::uint64_t> radix_;  // r^(n-1-i)
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::vector<std::vector<Index>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Index> center_;
  Index identity_ = 0;
};

/// Memoized GroupData::build keyed by (r,p,n). Thread-safe.
std::shared_ptr<const GroupData> enumerate(const GroupKey& key,
                                           std::uint64_t budget = kDefaultBudget);

/// Replaces GroupData::build on memo misses (the on-disk cache hooks in here).
using GroupLoader = std::function<std::shared_ptr<const GroupData>(const GroupKey&, std::uint64_t)>;
void set_group_loader(GroupLoader loader);
void clear_group_memo();

/// {c^{jp/d} : 0 <= j < dr/p} with d = gcd(p,n), or the whole group for
/// the abelian keys (1,1,2) and (2,2,2).
std::vector<WreathElement> center_formula(const GroupKey& key);

/// Subgroup generated by a set of elements of g (closure); sorted indices.
std::vector<GroupData::Index> subgroup_closure(const GroupData& g,
                                               const std::vector<GroupData::Index>& gens);

nlohmann::json group_to_json(const GroupData& g);

}  // namespace reflekt

#pragma once

// Characters of G(r,1,n) indexed by r-partite partitions, their restriction
// to G(r,p,n), and class-function utilities.

#include "reflekt/cyclotomic.hpp"
#include "reflekt/group.hpp"
#include "reflekt/group_map.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace reflekt {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const noexcept;
  bool empty() const noexcept { return parts.empty(); }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

struct RPartite {
  std::vector<Partition> components;  // theta_0 .. theta_{r-1}

  int r() const noexcept { return static_cast<int>(components.size()); }
  int size() const noexcept;
  nlohmann::json to_json() const;
  std::string str() const;
  friend auto operator<=>(const RPartite&, const RPartite&) = default;
};

std::vector<RPartite> rpartite_partitions(int r, int n);

/// Hook length formula.
std::uint64_t syt_count(const Partition& lambda);

/// chi^lambda on cycle type mu by Murnaghan-Nakayama. Memoized.
std::int64_t sym_char_value(const Partition& lambda, const std::vector<int>& mu);

/// chi^lambda(|g|) * zeta_r^(i Delta(g))
CycloNumber wreath_linear_value(int i, const Partition& lambda, const WreathElement& g);

class ClassFunction {
public:
  ClassFunction(std::shared_ptr<const GroupData> group, std::vector<CycloNumber> values);
  /// Values given per element; throws ErrorCode::Consistency unless constant on classes.
  static ClassFunction from_element_values(std::shared_ptr<const GroupData> group,
                                           const std::vector<CycloNumber>& per_element);
  static ClassFunction from_element_counts(std::shared_ptr<const GroupData> group,
                                           const std::vector<std::int64_t>& per_element);

  const GroupData& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupData>& group_ptr() const noexcept { return group_; }
  const std::vector<CycloNumber>& values() const noexcept { return values_; }
  const CycloNumber& on_class(std::size_t c) const { return values_[c]; }
  const CycloNumber& at(GroupData::Index element) const { return values_[group_->class_of(element)]; }
  const CycloNumber& at(const WreathElement& g) const { return at(group_->index_of(g)); }
  CycloNumber degree() const { return at(group_->identity()); }

  /// Restriction to a subgroup G(r,p',n) of this group's G(r,p,n).
  ClassFunction restrict_to(std::shared_ptr<const GroupData> sub) const;
  ClassFunction conjugate() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  /// {"classIndex": cyclo, ...}
  nlohmann::json to_json() const;

private:
  std::shared_ptr<const GroupData> group_;
  std::vector<CycloNumber> values_;
};

/// (1/|G|) sum_g a(g) conj(b(g))
CycloNumber inner_product(const ClassFunction& a, const ClassFunction& b);

/// Ind from S_theta (blocks in order theta_0, theta_1, ...) to G(r,1,n).
ClassFunction chi_theta(const RPartite& theta);
CycloNumber chi_theta_value(const RPartite& theta, const WreathElement& g);
std::uint64_t chi_theta_degree(const RPartite& theta);

/// zeta_r^((r/p) Delta(g)), trivial on G(r,p,n).
CycloNumber gamma_value(const GroupKey& key, const WreathElement& g);
ClassFunction gamma_character(const GroupKey& key);

/// theta'_x = theta_{x - r/p}
RPartite shift_theta(const RPartite& theta, const GroupKey& key);

struct OrbitStabilizer {
  std::vector<RPartite> orbit;
  int stabilizer_order = 1;
};
OrbitStabilizer orbit_and_stabilizer(const RPartite& theta, const GroupKey& key);

struct IrreducibleEntry {
  RPartite theta;        // canonical (minimal) member of its shift orbit
  int stabilizer = 1;    // number of constituents of the restriction
  std::uint64_t degree = 0;  // of each constituent
};
/// One entry per shift orbit, in canonical order.
std::vector<IrreducibleEntry> irreducible_labels(const GroupKey& key);
/// Sorted multiset of degrees of Irr(G(r,p,n)).
std::vector<std::uint64_t> irr_degree_list(const GroupKey& key);

struct SymmetricCount {
  std::uint64_t symmetric_count = 0;
  std::uint64_t degree_sum = 0;
  bool equal = false;
};
SymmetricCount symmetric_count_check(const GroupKey& key);

/// (1/|G|) sum_g chi(g tau(g)); ErrorCode::Consistency unless in {-1,0,1}.
int epsilon_tau(const ClassFunction& chi, const GroupMap& tau);

}  // namespace reflekt

#pragma once

// Generalized involutions, twisted classes, the signed-permutation model
// representations on symmetric elements, and generalized involution models.

#include "reflekt/characters.hpp"
#include "reflekt/group.hpp"
#include "reflekt/group_map.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace reflekt {

using Index = GroupData::Index;

struct TwistedOrbitDecomposition {
  std::shared_ptr<const GroupData> group;
  std::shared_ptr<const GroupMap> tau;
  std::vector<Index> involutions;               // sorted
  std::vector<std::vector<Index>> orbits;       // each sorted; ordered by first entry
  std::vector<Index> reps;                      // orbits[i].front()
  std::vector<std::vector<Index>> centralizers; // sorted
  std::vector<std::int32_t> orbit_of;           // per element, -1 outside I_{G,tau}

  /// g . omega = g omega tau(g)^-1
  Index act(Index g, Index omega) const;
};

/// Throws ErrorCode::Parameter unless tau is an involution.
TwistedOrbitDecomposition twisted_decomposition(std::shared_ptr<const GroupData> group, const GroupMap& tau);

/// g -> |{u : u tau(u) = g}|
ClassFunction counting_char(std::shared_ptr<const GroupData> group, const GroupMap& tau);

struct PermStats {
  std::vector<std::pair<int, int>> inv;
  std::vector<std::pair<int, int>> pair;
  std::vector<int> fix;
};
PermStats perm_stats(const Perm& pi);

/// (-1)^{|B(g,w)|} (-1)^{|Inv(|g|) cap Pair(|w|)|}; w must be symmetric.
int sign_apr(const WreathElement& g, const WreathElement& omega);
/// The variant selected by whether 2p divides Delta(w); needs p and r/p even.
int sign_twisted(const WreathElement& g, const WreathElement& omega, const GroupKey& key);

enum class ModelVariant { Apr, Restricted, Twisted };
const char* variant_name(ModelVariant v) noexcept;

class ModelRep {
public:
  /// Checks the variant's preconditions and that the action is a homomorphism.
  static ModelRep build(ModelVariant variant, const GroupKey& key);

  ModelVariant variant() const noexcept { return variant_; }
  const GroupKey& key() const noexcept { return group_->key(); }
  const std::shared_ptr<const GroupData>& group_ptr() const noexcept { return group_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Index>& basis() const noexcept { return basis_; }
  /// position of the basis element or -1
  std::int32_t position(Index element) const { return position_[element]; }

  int sign(Index g, Index omega) const;
  /// rho(g) C_b = sign * C_target
  std::uint32_t target(Index g, std::size_t b) const { return target_[g * basis_.size() + b]; }
  int sign_at(Index g, std::size_t b) const { return sign_[g * basis_.size() + b]; }

  /// Number of (g,h) pairs checked by the homomorphism audit.
  std::uint64_t audited_pairs() const noexcept { return audited_pairs_; }

private:
  ModelVariant variant_ = ModelVariant::Apr;
  std::shared_ptr<const GroupData> group_;
  std::vector<Index> basis_;
  std::vector<std::int32_t> position_;
  std::vector<std::uint32_t> target_;
  std::vector<std::int8_t> sign_;
  std::uint64_t audited_pairs_ = 0;
};

/// Trace of the signed permutation action, restricted to the basis elements
/// accepted by the filter (all when empty).
ClassFunction rep_character(const ModelRep& rep);
ClassFunction rep_character(const ModelRep& rep, const std::function<bool(const WreathElement&)>& filter);

struct GelfandResult {
  bool gelfand = false;
  bool counts_equal = false;  // symmetric count = degree sum
  bool character_match = false;
  ClassFunction rep_char;
  ClassFunction counting;
};
/// ErrorCode::Unsupported when gcd(p,n) > 2.
GelfandResult gelfand_check(ModelVariant variant, const GroupKey& key);

/// A linear character of a subgroup H of an enumerated group, valued in
/// modulus-th roots of unity: lambda(h) = zeta_modulus^exponent(h).
struct LinearChar {
  std::vector<Index> domain;           // sorted
  std::vector<std::int64_t> exponent;  // aligned with domain
  int modulus = 1;

  CycloNumber value(std::size_t pos) const { return CycloNumber::root_of_unity(exponent[pos], modulus); }
  std::optional<std::size_t> position(Index g) const;
  /// Throws ErrorCode::Consistency unless multiplicative.
  void verify(const GroupData& group) const;
};

/// Generators chosen greedily from a sorted subgroup.
std::vector<Index> subgroup_generators(const GroupData& group, const std::vector<Index>& subgroup);
/// Commutator subgroup of a subgroup (sorted).
std::vector<Index> derived_subgroup(const GroupData& group, const std::vector<Index>& subgroup);
/// All linear characters, valued in modulus-th roots of unity; modulus must
/// be a multiple of the exponent of the abelianization.
std::vector<LinearChar> linear_characters(const GroupData& group, const std::vector<Index>& subgroup, int modulus);
/// lcm of element orders
int group_exponent(const GroupData& group);

ClassFunction induce_linear(std::shared_ptr<const GroupData> group, const LinearChar& lambda);

struct ModelCandidate {
  struct Entry {
    Index rep;
    LinearChar lambda;
  };
  std::shared_ptr<const GroupData> group;
  std::vector<Entry> entries;

  nlohmann::json to_json() const;
};

ModelCandidate extract_gim(const ModelRep& rep);
/// True iff the induced characters sum to the counting character.
bool verify_gim(const ModelCandidate& candidate, const GroupMap& tau);

/// The explicit model for G(r,p,2), r and p even, r/p odd. Also checks the
/// stated centralizers and coset representatives (ErrorCode::Consistency).
ModelCandidate gim_grp2(int r, int p);
std::int64_t model_char_grp2(int r, int p, const WreathElement& g);

struct ChiPmResult {
  bool swap_predicted = false;  // n and r/p both odd
  bool passed = false;
  ClassFunction plus;
  ClassFunction minus;
};
/// Compares gamma (x) chi^+ with chi^- or chi^+ on G(r,1,n); r must be even.
ChiPmResult chi_pm_check(const GroupKey& key);

/// c^{r/2} lies in the commutator subgroup of every twisted centralizer.
/// Needs gcd(p,n) = 2 and r/p even.
bool commutator_obstruction(const GroupKey& key);

struct SearchResult {
  std::optional<ModelCandidate> model;
  std::uint64_t combinations = 0;  // product of linear-character counts
  std::uint64_t nodes = 0;
};
SearchResult brute_gim_search(std::shared_ptr<const GroupData> group, const GroupMap& tau,
                              std::uint64_t budget = 1'000'000);

}  // namespace reflekt

#pragma once

// Automorphisms of G(r,p,n): the diagonal-twist family alpha_{j,k,z},
// conjugation by the ambient group, the sporadic eta maps, enumeration of
// Aut(G) and the closed-form orders.

#include "reflekt/cyclotomic.hpp"
#include "reflekt/group.hpp"
#include "reflekt/group_map.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace reflekt {

/// z = c^m. Validity against a key is checked by alpha_map.
struct AlphaParams {
  int j = 1;
  int k = 0;
  int m = 0;
};

/// z^{l(pi)} c^{Delta(x) k} (jx, pi) for any element of G(r,1,n).
WreathElement alpha_apply(const AlphaParams& a, const WreathElement& g);

/// Empty when valid, else the failed condition.
std::string alpha_violation(const AlphaParams& a, const GroupKey& key);

/// Throws ErrorCode::NotAnAutomorphism naming the failed condition.
GroupMap alpha_map(const AlphaParams& a, const GroupKey& key);
inline GroupMap beta_map(int j, const GroupKey& key) { return alpha_map({j, 0, 0}, key); }
inline GroupMap gamma_map(int k, int m, const GroupKey& key) { return alpha_map({1, k, m}, key); }

/// x -> g x g^-1 restricted to G(r,p,n); g ranges over G(r,1,n).
GroupMap ad_map(const WreathElement& g, const GroupKey& key);

/// Delta(g) divisible by gcd(p,n).
bool is_inner(const WreathElement& g, const GroupKey& key);
/// Direct comparison with every Ad(h), h in G(r,p,n).
bool is_inner(const GroupMap& m);

/// Extends generator images along the Cayley graph. Keys are generator
/// names understood by named_element ("s1", "s2'", "t^2", ...) and must
/// generate G(r,p,n).
GroupMap extend_generators(const std::map<std::string, WreathElement>& images, const GroupKey& key);
GroupMap extend_generators(std::shared_ptr<const GroupData> group, const std::vector<WreathElement>& gens,
                           const std::vector<WreathElement>& images);

struct EtaSpec {
  std::string name;
  std::vector<std::pair<std::string, WreathElement>> images;  // generator name -> image
};
/// The sporadic generator tables; empty for keys without one.
std::vector<EtaSpec> eta_specs(const GroupKey& key);
std::vector<GroupMap> eta_maps(const GroupKey& key);

/// Aut(G) as generator-image tuples over generating_set(key), deduplicated
/// and sorted. Materialize single maps with map(i).
class AutEnumeration {
public:
  const GroupKey& key() const noexcept { return group_->key(); }
  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<std::vector<GroupData::Index>>& images() const noexcept { return images_; }
  GroupMap map(std::size_t i) const;
  /// Index of a map in the enumeration, or size() when absent.
  std::size_t find(const GroupMap& m) const;
  /// Composes `samples` random pairs and checks the result is listed.
  bool closed_under_composition(std::size_t samples, std::uint64_t seed = 1) const;

  friend AutEnumeration enumerate_aut(const GroupKey& key, std::uint64_t budget);

private:
  std::shared_ptr<const GroupData> group_;
  std::vector<WreathElement> gens_;
  std::vector<std::vector<GroupData::Index>> images_;
};

/// Throws ErrorCode::Size when |G(r,1,n)| exceeds the budget.
AutEnumeration enumerate_aut(const GroupKey& key, std::uint64_t budget = kDefaultBudget);

struct AutOrders {
  BigInt aut;
  BigInt out;
  BigInt center;
  Rational c;
  int c_prime = 1;
  int e = 1;

  nlohmann::json to_json() const;
};
AutOrders aut_order_formula(const GroupKey& key);

struct GimVerdict {
  bool exists = false;
  std::string reason;
};
GimVerdict gim_exists(const GroupKey& key);

}  // namespace reflekt

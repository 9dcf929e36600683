#include "reflekt/views.hpp"

#include "reflekt/automorphism.hpp"
#include "reflekt/characters.hpp"
#include "reflekt/involution.hpp"

namespace reflekt {

namespace {

nlohmann::json key_json(const GroupKey& k) { return {{"r", k.r}, {"p", k.p}, {"n", k.n}}; }

bool restricted_gelfand(const GroupKey& k) { return k.gcd_pn() == 1 && (k.p % 2 == 1 || (k.r / k.p) % 2 == 1); }
bool twisted_ok(const GroupKey& k) { return k.gcd_pn() == 1 && k.p % 2 == 0 && (k.r / k.p) % 2 == 0; }

}  // namespace

nlohmann::json group_view(const GroupKey& key, std::uint64_t budget) {
  auto G = enumerate(key, budget);
  nlohmann::json j = group_to_json(*G);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generating_set(key)) gens.push_back(g.to_json());
  j["generators"] = std::move(gens);
  j["class_count"] = G->classes().size();
  return j;
}

nlohmann::json chars_view(const GroupKey& key, bool values, std::uint64_t budget) {
  key.validate();
  if (values) enumerate(key.ambient(), budget);
  std::shared_ptr<const GroupData> G = values ? enumerate(key, budget) : nullptr;
  nlohmann::json irr = nlohmann::json::array();
  for (const auto& e : irreducible_labels(key)) {
    nlohmann::json j{{"theta", e.theta.to_json()}, {"degree", e.degree}, {"constituents", e.stabilizer}};
    if (values && e.stabilizer == 1) j["values"] = chi_theta(e.theta).restrict_to(G).to_json();
    irr.push_back(std::move(j));
  }
  return {{"key", key_json(key)}, {"irr", std::move(irr)}};
}

nlohmann::json gelfand_view(const GroupKey& key, std::uint64_t budget) {
  key.validate();
  if (key.order() > budget) fail(ErrorCode::Size, "group exceeds budget");
  nlohmann::json variants = nlohmann::json::object();
  auto add = [&](ModelVariant v, bool applies) {
    if (!applies) return;
    const auto res = gelfand_check(v, key);
    variants[variant_name(v)] = {{"gelfand", res.gelfand},
                                 {"counts_equal", res.counts_equal},
                                 {"character_match", res.character_match},
                                 {"rep_char", res.rep_char.to_json()},
                                 {"counting_char", res.counting.to_json()}};
  };
  if (key.gcd_pn() > 2) fail(ErrorCode::Unsupported, "gelfand check needs gcd(p,n) <= 2, got " + key.str());
  add(ModelVariant::Apr, key.p == 1);
  add(ModelVariant::Restricted, true);
  add(ModelVariant::Twisted, twisted_ok(key));
  return {{"key", key_json(key)}, {"variants", std::move(variants)}};
}

nlohmann::json gim_view(const GroupKey& key, std::uint64_t budget) {
  key.validate();
  auto G = enumerate(key, budget);
  const GroupMap tau = inverse_transpose(G);
  std::optional<ModelCandidate> cand;
  std::string source;
  if (restricted_gelfand(key) || twisted_ok(key)) {
    cand = extract_gim(ModelRep::build(restricted_gelfand(key) ? ModelVariant::Restricted : ModelVariant::Twisted, key));
    source = "extracted";
  } else if (key.n == 2 && key.r % 2 == 0 && key.p % 2 == 0 && (key.r / key.p) % 2 == 1) {
    cand = gim_grp2(key.r, key.p);
    source = "rank-two";
  } else {
    auto res = brute_gim_search(G, tau, budget);
    if (!res.model) fail(ErrorCode::Unsupported, "no involution model for G" + key.str() + " (" + gim_exists(key).reason + ")");
    cand = std::move(res.model);
    source = "search";
  }
  return {{"key", key_json(key)},
          {"tau", "inverse-transpose"},
          {"source", source},
          {"classes", cand->to_json()},
          {"verified", verify_gim(*cand, tau)}};
}

nlohmann::json aut_view(const GroupKey& key, std::uint64_t budget) {
  const auto f = aut_order_formula(key);
  auto as_int = [](const BigInt& v) { return v.convert_to<std::int64_t>(); };
  nlohmann::json j{{"key", key_json(key)},
                   {"aut_order", as_int(f.aut)},
                   {"out_order", as_int(f.out)},
                   {"center_order", as_int(f.center)},
                   {"formula", f.to_json()}};
  const auto aut = enumerate_aut(key, budget);
  j["enumerated"] = aut.size();
  j["match"] = BigInt(aut.size()) == f.aut;
  nlohmann::json etas = nlohmann::json::array();
  for (const auto& e : eta_specs(key)) etas.push_back(e.name);
  j["eta"] = std::move(etas);
  return j;
}

}  // namespace reflekt

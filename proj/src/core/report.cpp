#include "reflekt/report.hpp"

#include "reflekt/automorphism.hpp"
#include "reflekt/characters.hpp"
#include "reflekt/involution.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <regex>
#include <sstream>

namespace reflekt {

const char* status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> suites{"group", "chars", "involutions", "gelfand", "gim", "aut", "classify"};
  return suites;
}

namespace {

nlohmann::json key_json(const GroupKey& k) { return {{"r", k.r}, {"p", k.p}, {"n", k.n}}; }

// Largest group the representation checks will touch.
constexpr std::uint64_t kModelLimit = 4096;
constexpr std::uint64_t kAutLimit = 20000;
constexpr std::uint64_t kSearchLimit = 200;

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
  nlohmann::json details = nlohmann::json::object();
};

Outcome verdict(bool ok, nlohmann::json details, const std::string& why_not) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : why_not, std::move(details)};
}

Outcome skip(std::string reason) { return {CheckStatus::Skipped, std::move(reason), nlohmann::json::object()}; }

class Runner {
public:
  Runner(VerificationReport& report, const GroupKey& key) : report_(report), key_(key) {}

  void check(const std::string& name, const std::string& claim, const std::function<Outcome()>& body) {
    if (!report_.options.only.empty() && !report_.options.only.count(name)) return;
    CheckResult c;
    c.key = key_;
    c.name = name;
    c.claim = claim;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      c.status = o.status;
      c.reason = std::move(o.reason);
      c.details = std::move(o.details);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Size || e.code() == ErrorCode::Unsupported) {
        c.status = CheckStatus::Skipped;
      } else {
        c.status = CheckStatus::Fail;
      }
      c.reason = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    if (report_.options.timing)
      c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(c));
  }

  std::uint64_t budget() const { return report_.options.budget; }

private:
  VerificationReport& report_;
  GroupKey key_;
};

bool restricted_predicted(const GroupKey& k) { return k.gcd_pn() == 1 && (k.p % 2 == 1 || (k.r / k.p) % 2 == 1); }
bool twisted_applies(const GroupKey& k) { return k.gcd_pn() == 1 && k.p % 2 == 0 && (k.r / k.p) % 2 == 0; }

std::optional<ModelVariant> model_variant_for(const GroupKey& k) {
  if (restricted_predicted(k)) return ModelVariant::Restricted;
  if (twisted_applies(k)) return ModelVariant::Twisted;
  return std::nullopt;
}

bool model_sized(const GroupKey& k, std::uint64_t budget) { return k.order() <= std::min(kModelLimit, budget); }

void group_suite(Runner& run, const GroupKey& key) {
  run.check("group.order", "order-formula", [&] {
    auto G = enumerate(key, run.budget());
    return verdict(G->order() == key.order(), {{"enumerated", G->order()}, {"formula", key.order()}}, "order differs from n! r^n / p");
  });
  run.check("group.center", "center-formula", [&] {
    auto G = enumerate(key, run.budget());
    std::vector<GroupData::Index> formula;
    for (const auto& z : center_formula(key)) formula.push_back(G->index_of(z));
    std::sort(formula.begin(), formula.end());
    return verdict(formula == G->center(), {{"center_order", G->center().size()}}, "brute-force center differs from the formula");
  });
}

void chars_suite(Runner& run, const GroupKey& key) {
  run.check("chars.burnside", "degree-squares-sum-to-order", [&] {
    BigInt sum = 0;
    for (auto d : irr_degree_list(key)) sum += BigInt(d) * d;
    return verdict(sum == key.order(), {{"irr_count", irr_degree_list(key).size()}}, "sum of squared degrees differs from |G|");
  });
  run.check("chars.symmetric-count", "symmetric-count-vs-degree-sum", [&] {
    if (key.order() > run.budget()) fail(ErrorCode::Size, "group exceeds budget");
    const auto s = symmetric_count_check(key);
    const bool expect_equal = key.gcd_pn() <= 2;
    const bool ok = expect_equal ? s.equal : s.symmetric_count < s.degree_sum;
    return verdict(ok, {{"symmetric", s.symmetric_count}, {"degree_sum", s.degree_sum}, {"expect_equal", expect_equal}},
                   "symmetric count relation does not hold");
  });
}

void involution_suite(Runner& run, const GroupKey& key) {
  run.check("involutions.orbits", "twisted-classes-partition-involutions", [&] {
    auto G = enumerate(key, run.budget());
    const auto d = twisted_decomposition(G, inverse_transpose(G));
    std::size_t total = 0;
    for (const auto& o : d.orbits) total += o.size();
    return verdict(total == d.involutions.size(), {{"involutions", d.involutions.size()}, {"classes", d.orbits.size()}},
                   "orbits do not partition the involutions");
  });
  run.check("involutions.plus-minus", "gamma-swaps-or-fixes-parity-halves", [&] {
    if (key.r % 2 != 0) return skip("needs r even");
    if (!model_sized(key.ambient(), run.budget())) return skip("ambient group above model size limit");
    const auto res = chi_pm_check(key);
    return verdict(res.passed, {{"swap_predicted", res.swap_predicted}}, "gamma does not act as predicted");
  });
}

void gelfand_suite(Runner& run, const GroupKey& key) {
  auto one = [&](const std::string& name, ModelVariant v, bool applies, bool predicted) {
    run.check(name, std::string(variant_name(v)) + "-model-gelfand", [&] {
      if (!applies) return skip("variant preconditions do not hold");
      if (!model_sized(key, run.budget())) return skip("group above model size limit");
      const auto res = gelfand_check(v, key);
      return verdict(res.gelfand == predicted,
                     {{"gelfand", res.gelfand}, {"predicted", predicted}, {"counts_equal", res.counts_equal},
                      {"character_match", res.character_match}},
                     "Gelfand outcome differs from prediction");
    });
  };
  one("gelfand.apr", ModelVariant::Apr, key.p == 1, true);
  one("gelfand.restricted", ModelVariant::Restricted, key.gcd_pn() <= 2, restricted_predicted(key));
  one("gelfand.twisted", ModelVariant::Twisted, twisted_applies(key), true);
}

void gim_suite(Runner& run, const GroupKey& key) {
  run.check("gim.extracted", "model-yields-involution-model", [&] {
    const auto v = model_variant_for(key);
    if (!v) return skip("no Gelfand model variant for this key");
    if (!model_sized(key, run.budget())) return skip("group above model size limit");
    const auto rep = ModelRep::build(*v, key);
    const auto cand = extract_gim(rep);
    return verdict(verify_gim(cand, inverse_transpose(rep.group_ptr())),
                   {{"variant", variant_name(*v)}, {"classes", cand.entries.size()}}, "extracted model does not verify");
  });
  run.check("gim.rank-two", "explicit-rank-two-model", [&] {
    if (key.n != 2 || key.r % 2 != 0 || key.p % 2 != 0 || (key.r / key.p) % 2 == 0)
      return skip("needs n = 2, r and p even, r/p odd");
    const auto cand = gim_grp2(key.r, key.p);
    auto G = cand.group;
    bool closed_form = true;
    std::optional<ClassFunction> sum;
    for (const auto& e : cand.entries) {
      auto ind = induce_linear(G, e.lambda);
      sum = sum ? *sum + ind : ind;
    }
    for (std::size_t c = 0; c < G->classes().size(); ++c)
      closed_form = closed_form && sum->on_class(c) == CycloNumber(model_char_grp2(key.r, key.p, G->element(G->class_rep(c))));
    const bool ok = verify_gim(cand, inverse_transpose(G)) && closed_form;
    return verdict(ok, {{"closed_form", closed_form}}, "rank-two model fails");
  });
}

void aut_suite(Runner& run, const GroupKey& key) {
  run.check("aut.count", "aut-order-formula", [&] {
    if (key.order() > kAutLimit || key.ambient().order() > run.budget()) return skip("group above automorphism enumeration limit");
    const auto f = aut_order_formula(key);
    const auto aut = enumerate_aut(key, run.budget());
    const bool closed = aut.closed_under_composition(20);
    return verdict(BigInt(aut.size()) == f.aut && closed,
                   {{"enumerated", aut.size()}, {"formula", f.to_json()}, {"closed_sample", closed}},
                   "enumerated automorphisms differ from the formula");
  });
  run.check("aut.center", "center-order-formula", [&] {
    auto G = enumerate(key, run.budget());
    const auto f = aut_order_formula(key);
    return verdict(BigInt(G->center().size()) == f.center, {{"center", G->center().size()}}, "center order differs");
  });
  run.check("aut.inner", "inner-delta-criterion", [&] {
    if (key.ambient().order() > 2000) return skip("ambient group above inner check limit");
    auto A = enumerate(key.ambient(), run.budget());
    std::size_t checked = 0;
    for (const auto& g : A->elements()) {
      if (is_inner(g, key) != is_inner(ad_map(g, key))) return verdict(false, {{"element", g.to_json()}}, "criterion disagrees");
      ++checked;
    }
    return verdict(true, {{"checked", checked}}, "");
  });
}

void classify_suite(Runner& run, const GroupKey& key) {
  run.check("classify.verdict", "model-existence-classification", [&] {
    const auto v = gim_exists(key);
    nlohmann::json details{{"exists", v.exists}, {"reason", v.reason}};
    if (key.order() <= std::min(kSearchLimit, run.budget())) {
      auto G = enumerate(key, run.budget());
      const auto res = brute_gim_search(G, inverse_transpose(G), run.budget());
      details["evidence"] = "search";
      details["combinations"] = res.combinations;
      return verdict(res.model.has_value() == v.exists, details, "search disagrees with the classification");
    }
    if (v.reason == "commutator-obstruction") {
      details["evidence"] = "commutator";
      return verdict(commutator_obstruction(key), details, "commutator obstruction does not hold");
    }
    if (v.reason == "too-few-symmetric-elements") {
      details["evidence"] = "symmetric-count";
      return verdict(!symmetric_count_check(key).equal, details, "symmetric count unexpectedly matches");
    }
    if (v.exists && model_sized(key, run.budget())) {
      details["evidence"] = "constructed-model";
      if (auto mv = model_variant_for(key)) {
        const auto rep = ModelRep::build(*mv, key);
        return verdict(verify_gim(extract_gim(rep), inverse_transpose(rep.group_ptr())), details, "constructed model fails");
      }
      return verdict(verify_gim(gim_grp2(key.r, key.p), inverse_transpose(enumerate(key))), details, "rank-two model fails");
    }
    Outcome o = skip("no independent evidence within limits");
    o.details = details;
    return o;
  });
}

}  // namespace

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json keys = nlohmann::json::array();
  for (const auto& k : grid) keys.push_back(key_json(k));
  nlohmann::json only = nlohmann::json::array();
  for (const auto& o : options.only) only.push_back(o);
  nlohmann::json out{{"schema", kReportSchema},
                     {"tool", {{"name", "reflekt"}, {"version", kToolVersion}}},
                     {"config", {{"grid", keys}, {"suites", suites}, {"budget", options.budget}, {"checks", only}}}};
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"key", key_json(c.key)}, {"name", c.name}, {"claim", c.claim}, {"status", status_name(c.status)}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["details"] = c.details;
    if (c.elapsed_ms) j["elapsed_ms"] = *c.elapsed_ms;
    cs.push_back(std::move(j));
  }
  out["checks"] = std::move(cs);
  out["summary"] = {{"pass", count(CheckStatus::Pass)}, {"fail", count(CheckStatus::Fail)}, {"skipped", count(CheckStatus::Skipped)}};
  if (!warnings.empty()) out["warnings"] = warnings;
  return out;
}

std::string VerificationReport::table() const {
  std::ostringstream out;
  out << std::left << std::setw(12) << "key" << std::setw(26) << "check" << std::setw(9) << "status" << "note\n";
  for (const auto& c : checks) {
    out << std::setw(12) << c.key.str() << std::setw(26) << c.name << std::setw(9) << status_name(c.status);
    if (c.elapsed_ms) out << std::fixed << std::setprecision(1) << *c.elapsed_ms << " ms ";
    out << c.reason << '\n';
  }
  out << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, " << count(CheckStatus::Skipped)
      << " skipped\n";
  return out.str();
}

VerificationReport run_suite(const std::vector<GroupKey>& grid, const std::vector<std::string>& suites,
                             const SuiteOptions& options) {
  static const std::map<std::string, void (*)(Runner&, const GroupKey&)> table{
      {"group", group_suite}, {"chars", chars_suite}, {"involutions", involution_suite}, {"gelfand", gelfand_suite},
      {"gim", gim_suite},     {"aut", aut_suite},     {"classify", classify_suite}};
  for (const auto& s : suites)
    if (!table.count(s)) fail(ErrorCode::Usage, "unknown suite '" + s + "'");
  VerificationReport report;
  report.grid = grid;
  for (const auto& k : grid) {
    try {
      k.validate();
    } catch (const Error& e) {
      fail(ErrorCode::Usage, e.what());
    }
  }
  std::sort(report.grid.begin(), report.grid.end());
  report.grid.erase(std::unique(report.grid.begin(), report.grid.end()), report.grid.end());
  // canonical suite order
  for (const auto& s : all_suites())
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) report.suites.push_back(s);
  report.options = options;
  for (const auto& key : report.grid) {
    Runner run(report, key);
    for (const auto& s : report.suites) table.at(s)(run, key);
  }
  return report;
}

std::vector<GroupKey> default_grid() {
  std::vector<GroupKey> out = parse_grid("r<=6,p|r,n<=3");
  for (GroupKey k : {GroupKey{4, 2, 4}, GroupKey{2, 2, 4}, GroupKey{1, 1, 6}, GroupKey{8, 2, 3}}) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupKey> parse_grid(const std::string& text) {
  std::vector<GroupKey> out;
  static const std::regex range(R"(\s*r\s*<=\s*(\d+)\s*,\s*p\s*\|\s*r\s*,\s*n\s*<=\s*(\d+)\s*)");
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    std::smatch m;
    if (std::regex_match(part, m, range)) {
      const int R = std::stoi(m[1]);
      const int N = std::stoi(m[2]);
      if (R > kMaxModulus || N > kMaxRank) fail(ErrorCode::Usage, "grid bounds too large: " + part);
      for (int r = 1; r <= R; ++r)
        for (int p = 1; p <= r; ++p)
          if (r % p == 0)
            for (int n = 1; n <= N; ++n) out.push_back({r, p, n});
      continue;
    }
    try {
      out.push_back(parse_key(part));
    } catch (const Error& e) {
      fail(ErrorCode::Usage, "bad grid entry '" + part + "': " + e.what());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace reflekt

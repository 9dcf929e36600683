// reflekt command-line front end. Talks to the library only through the C API.

#include "reflekt/reflekt.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Key {
  int r = 0, p = 0, n = 0;
};

// "r,p,n" or "(r,p,n)"
std::optional<Key> parse_key(std::string text) {
  for (char& c : text)
    if (c == '(' || c == ')') c = ' ';
  Key k;
  char a = 0, b = 0;
  if (std::sscanf(text.c_str(), " %d %c %d %c %d", &k.r, &a, &k.p, &b, &k.n) != 5 || a != ',' || b != ',') return std::nullopt;
  return k;
}

struct Owned {
  char* s = nullptr;
  ~Owned() { reflekt_string_free(s); }
};

int report_error(reflekt_status s) {
  std::cerr << "error (" << reflekt_status_name(s) << "): " << reflekt_last_error() << '\n';
  return s == REFLEKT_ERR_PARAMETER || s == REFLEKT_ERR_USAGE ? kExitUsage : kExitFailed;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text << '\n';
  if (!out) {
    std::cerr << "error (io): cannot write " << path << '\n';
    return false;
  }
  return true;
}

// Prints a JSON document; exit 1 when a "verified" or "match" field is false.
int emit(reflekt_status s, char* text, const std::string& json_path) {
  Owned owned{text};
  if (s != REFLEKT_OK) return report_error(s);
  const auto doc = nlohmann::json::parse(text);
  std::cout << doc.dump(2) << '\n';
  if (!json_path.empty() && !write_file(json_path, doc.dump(2))) return kExitFailed;
  for (const char* field : {"verified", "match"})
    if (doc.contains(field) && !doc[field].get<bool>()) return kExitFailed;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflekt: exact computations in the complex reflection groups G(r,p,n)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  std::uint64_t budget = 1'000'000;
  std::string json_path;
  app.add_option("--cache-dir", cache_dir, "Group cache directory (default: $REFLEKT_CACHE)");
  app.add_option("--budget", budget, "Largest group order to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "Also write the JSON output to this file");

  std::string key_text;
  auto add_keyed = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("key", key_text, "r,p,n")->required();
    return sub;
  };
  auto* group = add_keyed("group", "Elements, classes and center");
  auto* chars = add_keyed("chars", "Irreducible labels and degrees");
  bool values = false;
  chars->add_flag("--values", values, "Include class values where available");
  auto* gim = add_keyed("gim", "A generalized involution model, verified");
  auto* gelfand = add_keyed("gelfand", "Gelfand checks of the signed involution models");
  auto* aut = add_keyed("aut", "Automorphism group order against the formula");

  auto* verify = app.add_subcommand("verify", "Run verification suites over a grid of keys");
  std::string grid;
  std::string checks;
  std::string suites;
  bool timing = false;
  verify->add_option("--grid", grid, "\"r<=R,p|r,n<=N\" and/or \"r,p,n\" entries separated by ';'");
  verify->add_option("--check", checks, "Comma separated check names to run");
  verify->add_option("--suites", suites, "Comma separated suites (group,chars,involutions,gelfand,gim,aut,classify)");
  verify->add_flag("--timing", timing, "Record per-check wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const char* env = std::getenv("REFLEKT_CACHE");
  const std::string dir = !cache_dir.empty() ? cache_dir : (env ? env : "");
  if (!dir.empty())
    if (auto s = reflekt_set_cache_dir(dir.c_str()); s != REFLEKT_OK) return report_error(s);

  if (verify->parsed()) {
    reflekt_report* report = nullptr;
    auto s = reflekt_report_run(grid.empty() ? nullptr : grid.c_str(), suites.empty() ? nullptr : suites.c_str(),
                                checks.empty() ? nullptr : checks.c_str(), budget, timing ? 1 : 0, &report);
    if (s != REFLEKT_OK) return report_error(s);
    std::unique_ptr<reflekt_report, decltype(&reflekt_report_free)> guard(report, reflekt_report_free);
    Owned table, json;
    reflekt_report_table(report, &table.s);
    std::cout << table.s;
    if (!json_path.empty()) {
      if ((s = reflekt_report_json(report, &json.s)) != REFLEKT_OK) return report_error(s);
      if (!write_file(json_path, json.s)) return kExitFailed;
    }
    std::size_t failed = 0;
    reflekt_report_counts(report, nullptr, &failed, nullptr);
    return failed == 0 ? kExitOk : kExitFailed;
  }

  const auto key = parse_key(key_text);
  if (!key) {
    std::cerr << "error (usage): expected a key r,p,n but got '" << key_text << "'\n";
    return kExitUsage;
  }
  char* out = nullptr;
  if (group->parsed()) {
    reflekt_group* g = nullptr;
    if (auto s = reflekt_group_open(key->r, key->p, key->n, budget, &g); s != REFLEKT_OK) return report_error(s);
    auto s = reflekt_group_json(g, &out);
    reflekt_group_close(g);
    return emit(s, out, json_path);
  }
  reflekt_status s = REFLEKT_ERR_USAGE;
  if (chars->parsed()) s = reflekt_chars_json(key->r, key->p, key->n, values ? 1 : 0, budget, &out);
  if (gim->parsed()) s = reflekt_gim_json(key->r, key->p, key->n, budget, &out);
  if (gelfand->parsed()) s = reflekt_gelfand_json(key->r, key->p, key->n, budget, &out);
  if (aut->parsed()) s = reflekt_aut_json(key->r, key->p, key->n, budget, &out);
  return emit(s, out, json_path);
}

#include "reflekt/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace reflekt {

namespace fs = std::filesystem;

GroupCache::GroupCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path GroupCache::path_for(const GroupKey& key) const {
  return dir_ / ("G_" + std::to_string(key.r) + "_" + std::to_string(key.p) + "_" + std::to_string(key.n) + ".json");
}

void GroupCache::store(const GroupData& group) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(ErrorCode::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  const fs::path path = path_for(group.key());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp.string());
    nlohmann::json j = group_to_json(group);
    j["version"] = kCacheVersion;
    out << j.dump();
    if (!out) fail(ErrorCode::Io, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) fail(ErrorCode::Io, "cannot move cache file into place at " + path.string() + ": " + ec.message());
}

std::shared_ptr<const GroupData> GroupCache::load(const GroupKey& key, std::uint64_t budget) {
  const fs::path path = path_for(key);
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("version", -1) != kCacheVersion) {
      warn("stale cache file " + path.string() + " (version " + j.value("version", nlohmann::json(-1)).dump() + "), regenerating");
      return nullptr;
    }
    const auto& k = j.at("key");
    if (GroupKey{k.at("r").get<int>(), k.at("p").get<int>(), k.at("n").get<int>()} != key)
      fail(ErrorCode::Consistency, "key mismatch");
    std::vector<std::vector<WreathElement>> classes;
    for (const auto& cls : j.at("classes")) {
      classes.emplace_back();
      for (const auto& e : cls) classes.back().push_back(WreathElement::from_json(key.r, e));
    }
    std::vector<WreathElement> center;
    for (const auto& e : j.at("center")) center.push_back(WreathElement::from_json(key.r, e));
    auto g = GroupData::from_classes(key, classes, center, budget);
    if (j.at("order").get<std::uint64_t>() != g->order()) fail(ErrorCode::Consistency, "order mismatch");
    return g;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Size) throw;
    warn("corrupt cache file " + path.string() + " (" + e.what() + "), regenerating");
  } catch (const std::exception& e) {
    warn("corrupt cache file " + path.string() + " (" + e.what() + "), regenerating");
  }
  return nullptr;
}

std::shared_ptr<const GroupData> GroupCache::load_or_build(const GroupKey& key, std::uint64_t budget) {
  if (auto g = load(key, budget)) return g;
  auto g = GroupData::build(key, budget);
  store(*g);
  return g;
}

void GroupCache::warn(std::string message) {
  std::cerr << "warning: " << message << '\n';
  std::lock_guard lock(mutex_);
  warnings_.push_back(std::move(message));
}

std::vector<std::string> GroupCache::warnings() const {
  std::lock_guard lock(mutex_);
  return warnings_;
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("REFLEKT_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

void install_cache(std::shared_ptr<GroupCache> cache) {
  set_group_loader([cache](const GroupKey& key, std::uint64_t budget) { return cache->load_or_build(key, budget); });
}

void uninstall_cache() { set_group_loader({}); }

bool same_group_data(const GroupData& a, const GroupData& b) {
  if (!(a.key() == b.key()) || a.elements() != b.elements() || a.center() != b.center()) return false;
  return a.classes() == b.classes();
}

bool cache_roundtrip(const GroupKey& key, const fs::path& dir) {
  GroupCache cache(dir);
  auto g = GroupData::build(key, kDefaultBudget);
  cache.store(*g);
  auto back = cache.load(key, kDefaultBudget);
  return back && same_group_data(*g, *back);
}

}  // namespace reflekt

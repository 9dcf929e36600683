#pragma once

// On-disk JSON cache of enumerated groups, one file per key.

#include "reflekt/group.hpp"

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace reflekt {

inline constexpr int kCacheVersion = 1;

class GroupCache {
public:
  explicit GroupCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const GroupKey& key) const;

  /// Throws ErrorCode::Io with the path on failure.
  void store(const GroupData& group) const;
  /// nullptr when the file is missing, corrupt or stale; the latter two
  /// are recorded as warnings.
  std::shared_ptr<const GroupData> load(const GroupKey& key, std::uint64_t budget);
  /// load, else build and store
  std::shared_ptr<const GroupData> load_or_build(const GroupKey& key, std::uint64_t budget);

  std::vector<std::string> warnings() const;

private:
  void warn(std::string message);

  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  std::vector<std::string> warnings_;
};

/// The --cache-dir value if given, else $REFLEKT_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Routes enumerate() through the cache until uninstall_cache() is called.
void install_cache(std::shared_ptr<GroupCache> cache);
void uninstall_cache();

/// Serializes G(key), reloads it and compares elements, classes and center.
bool cache_roundtrip(const GroupKey& key, const std::filesystem::path& dir);

bool same_group_data(const GroupData& a, const GroupData& b);

}  // namespace reflekt

#pragma once

// JSON documents for the CLI subcommands and the C API.

#include "reflekt/group.hpp"

#include <json.hpp>

namespace reflekt {

nlohmann::json group_view(const GroupKey& key, std::uint64_t budget);
/// Values are included for irreducibles whose restriction from G(r,1,n)
/// stays irreducible; split orbits report degrees only.
nlohmann::json chars_view(const GroupKey& key, bool values, std::uint64_t budget);
nlohmann::json gelfand_view(const GroupKey& key, std::uint64_t budget);
/// ErrorCode::Unsupported when no model is known or none exists.
nlohmann::json gim_view(const GroupKey& key, std::uint64_t budget);
nlohmann::json aut_view(const GroupKey& key, std::uint64_t budget);

}  // namespace reflekt

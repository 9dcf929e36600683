#include "reflekt/reflekt.h"

#include "reflekt/automorphism.hpp"
#include "reflekt/cache.hpp"
#include "reflekt/report.hpp"
#include "reflekt/views.hpp"

#include <cstring>
#include <sstream>

struct reflekt_group {
  std::shared_ptr<const reflekt::GroupData> data;
};

struct reflekt_report {
  reflekt::VerificationReport data;
};

namespace {

thread_local std::string g_last_error;

reflekt_status set_error(reflekt_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

template <class F>
reflekt_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return REFLEKT_OK;
  } catch (const reflekt::Error& e) {
    return set_error(static_cast<reflekt_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(REFLEKT_ERR_SIZE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(REFLEKT_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) reflekt::fail(reflekt::ErrorCode::Parameter, std::string(what) + " is null");
}

std::uint64_t budget_or_default(std::uint64_t budget) {
  return budget == 0 ? reflekt::kDefaultBudget : budget;
}

std::vector<std::string> split(const char* text) {
  std::vector<std::string> out;
  if (!text) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* reflekt_version(void) { return reflekt::kToolVersion; }

const char* reflekt_status_name(reflekt_status status) {
  if (status == REFLEKT_OK) return "ok";
  if (status == REFLEKT_ERR_INTERNAL) return "internal";
  if (status < REFLEKT_ERR_PARAMETER || status > REFLEKT_ERR_USAGE) return "unknown";
  return reflekt::error_code_name(static_cast<reflekt::ErrorCode>(status));
}

const char* reflekt_last_error(void) { return g_last_error.c_str(); }

void reflekt_string_free(char* s) { std::free(s); }

reflekt_status reflekt_set_cache_dir(const char* dir) {
  return guarded([&] {
    if (dir && *dir)
      reflekt::install_cache(std::make_shared<reflekt::GroupCache>(dir));
    else
      reflekt::uninstall_cache();
  });
}

reflekt_status reflekt_group_open(int r, int p, int n, uint64_t budget, reflekt_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto data = reflekt::enumerate({r, p, n}, budget_or_default(budget));
    *out = new reflekt_group{std::move(data)};
  });
}

void reflekt_group_close(reflekt_group* group) { delete group; }

reflekt_status reflekt_group_order(const reflekt_group* group, uint64_t* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = group->data->order();
  });
}

reflekt_status reflekt_group_class_count(const reflekt_group* group, size_t* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = group->data->classes().size();
  });
}

reflekt_status reflekt_group_center_order(const reflekt_group* group, size_t* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = group->data->center().size();
  });
}

reflekt_status reflekt_group_json(const reflekt_group* group, char** out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = dup(reflekt::group_to_json(*group->data).dump());
  });
}

reflekt_status reflekt_chars_json(int r, int p, int n, int with_values, uint64_t budget, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(reflekt::chars_view({r, p, n}, with_values != 0, budget_or_default(budget)).dump());
  });
}

reflekt_status reflekt_gelfand_json(int r, int p, int n, uint64_t budget, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(reflekt::gelfand_view({r, p, n}, budget_or_default(budget)).dump());
  });
}

reflekt_status reflekt_gim_json(int r, int p, int n, uint64_t budget, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(reflekt::gim_view({r, p, n}, budget_or_default(budget)).dump());
  });
}

reflekt_status reflekt_aut_json(int r, int p, int n, uint64_t budget, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(reflekt::aut_view({r, p, n}, budget_or_default(budget)).dump());
  });
}

reflekt_status reflekt_gim_exists(int r, int p, int n, int* exists, char** reason) {
  return guarded([&] {
    require(exists, "exists");
    const auto v = reflekt::gim_exists({r, p, n});
    *exists = v.exists ? 1 : 0;
    if (reason) *reason = dup(v.reason);
  });
}

reflekt_status reflekt_report_run(const char* grid, const char* suites, const char* checks, uint64_t budget, int timing,
                                  reflekt_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const auto keys = grid ? reflekt::parse_grid(grid) : reflekt::default_grid();
    auto names = split(suites);
    if (names.empty()) names = reflekt::all_suites();
    reflekt::SuiteOptions options;
    options.budget = budget_or_default(budget);
    options.timing = timing != 0;
    for (auto& c : split(checks)) options.only.insert(c);
    auto report = std::make_unique<reflekt_report>();
    report->data = reflekt::run_suite(keys, names, options);
    *out = report.release();
  });
}

reflekt_status reflekt_report_counts(const reflekt_report* report, size_t* pass, size_t* fail, size_t* skipped) {
  return guarded([&] {
    require(report, "report");
    if (pass) *pass = report->data.count(reflekt::CheckStatus::Pass);
    if (fail) *fail = report->data.count(reflekt::CheckStatus::Fail);
    if (skipped) *skipped = report->data.count(reflekt::CheckStatus::Skipped);
  });
}

reflekt_status reflekt_report_json(const reflekt_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(report->data.to_json().dump(2));
  });
}

reflekt_status reflekt_report_table(const reflekt_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(report->data.table());
  });
}

void reflekt_report_free(reflekt_report* report) { delete report; }

}  // extern "C"

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "virmod/check.hpp"
#include "virmod/cyclotomic.hpp"
#include "virmod/rational.hpp"

namespace virmod {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

// Machine-readable result of one CLI command.
struct Report {
  std::string command;
  std::optional<std::pair<int, int>> model;
  Json parameters = Json::object();
  std::vector<CheckResult> checks;
  Json data = Json::object();
  Json versions = Json::object();

  // Throws ConventionError on a duplicate check name.
  void add_check(CheckResult check);
  void add_checks(const std::vector<CheckResult>& more);
  bool all_pass() const { return virmod::all_pass(checks); }
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);
bool operator==(const Report& a, const Report& b);

// Human-readable rendering used by --format text.
std::string render_text(const Report& report);

Json rational_json(const Rational& value);
Json cyclotomic_json(const CycNumber& value);

// FNV-1a over the sorted key=value configuration.
std::string config_hash(const std::map<std::string, std::string>& config);

}  // namespace virmod

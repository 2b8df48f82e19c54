#include "virmod/report.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>

#include "virmod/errors.hpp"

namespace virmod {

void Report::add_check(CheckResult check) {
  for (const auto& c : checks)
    if (c.name == check.name) throw ConventionError("duplicate check name " + check.name + " in report");
  checks.push_back(std::move(check));
}

void Report::add_checks(const std::vector<CheckResult>& more) {
  for (const auto& c : more) add_check(c);
}

Json to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  if (report.model)
    j["model"] = {{"p", report.model->first}, {"q", report.model->second}};
  else
    j["model"] = nullptr;
  j["parameters"] = report.parameters;
  j["checks"] = Json::array();
  for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["pass"] = report.all_pass();
  j["data"] = report.data;
  j["versions"] = report.versions;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  if (!j.at("model").is_null()) r.model = std::make_pair(j["model"].at("p").get<int>(), j["model"].at("q").get<int>());
  r.parameters = j.at("parameters");
  for (const auto& c : j.at("checks"))
    r.add_check({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
  r.data = j.at("data");
  r.versions = j.at("versions");
  return r;
}

bool operator==(const Report& a, const Report& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].name != b.checks[i].name || a.checks[i].pass != b.checks[i].pass ||
        a.checks[i].detail != b.checks[i].detail)
      return false;
  return a.command == b.command && a.model == b.model && a.parameters == b.parameters && a.data == b.data &&
         a.versions == b.versions;
}

namespace {

void render_value(std::ostringstream& out, const std::string& key, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const bool scalar_array = value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) {
                              return v.is_primitive();
                            });
  if (value.is_object()) {
    out << pad << key << ":\n";
    for (auto it = value.begin(); it != value.end(); ++it) render_value(out, it.key(), it.value(), indent + 2);
  } else if (value.is_array() && !scalar_array) {
    out << pad << key << ":\n";
    std::size_t i = 0;
    for (const auto& v : value) render_value(out, "[" + std::to_string(i++) + "]", v, indent + 2);
  } else if (value.is_string()) {
    out << pad << key << ": " << value.get<std::string>() << "\n";
  } else {
    out << pad << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << report.command;
  if (report.model) out << " (" << report.model->first << "," << report.model->second << ")";
  out << "\n";
  for (auto it = report.parameters.begin(); it != report.parameters.end(); ++it)
    render_value(out, it.key(), it.value(), 2);
  for (const auto& c : report.checks) out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  for (auto it = report.data.begin(); it != report.data.end(); ++it) render_value(out, it.key(), it.value(), 2);
  out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json rational_json(const Rational& value) { return to_string(value); }

Json cyclotomic_json(const CycNumber& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(to_string(c));
  return {{"n", value.conductor()}, {"coeffs", coeffs}};
}

std::string config_hash(const std::map<std::string, std::string>& config) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& [k, v] : config) {
    for (char ch : k + "=" + v + ";") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace virmod

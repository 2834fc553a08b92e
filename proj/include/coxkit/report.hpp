#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxkit/catalog.hpp"

namespace coxkit {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skip };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Json detail = Json::object();  // failures carry a "witness" entry
};

struct SuiteResult {
  std::string name;
  std::string skip_reason;  // nonempty when the suite does not apply
  std::vector<Check> checks;
  CheckStatus status() const;
};

struct Report {
  std::string command;
  Json group = Json::object();
  Json invariants = Json::object();
  std::vector<SuiteResult> suites;
  Json posets = Json::array();
  Json isomorphisms = Json::array();
  double seconds = 0.0;

  bool passed() const;
  Json to_json(bool timing) const;
};

// Element scans run over every element up to this order, over class
// representatives above it.
constexpr int kFullScanOrder = 1200;
// Searches over reflection subsets for every element stop at this order.
constexpr int kGensetScanOrder = 240;

const std::vector<std::string>& suite_names();

Report cmd_info(const std::string& spec, int cap = kDefaultGroupCap);
// suite is "all" or one of suite_names().
Report cmd_verify(const std::string& spec, const std::string& suite, int cap = kDefaultGroupCap);
// Coxeter class index into the order-h regular classes; all when absent.
Report cmd_nc(const std::string& spec, std::optional<int> coxeter_class, int cap = kDefaultGroupCap);

std::string render_text(const Report& r, bool timing);
std::string render_csv(const Report& r, bool timing);

}  // namespace coxkit

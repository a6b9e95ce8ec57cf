// Check reports emitted by the verification suites, with JSON and text rendering.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qhyper {

enum class Status { pass, fail, inconclusive };
const char* status_name(Status s);
Status status_from_name(const std::string& s);

struct CheckReport {
  std::string suite;
  std::string id;
  int ell = 0;
  Status status = Status::pass;
  nlohmann::json details = nlohmann::json::object();
  /// Element or subspace basis exhibiting a failure; null otherwise.
  nlohmann::json witness = nullptr;
};

/// arith, algebra, frobenius, torus, modules, blocks, center, ideals.
const std::vector<std::string>& suite_order();
/// Position in suite_order(); unknown suites sort last.
int suite_rank(const std::string& suite);

/// Stable sort by suite order, then id.
void sort_reports(std::vector<CheckReport>& reports);

nlohmann::json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<CheckReport>& reports);
std::string render_json(const std::vector<CheckReport>& reports);
/// One row per report; details and witness are compact JSON.
std::string render_text(const std::vector<CheckReport>& reports);

/// 1 if any report failed, else 0.
int exit_status(const std::vector<CheckReport>& reports);

}  // namespace qhyper

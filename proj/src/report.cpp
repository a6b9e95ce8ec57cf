#include "qhyper/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhyper {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

Status status_from_name(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "inconclusive") return Status::inconclusive;
  throw std::invalid_argument("unknown status: " + s);
}

const std::vector<std::string>& suite_order() {
  static const std::vector<std::string> order{"arith", "algebra", "frobenius", "torus",
                                              "modules", "blocks", "center", "ideals"};
  return order;
}

int suite_rank(const std::string& suite) {
  const auto& o = suite_order();
  return static_cast<int>(std::find(o.begin(), o.end(), suite) - o.begin());
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    const int ra = suite_rank(a.suite), rb = suite_rank(b.suite);
    if (ra != rb) return ra < rb;
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.id < b.id;
  });
}

nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"suite", r.suite}, {"id", r.id},           {"ell", r.ell},
                        {"status", status_name(r.status)}, {"details", r.details}, {"witness", r.witness}};
}

CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.suite = j.at("suite").get<std::string>();
  r.id = j.at("id").get<std::string>();
  r.ell = j.at("ell").get<int>();
  r.status = status_from_name(j.at("status").get<std::string>());
  r.details = j.at("details");
  r.witness = j.value("witness", nlohmann::json(nullptr));
  return r;
}

nlohmann::json to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return a;
}

std::string render_json(const std::vector<CheckReport>& reports) { return to_json(reports).dump(2) + "\n"; }

std::string render_text(const std::vector<CheckReport>& reports) {
  std::size_t ws = 5, wi = 2;
  for (const auto& r : reports) {
    ws = std::max(ws, r.suite.size());
    wi = std::max(wi, r.id.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream os;
  os << pad("suite", ws) << pad("id", wi) << pad("ell", 3) << pad("status", 12) << "details\n";
  for (const auto& r : reports) {
    os << pad(r.suite, ws) << pad(r.id, wi) << pad(std::to_string(r.ell), 3) << pad(status_name(r.status), 12)
       << r.details.dump();
    if (!r.witness.is_null()) os << "  witness=" << r.witness.dump();
    os << "\n";
  }
  return os.str();
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::fail) return 1;
  return 0;
}

}  // namespace qhyper

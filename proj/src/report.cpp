#include "braceforge/report.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

namespace braceforge {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    case CheckStatus::error: return "error";
  }
  return "unknown";
}

bool ReportFile::all_passed() const {
  return count(CheckStatus::fail) == 0 && count(CheckStatus::error) == 0;
}

int ReportFile::count(CheckStatus status) const {
  int n = 0;
  for (const CheckRecord& c : checks) n += c.status == status ? 1 : 0;
  return n;
}

std::string report_to_json(const ReportFile& report) {
  nlohmann::json root;
  root["schema_version"] = report.schema_version;
  root["command"] = report.command;
  root["timing_ms"] = report.timing_ms;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::json rec;
    rec["id"] = c.id;
    rec["status"] = to_string(c.status);
    rec["detail"] = c.detail;
    if (!c.witness.empty()) rec["witness"] = c.witness;
    checks.push_back(rec);
  }
  root["checks"] = checks;
  return root.dump(2) + "\n";
}

void print_report_human(const ReportFile& report, std::ostream& out) {
  out << "command: " << report.command << "\n";
  std::size_t id_width = 0;
  for (const CheckRecord& c : report.checks)
    id_width = std::max(id_width, c.id.size());
  for (const CheckRecord& c : report.checks) {
    std::string status = "[";
    status += to_string(c.status);
    status += "]";
    out << status << std::string(17 - std::min<std::size_t>(16, status.size()),
                                 ' ')
        << c.id;
    if (!c.detail.empty())
      out << std::string(id_width - c.id.size() + 2, ' ') << c.detail;
    out << "\n";
    if (!c.witness.empty()) out << "    witness: " << c.witness << "\n";
  }
  out << report.checks.size() << " checks: "
      << report.count(CheckStatus::pass) << " pass, "
      << report.count(CheckStatus::fail) << " fail, "
      << report.count(CheckStatus::not_applicable) << " not-applicable, "
      << report.count(CheckStatus::error) << " error (" << report.timing_ms
      << " ms)\n";
}

}  // namespace braceforge

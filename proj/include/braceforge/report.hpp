// Uniform result reporting for the command-line surface: an ordered list of
// per-check records plus the echoed command and wall time. Machine form is
// JSON (sorted keys, deterministic apart from timing); human form is an
// aligned table. Every fail or error record carries a witness.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace braceforge {

enum class CheckStatus { pass, fail, not_applicable, error };

const char* to_string(CheckStatus status);

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string detail;   // free-form explanation or value
  std::string witness;  // required when status is fail or error
};

struct ReportFile {
  int schema_version = 1;
  std::string command;  // echo of the invoking arguments
  std::vector<CheckRecord> checks;
  std::int64_t timing_ms = 0;

  bool all_passed() const;  // no fail and no error records
  int count(CheckStatus status) const;
};

std::string report_to_json(const ReportFile& report);
void print_report_human(const ReportFile& report, std::ostream& out);

}  // namespace braceforge

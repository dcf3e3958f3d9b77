// On-disk brace format: JSON with explicit row-major tables, a format
// version, and optional provenance (construction family, parameters, and the
// distinguished subsets B x 1 and 1 x C). The writer is deterministic (sorted
// keys, two-space indent, trailing newline), so write -> read -> write is
// byte-identical.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braceforge/skew_brace.hpp"

namespace braceforge {

struct BraceProvenance {
  std::string family;  // construction name, e.g. "family1"
  // Parameter literals in writing order, e.g. {"p","3"}, {"P","01;11"}.
  std::vector<std::pair<std::string, std::string>> params;
  // Distinguished subsets by name ("B", "C"), as sorted element lists.
  std::vector<std::pair<std::string, std::vector<Elem>>> subsets;
};

struct BraceFile {
  int format_version = 1;
  std::string label;
  int order = 0;
  std::vector<Elem> dot_table;     // row-major, order * order entries
  std::vector<Elem> circle_table;  // row-major, order * order entries
  std::optional<BraceProvenance> provenance;
};

// Table snapshot of a validated brace; no provenance.
BraceFile to_brace_file(const SkewBrace& br);

// Rebuilds and fully revalidates the brace: derives identity and inverses
// from the dot table, then runs group and brace validation. Shape problems
// (no two-sided identity, missing inverse) and algebra failures surface as
// DomainError / BraceAxiomError with witnesses.
SkewBrace from_brace_file(const BraceFile& file);

// Serialization. read_brace_json throws ParseError on malformed JSON, wrong
// or missing fields, unknown format_version, bad table lengths, or
// out-of-range entries; it performs no algebraic validation.
std::string write_brace_json(const BraceFile& file);
BraceFile read_brace_json(const std::string& text);

// File convenience wrappers; unreadable/unwritable paths throw ParseError.
void save_brace_file(const BraceFile& file, const std::string& path);
BraceFile load_brace_file(const std::string& path);

}  // namespace braceforge

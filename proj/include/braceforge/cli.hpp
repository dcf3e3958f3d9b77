// Command-line surface. Subcommands:
//   validate <file>                      revalidate a brace file
//   analyze <file>                       predicates, derived sizes, subset facts
//   family1 --p --m --n --k --l [--out]  build a scalar-action brace
//   family2 --p --m --P --n --eps [--out] build a matrix-action brace
//   enum-quadruples --max N [--nontrivial|--all]
//   verify --suite lemmas|theorems|corpus [file]
//   search-P --m --p [--budget]
// Global --json switches reports to JSON. BRACEFORGE_CARRIER_CAP overrides
// the 4096 carrier cap. Exit codes: 0 success, 1 domain failure (with
// witness), 2 usage or parse failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braceforge {

// args excludes the program name. Reports go to out, error messages to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace braceforge

#include "braceforge/brace_io.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "braceforge/errors.hpp"
#include "braceforge/report.hpp"
#include "braceforge/theorem_harness.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace braceforge;

namespace {

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / stem).string();
}

// Minimal valid order-3 file text, assembled by the writer itself.
BraceFile z3_file() {
  return to_brace_file(trivial_from_group(make_cyclic(3)));
}

}  // namespace

TEST_CASE("brace files round-trip byte-identically") {
  std::vector<SkewBrace> subjects;
  subjects.push_back(trivial_from_group(make_cyclic(9)));
  subjects.push_back(almost_trivial_from_group(make_dihedral8()));
  subjects.push_back(corpus_entry("family2_m2_p3").brace);

  for (const SkewBrace& br : subjects) {
    CAPTURE(br.label);
    const BraceFile file = to_brace_file(br);
    const std::string first = write_brace_json(file);
    const BraceFile reread = read_brace_json(first);
    CHECK(write_brace_json(reread) == first);

    const SkewBrace rebuilt = from_brace_file(reread);
    CHECK(rebuilt.order == br.order);
    CHECK(rebuilt.dot.mul == br.dot.mul);
    CHECK(rebuilt.circle.mul == br.circle.mul);
    CHECK(is_trivial(rebuilt) == is_trivial(br));
  }

  SUBCASE("provenance survives the round trip") {
    BraceFile file = to_brace_file(corpus_entry("family2_m2_p3").brace);
    BraceProvenance prov;
    prov.family = "family2";
    prov.params = {{"P", "01;11"}, {"eps", "+-"}, {"m", "2"}, {"n", "2"},
                   {"p", "3"}};
    prov.subsets.emplace_back("B", corpus_entry("family2_m2_p3").b_set.elems());
    prov.subsets.emplace_back("C", corpus_entry("family2_m2_p3").c_set.elems());
    file.provenance = prov;

    const std::string first = write_brace_json(file);
    const BraceFile reread = read_brace_json(first);
    CHECK(write_brace_json(reread) == first);
    REQUIRE(reread.provenance.has_value());
    CHECK(reread.provenance->family == "family2");
    CHECK(reread.provenance->params.size() == 5);
    CHECK(reread.provenance->subsets.size() == 2);
    CHECK(reread.provenance->subsets[0].second ==
          corpus_entry("family2_m2_p3").b_set.elems());
  }
}

TEST_CASE("reading rejects malformed text and shapes") {
  const std::string good = write_brace_json(z3_file());

  CHECK_THROWS_WITH_AS(read_brace_json("{"), doctest::Contains("bad JSON"),
                       ParseError);
  CHECK_THROWS_WITH_AS(read_brace_json("[1,2]"),
                       doctest::Contains("top level"), ParseError);
  CHECK_THROWS_WITH_AS(read_brace_json("{\"order\": 3}"),
                       doctest::Contains("missing field"), ParseError);

  SUBCASE("format version is checked") {
    std::string text = good;
    const auto pos = text.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 19, "\"format_version\": 2");
    CHECK_THROWS_WITH_AS(read_brace_json(text),
                         doctest::Contains("unsupported format_version"),
                         ParseError);
  }

  SUBCASE("table length and range are checked") {
    BraceFile file = z3_file();
    file.dot_table.pop_back();
    CHECK_THROWS_WITH_AS(read_brace_json(write_brace_json(file)),
                         doctest::Contains("expected 9"), ParseError);
    file = z3_file();
    file.circle_table[4] = 7;
    CHECK_THROWS_WITH_AS(read_brace_json(write_brace_json(file)),
                         doctest::Contains("out of range"), ParseError);
  }

  SUBCASE("provenance shape is checked") {
    BraceFile file = z3_file();
    file.provenance = BraceProvenance{};
    file.provenance->family = "adhoc";
    file.provenance->subsets.emplace_back("B", std::vector<Elem>{0, 5});
    CHECK_THROWS_WITH_AS(read_brace_json(write_brace_json(file)),
                         doctest::Contains("subset B"), ParseError);
  }
}

TEST_CASE("rebuilding validates the algebra, not just the shape") {
  SUBCASE("a corrupted in-range entry is a domain failure") {
    BraceFile file = z3_file();
    file.dot_table[4] = 0;  // 1+1 'equals' 0: no longer a latin square
    CHECK_THROWS_AS(from_brace_file(file), DomainError);
  }

  SUBCASE("identities of the two tables must coincide") {
    BraceFile file = z3_file();
    // x o y = x + y + 1 is a group with identity 2, not 0.
    for (Elem x = 0; x < 3; ++x)
      for (Elem y = 0; y < 3; ++y)
        file.circle_table[static_cast<std::size_t>(x) * 3 + y] =
            static_cast<Elem>((x + y + 1) % 3);
    CHECK_THROWS_WITH_AS(from_brace_file(file), doctest::Contains("identity"),
                         DomainError);
  }

  SUBCASE("two valid groups failing the compatibility law are rejected") {
    // Push Z/9 along the non-additive involution swapping 1 and 2: a valid
    // group sharing identity 0 with Z/9, but not a brace over it.
    const GroupTable z9 = make_cyclic(9);
    BraceFile file;
    file.label = "bad_pair";
    file.order = 9;
    file.dot_table = z9.mul;
    const auto sigma = [](Elem x) {
      return x == 1 ? Elem{2} : x == 2 ? Elem{1} : x;
    };
    file.circle_table.resize(81);
    for (Elem a = 0; a < 9; ++a)
      for (Elem b = 0; b < 9; ++b)
        file.circle_table[static_cast<std::size_t>(a) * 9 + b] =
            sigma(z9.op(sigma(a), sigma(b)));
    CHECK_THROWS_AS(from_brace_file(file), BraceAxiomError);
  }
}

TEST_CASE("file save and load") {
  const std::string path = temp_path("braceforge_io_test.json");
  const BraceFile file = to_brace_file(almost_trivial_from_group(make_symmetric3()));
  save_brace_file(file, path);
  const BraceFile loaded = load_brace_file(path);
  CHECK(write_brace_json(loaded) == write_brace_json(file));
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(load_brace_file(temp_path("braceforge_missing.json")),
                       doctest::Contains("cannot open"), ParseError);
  CHECK_THROWS_WITH_AS(save_brace_file(file, "/nonexistent_dir/x.json"),
                       doctest::Contains("cannot open"), ParseError);
}

TEST_CASE("report rendering") {
  ReportFile rep;
  rep.command = "braceforge verify --suite corpus";
  rep.timing_ms = 12;
  rep.checks.push_back({"alpha", CheckStatus::pass, "fine", ""});
  rep.checks.push_back({"beta", CheckStatus::not_applicable,
                        "hypothesis failed: B trivial sub-brace", "b=2"});
  rep.checks.push_back({"gamma", CheckStatus::fail, "broken", "a=1, b=2"});

  CHECK(to_string(CheckStatus::pass) == std::string("pass"));
  CHECK(to_string(CheckStatus::not_applicable) == std::string("not-applicable"));
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.count(CheckStatus::pass) == 1);
  CHECK(rep.count(CheckStatus::fail) == 1);

  const std::string json_text = report_to_json(rep);
  CHECK(json_text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json_text.find("\"status\": \"not-applicable\"") != std::string::npos);
  CHECK(json_text.find("\"witness\": \"a=1, b=2\"") != std::string::npos);
  // Empty witnesses are omitted entirely.
  CHECK(json_text.find("\"witness\": \"\"") == std::string::npos);

  std::ostringstream human;
  print_report_human(rep, human);
  const std::string text = human.str();
  CHECK(text.find("command: braceforge verify --suite corpus") !=
        std::string::npos);
  CHECK(text.find("[pass]") != std::string::npos);
  CHECK(text.find("[fail]") != std::string::npos);
  CHECK(text.find("witness: a=1, b=2") != std::string::npos);
  CHECK(text.find("3 checks: 1 pass, 1 fail, 1 not-applicable, 0 error") !=
        std::string::npos);

  ReportFile clean;
  clean.checks.push_back({"only", CheckStatus::pass, "", ""});
  CHECK(clean.all_passed());
}

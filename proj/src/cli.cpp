#include "braceforge/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "braceforge/brace_io.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/families.hpp"
#include "braceforge/report.hpp"
#include "braceforge/theorem_harness.hpp"

namespace braceforge {

namespace {

std::string join_command(const std::vector<std::string>& args) {
  std::string joined = "braceforge";
  for (const std::string& a : args) {
    joined += ' ';
    joined += a;
  }
  return joined;
}

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Strict P spec: exactly m rows of m characters from {0,1}, ';'-separated.
MatrixModM parse_p_spec(const std::string& spec, int m) {
  std::vector<std::string> rows;
  std::string row;
  for (char ch : spec) {
    if (ch == ';') {
      rows.push_back(row);
      row.clear();
    } else {
      row += ch;
    }
  }
  rows.push_back(row);
  if (static_cast<int>(rows.size()) != m)
    throw ParseError("P spec has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(m));
  std::vector<std::vector<std::int64_t>> entries;
  for (const std::string& r : rows) {
    if (static_cast<int>(r.size()) != m)
      throw ParseError("P spec row \"" + r + "\" has " +
                       std::to_string(r.size()) + " columns, expected " +
                       std::to_string(m));
    std::vector<std::int64_t> out_row;
    for (char ch : r) {
      if (ch != '0' && ch != '1')
        throw ParseError(std::string("P spec character '") + ch +
                         "' is not 0 or 1");
      out_row.push_back(ch - '0');
    }
    entries.push_back(std::move(out_row));
  }
  return mat_from_rows(entries, 2);
}

std::string p_spec_of(const MatrixModM& P) {
  std::string spec;
  for (int r = 0; r < P.rows; ++r) {
    if (r) spec += ';';
    for (int c = 0; c < P.cols; ++c) spec += static_cast<char>('0' + P.at(r, c));
  }
  return spec;
}

std::vector<int> parse_eps(const std::string& spec) {
  std::vector<int> eps;
  for (char ch : spec) {
    if (ch == '+')
      eps.push_back(1);
    else if (ch == '-')
      eps.push_back(-1);
    else
      throw ParseError(std::string("eps character '") + ch +
                       "' is not + or -");
  }
  return eps;
}

ElemSet set_from(const std::vector<Elem>& elems, int universe) {
  return ElemSet::from_elems(universe, elems);
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

CheckRecord info(std::string id, std::string detail) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.detail = std::move(detail);
  return rec;
}

// A red alert (applicable hypotheses, false conclusion) is the only failing
// state; inapplicable reports stay visible with the first failed hypothesis.
CheckRecord record_from(const std::string& prefix, const TheoremReport& r) {
  CheckRecord rec;
  rec.id = prefix.empty() ? r.id : prefix + "/" + r.id;
  if (r.red_alert()) {
    rec.status = CheckStatus::fail;
    rec.detail = "hypotheses hold but the conclusion fails";
    rec.witness =
        r.conclusion_witness.empty() ? "conclusion scan" : r.conclusion_witness;
    return rec;
  }
  if (r.applicable) {
    rec.status = CheckStatus::pass;
    rec.detail = "applicable; conclusion holds";
    return rec;
  }
  rec.status = CheckStatus::not_applicable;
  for (const HypothesisCheck& h : r.hypotheses)
    if (!h.holds) {
      rec.detail = "hypothesis failed: " + h.name;
      rec.witness = h.witness;
      break;
    }
  rec.detail += r.conclusion_holds ? "; conclusion holds anyway"
                                   : "; conclusion false as well";
  return rec;
}

int emit_report(ReportFile rep, const Stopwatch& watch, bool as_json,
                std::ostream& out) {
  rep.timing_ms = watch.elapsed_ms();
  if (as_json)
    out << report_to_json(rep);
  else
    print_report_human(rep, out);
  return rep.all_passed() ? 0 : 1;
}

int cmd_validate(const std::string& path, ReportFile rep,
                 const Stopwatch& watch, bool as_json, std::ostream& out) {
  const BraceFile file = load_brace_file(path);  // ParseError exits 2 upstream
  rep.checks.push_back(info("file_parse", "order " + std::to_string(file.order) +
                                              ", label \"" + file.label + "\""));
  try {
    const SkewBrace br = from_brace_file(file);
    rep.checks.push_back(
        info("brace_validation", "both tables are groups sharing an identity; "
                                 "the compatibility law holds"));
    (void)br;
  } catch (const Error& e) {
    CheckRecord rec;
    rec.id = "brace_validation";
    rec.status = CheckStatus::fail;
    rec.detail = "table validation failed";
    rec.witness = e.what();
    rep.checks.push_back(rec);
  }
  return emit_report(std::move(rep), watch, as_json, out);
}

int cmd_analyze(const std::string& path, ReportFile rep, const Stopwatch& watch,
                bool as_json, std::ostream& out) {
  const BraceFile file = load_brace_file(path);
  SkewBrace br = [&] {
    try {
      return from_brace_file(file);
    } catch (const Error& e) {
      throw DomainError(std::string("file does not hold a valid brace: ") +
                        e.what());
    }
  }();

  std::vector<std::pair<std::string, ElemSet>> subsets;
  if (file.provenance)
    for (const auto& [name, elems] : file.provenance->subsets)
      subsets.emplace_back(name, set_from(elems, br.order));

  const AnalysisReport an = analyze(br, subsets);
  rep.checks.push_back(info("label", an.label));
  rep.checks.push_back(info("order", std::to_string(an.order)));
  rep.checks.push_back(info("is_trivial", bool_word(an.trivial)));
  rep.checks.push_back(info("is_almost_trivial", bool_word(an.almost_trivial)));
  rep.checks.push_back(info("is_two_sided", bool_word(an.two_sided)));
  rep.checks.push_back(info("is_meta_trivial", bool_word(an.meta_trivial)));
  rep.checks.push_back(
      info("is_left_nilpotent3", bool_word(an.left_nilpotent3)));
  rep.checks.push_back(
      info("is_right_nilpotent3", bool_word(an.right_nilpotent3)));
  rep.checks.push_back(info("derived_size", std::to_string(an.derived.size())));
  rep.checks.push_back(info("left3_size", std::to_string(an.left3.size())));
  rep.checks.push_back(info("right3_size", std::to_string(an.right3.size())));
  for (const SubsetFact& fact : an.ideal_facts) {
    rep.checks.push_back(
        info(fact.name + "/sub_skew_brace", bool_word(fact.status.sub_skew_brace)));
    rep.checks.push_back(info(fact.name + "/ideal", bool_word(fact.status.ideal)));
    rep.checks.push_back(
        info(fact.name + "/left_ideal", bool_word(fact.status.left_ideal)));
    rep.checks.push_back(
        info(fact.name + "/right_ideal", bool_word(fact.status.right_ideal)));
    rep.checks.push_back(info(fact.name + "/left_ideal_op",
                              bool_word(fact.status.left_ideal_op)));
    rep.checks.push_back(info(fact.name + "/right_ideal_op",
                              bool_word(fact.status.right_ideal_op)));
  }
  return emit_report(std::move(rep), watch, as_json, out);
}

void append_predicates(const SkewBrace& br, ReportFile& rep) {
  rep.checks.push_back(info("order", std::to_string(br.order)));
  rep.checks.push_back(info("is_trivial", bool_word(is_trivial(br))));
  rep.checks.push_back(
      info("is_almost_trivial", bool_word(is_almost_trivial(br))));
  rep.checks.push_back(info("is_two_sided", bool_word(is_two_sided(br))));
  rep.checks.push_back(info("is_meta_trivial", bool_word(is_meta_trivial(br))));
}

BraceProvenance provenance_for(const std::string& family,
                               std::vector<std::pair<std::string, std::string>>
                                   params,
                               const BicrossedData& data) {
  BraceProvenance prov;
  prov.family = family;
  prov.params = std::move(params);
  prov.subsets.emplace_back("B", b_block_set(data).elems());
  prov.subsets.emplace_back("C", c_block_set(data).elems());
  return prov;
}

int finish_family(const BicrossedData& data, const std::string& family,
                  std::vector<std::pair<std::string, std::string>> params,
                  const std::string& out_path, ReportFile rep,
                  const Stopwatch& watch, bool as_json, std::ostream& out) {
  if (!data.compat_certified) {
    const BicrossedCertification cert = certify_bicrossed(data);
    CheckRecord rec;
    rec.id = "certification";
    rec.status = CheckStatus::fail;
    rec.detail = "action data failed certification";
    rec.witness = cert.message.empty() ? "compatibility scan" : cert.message;
    rep.checks.push_back(rec);
    return emit_report(std::move(rep), watch, as_json, out);
  }
  rep.checks.push_back(info("certification", "actions certified"));

  const SkewBrace br = build_bicrossed_brace(data);
  append_predicates(br, rep);

  BraceFile file = to_brace_file(br);
  file.provenance = provenance_for(family, std::move(params), data);
  if (!out_path.empty()) {
    save_brace_file(file, out_path);
    rep.checks.push_back(info("written", out_path));
  }
  return emit_report(std::move(rep), watch, as_json, out);
}

struct VerifyBundle {
  std::string prefix;
  std::vector<TheoremReport> reports;
};

void run_theorem_set(const SkewBrace& br, const ElemSet& b, const ElemSet& c,
                     const std::string& prefix,
                     std::vector<VerifyBundle>& bundles) {
  VerifyBundle bundle;
  bundle.prefix = prefix;
  for (ProductTheorem which :
       {ProductTheorem::left, ProductTheorem::right, ProductTheorem::ito})
    bundle.reports.push_back(verify_theorem(br, which, b, c));
  for (auto& r : verify_lemma_product(br, b, c))
    bundle.reports.push_back(std::move(r));
  for (auto& r : verify_star_subgroup_facts(br, b, c))
    bundle.reports.push_back(std::move(r));
  for (auto& r : verify_prop_gen(br, b, c, b, c))
    bundle.reports.push_back(std::move(r));
  for (auto& r : verify_group_ito(br.dot, b, c))
    bundle.reports.push_back(std::move(r));
  bundles.push_back(std::move(bundle));
}

void run_lemma_set(const SkewBrace& br, int cap, const std::string& prefix,
                   std::vector<VerifyBundle>& bundles) {
  VerifyBundle bundle;
  bundle.prefix = prefix;
  if (br.order > cap) {
    TheoremReport skipped;
    skipped.id = "identity_lemma_suite";
    HypothesisCheck h;
    h.name = "order within triple-scan cap " + std::to_string(cap);
    h.holds = false;
    h.witness = "order " + std::to_string(br.order);
    skipped.hypotheses.push_back(h);
    skipped.applicable = false;
    skipped.conclusion_holds = true;  // unevaluated; nothing failed
    bundle.reports.push_back(std::move(skipped));
  } else {
    bundle.reports = verify_lemma_suite(br, cap);
  }
  bundles.push_back(std::move(bundle));
}

int cmd_verify(const std::string& suite, const std::string& path,
               ReportFile rep, const Stopwatch& watch, bool as_json,
               std::ostream& out) {
  constexpr int kTripleCap = 200;
  std::vector<VerifyBundle> bundles;

  if (!path.empty() && suite == "corpus")
    throw ParseError("the corpus suite runs builtin data and takes no file");

  if (!path.empty()) {
    const BraceFile file = load_brace_file(path);
    const SkewBrace br = from_brace_file(file);
    if (suite == "lemmas") {
      run_lemma_set(br, kTripleCap, file.label, bundles);
    } else {  // theorems
      if (!file.provenance)
        throw DomainError(
            "theorem suite needs distinguished subsets B and C in provenance");
      ElemSet b(br.order), c(br.order);
      bool have_b = false, have_c = false;
      for (const auto& [name, elems] : file.provenance->subsets) {
        if (name == "B") b = set_from(elems, br.order), have_b = true;
        if (name == "C") c = set_from(elems, br.order), have_c = true;
      }
      if (!have_b || !have_c)
        throw DomainError(
            "theorem suite needs both subsets B and C in provenance");
      run_theorem_set(br, b, c, file.label, bundles);
    }
  } else {
    for (const CorpusEntry& entry : standard_corpus()) {
      if (suite == "lemmas" || suite == "corpus")
        run_lemma_set(entry.brace, kTripleCap, entry.name, bundles);
      if (suite == "theorems" || suite == "corpus")
        run_theorem_set(entry.brace, entry.b_set, entry.c_set, entry.name,
                        bundles);
    }
  }

  for (const VerifyBundle& bundle : bundles)
    for (const TheoremReport& r : bundle.reports)
      rep.checks.push_back(record_from(bundle.prefix, r));
  return emit_report(std::move(rep), watch, as_json, out);
}

int cmd_enum_quadruples(int max, bool require_nontrivial, bool as_json,
                        std::ostream& out) {
  const std::vector<std::array<int, 4>> quads =
      enumerate_quadruples(max, require_nontrivial);
  if (as_json) {
    std::ostringstream body;
    body << "{\n  \"count\": " << quads.size() << ",\n  \"quadruples\": [";
    for (std::size_t i = 0; i < quads.size(); ++i) {
      body << (i ? ", " : "") << "[" << quads[i][0] << ", " << quads[i][1]
           << ", " << quads[i][2] << ", " << quads[i][3] << "]";
    }
    body << "]\n}\n";
    out << body.str();
  } else {
    out << quads.size() << "\n";
    for (const auto& q : quads)
      out << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
  }
  return 0;
}

int cmd_search_p(int m, std::int64_t p, int budget, bool as_json,
                 std::ostream& out) {
  const std::vector<Gl2SearchHit> hits = search_gl2_order(m, p, budget);
  if (as_json) {
    std::ostringstream body;
    body << "{\n  \"matrices\": [";
    for (std::size_t i = 0; i < hits.size(); ++i) {
      const auto v = cri_hypothesis(hits[i].matrix, p);
      body << (i ? ", " : "") << "{\"rows\": \"" << p_spec_of(hits[i].matrix)
           << "\", \"order\": " << p << ", \"v\": ";
      if (v)
        body << *v;
      else
        body << "null";
      body << "}";
    }
    body << "],\n  \"count\": " << hits.size() << "\n}\n";
    out << body.str();
  } else {
    for (const Gl2SearchHit& hit : hits) {
      const auto v = cri_hypothesis(hit.matrix, p);
      out << p_spec_of(hit.matrix) << "  order=" << p << "  v=";
      if (v)
        out << *v;
      else
        out << "none";
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite skew brace workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit reports as JSON");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "revalidate a brace file");
  validate->add_option("file", validate_path, "brace file")->required();

  std::string analyze_path;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "predicates and subset facts of a brace file");
  analyze_cmd->add_option("file", analyze_path, "brace file")->required();

  std::int64_t f1_p = 3;
  int f1_m = 1, f1_n = 1, f1_k = 1, f1_l = 1;
  std::string f1_out;
  CLI::App* family1 =
      app.add_subcommand("family1", "build a scalar-action brace on Z/p^m x Z/p^n");
  family1->add_option("--p", f1_p, "odd prime")->required();
  family1->add_option("--m", f1_m)->required();
  family1->add_option("--n", f1_n)->required();
  family1->add_option("--k", f1_k)->required();
  family1->add_option("--l", f1_l)->required();
  family1->add_option("--out", f1_out, "write the brace file here");

  std::int64_t f2_p = 3;
  int f2_m = 2, f2_n = 2;
  std::string f2_spec, f2_eps = "+-", f2_out;
  CLI::App* family2 = app.add_subcommand(
      "family2", "build a matrix-action brace on (Z/2)^m x (Z/p)^n");
  family2->add_option("--p", f2_p, "odd prime")->required();
  family2->add_option("--m", f2_m)->required();
  family2->add_option("--P", f2_spec, "m binary rows, ';'-separated, e.g. 01;11")
      ->required();
  family2->add_option("--n", f2_n, "number of C coordinates (default 2)");
  family2->add_option("--eps", f2_eps, "signs, e.g. +- (default)");
  family2->add_option("--out", f2_out, "write the brace file here");

  int eq_max = 1;
  bool eq_nontrivial = false, eq_all = false;
  CLI::App* enum_q = app.add_subcommand(
      "enum-quadruples", "count and list valid (m,n,k,l) up to a bound");
  enum_q->add_option("--max", eq_max)->required()->check(CLI::PositiveNumber);
  CLI::Option* opt_nontrivial = enum_q->add_flag(
      "--nontrivial", eq_nontrivial, "keep only nontrivial actions (default)");
  CLI::Option* opt_all =
      enum_q->add_flag("--all", eq_all, "keep every valid quadruple");
  opt_nontrivial->excludes(opt_all);

  std::string verify_suite, verify_path;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_suite)
      ->required()
      ->check(CLI::IsMember({"lemmas", "theorems", "corpus"}));
  verify->add_option("file", verify_path, "brace file (default: builtin corpus)");

  int sp_m = 2, sp_budget = 5;
  std::int64_t sp_p = 3;
  CLI::App* search_p =
      app.add_subcommand("search-P", "matrices of order p in GL_m(Z/2)");
  search_p->add_option("--m", sp_m)->required();
  search_p->add_option("--p", sp_p)->required();
  search_p->add_option("--budget", sp_budget, "max matrices to report")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("braceforge");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Stopwatch watch;
  ReportFile rep;
  rep.command = join_command(args);

  try {
    if (*validate)
      return cmd_validate(validate_path, std::move(rep), watch, as_json, out);
    if (*analyze_cmd)
      return cmd_analyze(analyze_path, std::move(rep), watch, as_json, out);
    if (*family1) {
      const Family1Params params{f1_p, f1_m, f1_n, f1_k, f1_l};
      return finish_family(
          family1_data(params), "family1",
          {{"k", std::to_string(f1_k)},
           {"l", std::to_string(f1_l)},
           {"m", std::to_string(f1_m)},
           {"n", std::to_string(f1_n)},
           {"p", std::to_string(f1_p)}},
          f1_out, std::move(rep), watch, as_json, out);
    }
    if (*family2) {
      Family2Params params;
      params.p = f2_p;
      params.m = f2_m;
      params.n = f2_n;
      params.P = parse_p_spec(f2_spec, f2_m);
      params.eps = parse_eps(f2_eps);
      return finish_family(family2_data(params), "family2",
                           {{"P", f2_spec},
                            {"eps", f2_eps},
                            {"m", std::to_string(f2_m)},
                            {"n", std::to_string(f2_n)},
                            {"p", std::to_string(f2_p)}},
                           f2_out, std::move(rep), watch, as_json, out);
    }
    if (*enum_q)
      return cmd_enum_quadruples(eq_max, !eq_all, as_json, out);
    if (*verify)
      return cmd_verify(verify_suite, verify_path, std::move(rep), watch,
                        as_json, out);
    if (*search_p)
      return cmd_search_p(sp_m, sp_p, sp_budget, as_json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace braceforge

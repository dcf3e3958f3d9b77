#include "braceforge/theorem_harness.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "braceforge/bicrossed.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/families.hpp"

namespace braceforge {

namespace {

std::string kv(const char* name, Elem value) {
  return std::string(name) + "=" + std::to_string(value);
}

void require_universe(int order, std::initializer_list<const ElemSet*> sets) {
  for (const ElemSet* s : sets)
    if (s->universe() != order)
      throw ShapeError("subset universe " + std::to_string(s->universe()) +
                       " does not match the carrier order " +
                       std::to_string(order));
}

// Truth value plus the first violation found; building block for both
// hypothesis lines and conclusions.
struct Scan {
  bool holds = true;
  std::string witness;
};

Scan subgroup_scan(const GroupTable& g, const ElemSet& s, const char* opname) {
  if (!s.contains(g.identity)) return {false, "identity missing from the set"};
  const std::vector<Elem> elems = s.elems();
  for (Elem x : elems) {
    const Elem xi = g.inverse(x);
    if (!s.contains(xi))
      return {false, kv("x", x) + ": " + std::string(opname) + "-inverse " +
                         std::to_string(xi) + " escapes"};
    for (Elem y : elems) {
      const Elem z = g.op(x, y);
      if (!s.contains(z))
        return {false, kv("x", x) + ", " + kv("y", y) + ": " + opname +
                           "-product " + std::to_string(z) + " escapes"};
    }
  }
  return {};
}

Scan stars_vanish_scan(const SkewBrace& br, const std::vector<Elem>& xs,
                       const std::vector<Elem>& ys, const char* xn,
                       const char* yn) {
  for (Elem x : xs)
    for (Elem y : ys) {
      const Elem v = star(br, x, y);
      if (v != br.identity())
        return {false, kv(xn, x) + ", " + kv(yn, y) + ": star = " +
                           std::to_string(v) + " != identity"};
    }
  return {};
}

Scan normal_scan(const GroupTable& g, const ElemSet& s) {
  Scan sub = subgroup_scan(g, s, "group");
  if (!sub.holds) return sub;
  const std::vector<Elem> elems = s.elems();
  for (Elem a = 0; a < g.order; ++a)
    for (Elem x : elems) {
      const Elem c = g.conj(a, x);
      if (!s.contains(c))
        return {false, kv("a", a) + ", " + kv("x", x) + ": conjugate " +
                           std::to_string(c) + " escapes"};
    }
  return {};
}

Scan covering_scan(const GroupTable& g, const ElemSet& b, const ElemSet& c) {
  const ElemSet prod = product_set(g, b, c);
  for (Elem e = 0; e < g.order; ++e)
    if (!prod.contains(e))
      return {false, "element " + std::to_string(e) + " is not a product"};
  return {};
}

Scan commutes_scan(const GroupTable& g, const ElemSet& s) {
  const std::vector<Elem> elems = s.elems();
  for (Elem x : elems)
    for (Elem y : elems)
      if (g.op(x, y) != g.op(y, x))
        return {false, kv("x", x) + ", " + kv("y", y) + ": xy != yx"};
  return {};
}

HypothesisCheck hypothesis(std::string name, Scan scan) {
  return HypothesisCheck{std::move(name), scan.holds, std::move(scan.witness)};
}

HypothesisCheck check_sub_brace(const SkewBrace& br, const ElemSet& s,
                                const char* who) {
  Scan scan = subgroup_scan(br.dot, s, "dot");
  if (scan.holds) scan = subgroup_scan(br.circle, s, "circle");
  return hypothesis(std::string(who) + " sub-brace", std::move(scan));
}

HypothesisCheck check_trivial_sub_brace(const SkewBrace& br, const ElemSet& s,
                                        const char* who) {
  Scan scan = subgroup_scan(br.dot, s, "dot");
  if (scan.holds) scan = subgroup_scan(br.circle, s, "circle");
  if (scan.holds) scan = stars_vanish_scan(br, s.elems(), s.elems(), "x", "y");
  return hypothesis(std::string(who) + " trivial sub-brace", std::move(scan));
}

enum class IdealKind { left, right, left_op, right_op };

// The membership laws characterizing the four ideal notions, valid once the
// set is a dot-subgroup (checked first).
HypothesisCheck check_ideal(const SkewBrace& br, const ElemSet& s,
                            IdealKind kind, const char* who) {
  static constexpr const char* kSuffix[] = {
      " left ideal in A", " right ideal in A", " left ideal in A^op",
      " right ideal in A^op"};
  const std::string name =
      std::string(who) + kSuffix[static_cast<int>(kind)];
  Scan scan = subgroup_scan(br.dot, s, "dot");
  if (!scan.holds) return hypothesis(name, std::move(scan));
  const std::vector<Elem> elems = s.elems();
  for (Elem a = 0; a < br.order; ++a)
    for (Elem x : elems) {
      Elem v = -1;
      const char* law = "";
      switch (kind) {
        case IdealKind::left:
          v = br.lam(a, x);
          law = "lambda_a(x)";
          break;
        case IdealKind::right:
          v = star(br, x, a);
          law = "x*a";
          break;
        case IdealKind::left_op:
          v = br.lam_op(a, x);
          law = "lambda_op_a(x)";
          break;
        case IdealKind::right_op:
          v = br.dot_op(br.dot_inv(a), br.lam_op(x, a));
          law = "a^-1 . lambda_op_x(a)";
          break;
      }
      if (!s.contains(v))
        return hypothesis(name, {false, kv("a", a) + ", " + kv("x", x) + ": " +
                                            law + " = " + std::to_string(v) +
                                            " escapes"});
    }
  return hypothesis(name, {});
}

TheoremReport make_report(std::string id, std::vector<HypothesisCheck> hyps,
                          Scan conclusion) {
  TheoremReport r;
  r.id = std::move(id);
  r.applicable = std::all_of(hyps.begin(), hyps.end(),
                             [](const HypothesisCheck& h) { return h.holds; });
  r.hypotheses = std::move(hyps);
  r.conclusion_holds = conclusion.holds;
  r.conclusion_witness = std::move(conclusion.witness);
  return r;
}

std::string triple(Elem a, Elem b, Elem c) {
  return kv("a", a) + ", " + kv("b", b) + ", " + kv("c", c);
}

}  // namespace

std::vector<TheoremReport> verify_lemma_suite(const SkewBrace& br,
                                              int triple_cap) {
  if (triple_cap < 1)
    throw ParameterError("lemma suite: triple_cap must be positive, got " +
                         std::to_string(triple_cap));
  if (br.order > triple_cap)
    throw CapacityError("lemma suite: order " + std::to_string(br.order) +
                        " exceeds the triple-scan cap " +
                        std::to_string(triple_cap));
  const Elem n = br.order;
  std::vector<TheoremReport> out;

  {
    Scan scan;
    for (Elem a = 0; a < n && scan.holds; ++a)
      for (Elem b = 0; b < n && scan.holds; ++b)
        for (Elem c = 0; c < n; ++c) {
          const Elem sab = star(br, a, b);
          const Elem sac = star(br, a, c);
          const Elem lhs1 = star(br, a, br.dot_op(b, c));
          const Elem rhs1 = br.dot_op(
              br.dot_op(br.dot_op(sab, b), sac), br.dot_inv(b));
          if (lhs1 != rhs1) {
            scan = {false, "a*(b.c): " + triple(a, b, c)};
            break;
          }
          const Elem sbc = star(br, b, c);
          const Elem lhs2 = star(br, br.circle_op(a, b), c);
          const Elem rhs2 =
              br.dot_op(br.dot_op(star(br, a, sbc), sbc), sac);
          if (lhs2 != rhs2) {
            scan = {false, "(a o b)*c: " + triple(a, b, c)};
            break;
          }
        }
    out.push_back(make_report("star_product_rules", {}, std::move(scan)));
  }

  {
    Scan scan;
    for (Elem a = 0; a < n && scan.holds; ++a)
      for (Elem b = 0; b < n && scan.holds; ++b)
        for (Elem c = 0; c < n; ++c) {
          const Elem lhs =
              br.dot_op(br.dot_op(a, star(br, b, c)), br.dot_inv(a));
          const Elem rhs = br.dot_op(br.dot_inv(star(br, b, a)),
                                     star(br, b, br.dot_op(a, c)));
          if (lhs != rhs) {
            scan = {false, triple(a, b, c)};
            break;
          }
        }
    out.push_back(make_report("star_conjugation_rule", {}, std::move(scan)));
  }

  {
    Scan scan;
    for (Elem a = 0; a < n && scan.holds; ++a)
      for (Elem b = 0; b < n && scan.holds; ++b)
        for (Elem c = 0; c < n; ++c) {
          const Elem lhs = br.lam(a, star(br, b, c));
          const Elem twisted =
              br.circle_op(br.circle_op(a, b), br.circle_inv(a));
          const Elem rhs = star(br, twisted, br.lam(a, c));
          if (lhs != rhs) {
            scan = {false, triple(a, b, c)};
            break;
          }
        }
    out.push_back(make_report("lambda_twist_rule", {}, std::move(scan)));
  }

  {
    Scan law;        // the two-sided defining identity, as the hypothesis
    Scan expansion;  // its star-form consequence, as the conclusion
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (law.holds) {
            const Elem lhs = br.circle_op(br.dot_op(a, b), c);
            const Elem rhs = br.dot_op(
                br.dot_op(br.circle_op(a, c), br.dot_inv(c)),
                br.circle_op(b, c));
            if (lhs != rhs) law = {false, triple(a, b, c)};
          }
          if (expansion.holds) {
            const Elem lhs = star(br, br.dot_op(a, b), c);
            const Elem rhs = br.dot_op(
                br.dot_op(br.dot_op(br.dot_inv(b), star(br, a, c)), b),
                star(br, b, c));
            if (lhs != rhs) expansion = {false, triple(a, b, c)};
          }
          if (!law.holds && !expansion.holds) break;
        }
    out.push_back(make_report(
        "two_sided_star_rule",
        {hypothesis("brace is two-sided", std::move(law))},
        std::move(expansion)));
  }

  return out;
}

std::vector<TheoremReport> verify_prop_gen(const SkewBrace& br,
                                           const ElemSet& b_set,
                                           const ElemSet& c_set,
                                           const ElemSet& x_gens,
                                           const ElemSet& y_gens) {
  require_universe(br.order, {&b_set, &c_set, &x_gens, &y_gens});

  const auto require_generates = [&](const ElemSet& gens, const ElemSet& claim,
                                     const char* gname, const char* sname) {
    const ElemSet gen = generated_subgroup(br.dot, gens);
    if (gen == claim) return;
    for (Elem e = 0; e < br.order; ++e) {
      if (gen.contains(e) && !claim.contains(e))
        throw DomainError(std::string(gname) + " does not generate " + sname +
                          ": element " + std::to_string(e) +
                          " is generated but not claimed");
      if (!gen.contains(e) && claim.contains(e))
        throw DomainError(std::string(gname) + " does not generate " + sname +
                          ": element " + std::to_string(e) +
                          " is claimed but not generated");
    }
  };
  require_generates(x_gens, b_set, "X", "B");
  require_generates(y_gens, c_set, "Y", "C");

  const std::vector<Elem> bs = b_set.elems();
  const std::vector<Elem> cs = c_set.elems();
  const std::vector<Elem> xs = x_gens.elems();
  const std::vector<Elem> ys = y_gens.elems();

  const Scan conclusion = stars_vanish_scan(br, bs, cs, "b", "c");

  // Stability of X under every lambda_xbar (or every lambda_op_xbar).
  const auto stability_scan = [&](bool op_side) -> Scan {
    for (Elem x : xs) {
      const Elem xbar = br.circle_inv(x);
      for (Elem t : xs) {
        const Elem v = op_side ? br.lam_op(xbar, t) : br.lam(xbar, t);
        if (!x_gens.contains(v))
          return {false, kv("x", x) + ", " + kv("t", t) + ": image " +
                             std::to_string(v) + " escapes X"};
      }
    }
    return {};
  };
  const Scan stable = stability_scan(false);
  const Scan stable_op = stability_scan(true);
  HypothesisCheck stability{
      "X stable under every lambda_xbar or every lambda_op_xbar",
      stable.holds || stable_op.holds, ""};
  if (!stability.holds)
    stability.witness =
        "lambda: " + stable.witness + "; lambda_op: " + stable_op.witness;

  std::vector<TheoremReport> out;
  out.push_back(make_report(
      "generator_reduction_a",
      {hypothesis("b*y = 1 for all b in B, y in Y",
                  stars_vanish_scan(br, bs, ys, "b", "y"))},
      conclusion));
  out.push_back(make_report(
      "generator_reduction_b",
      {stability, hypothesis("x*c = 1 for all x in X, c in C",
                             stars_vanish_scan(br, xs, cs, "x", "c"))},
      conclusion));
  const Scan xy = stars_vanish_scan(br, xs, ys, "x", "y");
  out.push_back(make_report(
      "generator_reduction_c",
      {stability, hypothesis("x*y = 1 for all x in X, y in Y", xy)},
      conclusion));

  Scan nested;
  for (Elem x : xs)
    if (!y_gens.contains(x)) {
      nested = {false, "element " + std::to_string(x) + " of X is not in Y"};
      break;
    }
  out.push_back(make_report(
      "generator_reduction_nested",
      {hypothesis("X included in Y", std::move(nested)),
       hypothesis("x*y = 1 for all x in X, y in Y", xy)},
      conclusion));
  return out;
}

std::vector<TheoremReport> verify_lemma_product(const SkewBrace& br,
                                                const ElemSet& b_set,
                                                const ElemSet& c_set) {
  require_universe(br.order, {&b_set, &c_set});
  const HypothesisCheck b_sub = check_sub_brace(br, b_set, "B");
  const HypothesisCheck c_sub = check_sub_brace(br, c_set, "C");
  const Scan dot_cov = covering_scan(br.dot, b_set, c_set);
  const Scan circle_cov = covering_scan(br.circle, b_set, c_set);
  const HypothesisCheck dot_fact = hypothesis("A = B . C", dot_cov);
  const HypothesisCheck circle_fact = hypothesis("A = B o C", circle_cov);

  std::vector<TheoremReport> out;
  out.push_back(make_report(
      "dot_to_circle_left_ideal",
      {b_sub, c_sub, dot_fact, check_ideal(br, b_set, IdealKind::left, "B")},
      circle_cov));
  out.push_back(make_report(
      "dot_to_circle_left_ideal_op",
      {b_sub, c_sub, dot_fact,
       check_ideal(br, b_set, IdealKind::left_op, "B")},
      circle_cov));
  out.push_back(make_report(
      "circle_to_dot_right_ideal",
      {b_sub, c_sub, circle_fact,
       check_ideal(br, b_set, IdealKind::right, "B")},
      dot_cov));
  out.push_back(make_report(
      "circle_to_dot_right_ideal_op",
      {b_sub, c_sub, circle_fact,
       check_ideal(br, b_set, IdealKind::right_op, "B")},
      dot_cov));
  return out;
}

std::vector<TheoremReport> verify_star_subgroup_facts(const SkewBrace& br,
                                                      const ElemSet& b_set,
                                                      const ElemSet& c_set) {
  require_universe(br.order, {&b_set, &c_set});
  const HypothesisCheck b_sub = check_sub_brace(br, b_set, "B");
  const HypothesisCheck c_sub = check_sub_brace(br, c_set, "C");
  const HypothesisCheck b_triv = check_trivial_sub_brace(br, b_set, "B");
  const HypothesisCheck c_triv = check_trivial_sub_brace(br, c_set, "C");
  const HypothesisCheck dot_fact =
      hypothesis("A = B . C", covering_scan(br.dot, b_set, c_set));
  const HypothesisCheck circle_fact =
      hypothesis("A = B o C", covering_scan(br.circle, b_set, c_set));

  const ElemSet bc = star_subgroup(br, b_set, c_set);
  const ElemSet cb = star_subgroup(br, c_set, b_set);

  const Scan bc_left_ideal = [&]() -> Scan {
    const std::vector<Elem> elems = bc.elems();
    for (Elem a = 0; a < br.order; ++a)
      for (Elem x : elems)
        if (!bc.contains(br.lam(a, x)))
          return {false, kv("a", a) + ", " + kv("x", x) + ": lambda_a(x) = " +
                             std::to_string(br.lam(a, x)) + " escapes B*C"};
    return {};
  }();

  std::vector<TheoremReport> out;
  out.push_back(make_report("star_block_normal", {b_triv, c_sub, dot_fact},
                            normal_scan(br.dot, bc)));
  out.push_back(make_report(
      "star_block_left_ideal_via_c",
      {b_sub, c_triv, check_ideal(br, c_set, IdealKind::left, "C"), dot_fact},
      bc_left_ideal));
  out.push_back(make_report(
      "star_block_left_ideal_via_b",
      {b_triv, c_sub,
       hypothesis("B normal in (A,o)", normal_scan(br.circle, b_set)),
       dot_fact},
      bc_left_ideal));

  const ElemSet full = ElemSet::full(br.order);
  const ElemSet aprime = star_subgroup(br, full, full);
  const ElemSet blocks = product_set(br.dot, bc, cb);
  Scan split;
  for (Elem e = 0; e < br.order && split.holds; ++e) {
    if (aprime.contains(e) && !blocks.contains(e))
      split = {false, "element " + std::to_string(e) +
                          " is in A' but not in (B*C).(C*B)"};
    else if (!aprime.contains(e) && blocks.contains(e))
      split = {false, "element " + std::to_string(e) +
                          " is in (B*C).(C*B) but not in A'"};
  }
  out.push_back(make_report("derived_splits_into_blocks",
                            {b_triv, c_triv, dot_fact, circle_fact},
                            std::move(split)));
  return out;
}

TheoremReport verify_theorem(const SkewBrace& br, ProductTheorem which,
                             const ElemSet& b_set, const ElemSet& c_set) {
  require_universe(br.order, {&b_set, &c_set});
  const HypothesisCheck b_triv = check_trivial_sub_brace(br, b_set, "B");
  const HypothesisCheck c_triv = check_trivial_sub_brace(br, c_set, "C");
  const Scan dot_cov = covering_scan(br.dot, b_set, c_set);
  const Scan circle_cov = covering_scan(br.circle, b_set, c_set);

  const ElemSet full = ElemSet::full(br.order);
  const ElemSet aprime = star_subgroup(br, full, full);
  const std::vector<Elem> all = full.elems();
  const std::vector<Elem> derived = aprime.elems();

  switch (which) {
    case ProductTheorem::left: {
      std::vector<HypothesisCheck> hyps{
          b_triv,
          c_triv,
          hypothesis("B normal in (A,o)", normal_scan(br.circle, b_set)),
          hypothesis("C normal in (A,o)", normal_scan(br.circle, c_set)),
          check_ideal(br, b_set, IdealKind::right, "B"),
          check_ideal(br, c_set, IdealKind::right, "C"),
          hypothesis("A = B o C", circle_cov)};
      return make_report("trivial_product_left_nilpotent", std::move(hyps),
                         stars_vanish_scan(br, all, derived, "a", "d"));
    }
    case ProductTheorem::right: {
      std::vector<HypothesisCheck> hyps{
          b_triv,
          c_triv,
          hypothesis("B normal in (A,.)", normal_scan(br.dot, b_set)),
          hypothesis("C normal in (A,.)", normal_scan(br.dot, c_set)),
          check_ideal(br, b_set, IdealKind::left, "B"),
          check_ideal(br, c_set, IdealKind::left, "C"),
          hypothesis("A = B . C", dot_cov)};
      return make_report("trivial_product_right_nilpotent", std::move(hyps),
                         stars_vanish_scan(br, derived, all, "d", "a"));
    }
    case ProductTheorem::ito:
      break;
  }

  HypothesisCheck either{"A = B . C or A = B o C",
                         dot_cov.holds || circle_cov.holds, ""};
  if (!either.holds)
    either.witness = "dot: " + dot_cov.witness + "; circle: " +
                     circle_cov.witness;
  std::vector<HypothesisCheck> hyps{
      b_triv,
      c_triv,
      check_ideal(br, b_set, IdealKind::left_op, "B"),
      check_ideal(br, b_set, IdealKind::right_op, "B"),
      check_ideal(br, c_set, IdealKind::left_op, "C"),
      check_ideal(br, c_set, IdealKind::right_op, "C"),
      std::move(either)};
  return make_report("trivial_product_meta_trivial", std::move(hyps),
                     stars_vanish_scan(br, derived, derived, "d1", "d2"));
}

std::vector<TheoremReport> verify_group_ito(const GroupTable& g,
                                            const ElemSet& h_set,
                                            const ElemSet& k_set) {
  require_universe(g.order, {&h_set, &k_set});

  const auto abelian_subgroup = [&](const ElemSet& s,
                                    const char* who) -> HypothesisCheck {
    Scan scan = subgroup_scan(g, s, "group");
    if (scan.holds) scan = commutes_scan(g, s);
    return hypothesis(std::string(who) + " abelian subgroup", std::move(scan));
  };
  const HypothesisCheck h_ab = abelian_subgroup(h_set, "H");
  const HypothesisCheck k_ab = abelian_subgroup(k_set, "K");
  const HypothesisCheck cov =
      hypothesis("G = H K", covering_scan(g, h_set, k_set));

  const ElemSet derived = commutator_subgroup(g);

  std::vector<TheoremReport> out;
  out.push_back(make_report("abelian_product_metabelian", {h_ab, k_ab, cov},
                            commutes_scan(g, derived)));

  Scan central;
  for (Elem d : derived.elems()) {
    for (Elem a = 0; a < g.order && central.holds; ++a) {
      const Elem comm = g.op(g.conj(a, d), g.inverse(d));
      if (comm != g.identity)
        central = {false, kv("d", d) + ", " + kv("a", a) + ": [a,d] = " +
                              std::to_string(comm) + " != identity"};
    }
    if (!central.holds) break;
  }
  out.push_back(make_report(
      "abelian_normal_product_class_two",
      {h_ab, k_ab, hypothesis("H normal in G", normal_scan(g, h_set)),
       hypothesis("K normal in G", normal_scan(g, k_set)), cov},
      std::move(central)));
  return out;
}

namespace {

CorpusEntry entry(std::string name, SkewBrace br, ElemSet b, ElemSet c) {
  CorpusEntry e;
  e.name = std::move(name);
  e.brace = std::move(br);
  e.b_set = std::move(b);
  e.c_set = std::move(c);
  e.has_factors = true;
  return e;
}

std::string quadruple_name(std::int64_t p, const std::array<int, 4>& q) {
  return "family1_p" + std::to_string(p) + "_m" + std::to_string(q[0]) + "n" +
         std::to_string(q[1]) + "k" + std::to_string(q[2]) + "l" +
         std::to_string(q[3]);
}

CorpusEntry bicrossed_entry(std::string name, const BicrossedData& data) {
  return entry(std::move(name), build_bicrossed_brace(data),
               b_block_set(data), c_block_set(data));
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;

  const GroupTable z9 = make_cyclic(9);
  out.push_back(entry("trivial_z9", trivial_from_group(z9), ElemSet::full(9),
                      ElemSet::of(9, {0})));

  const GroupTable z12 = make_cyclic(12);
  out.push_back(entry("trivial_z12", trivial_from_group(z12),
                      ElemSet::of(12, {0, 4, 8}),
                      ElemSet::of(12, {0, 3, 6, 9})));

  const GroupTable s3 = make_symmetric3();
  const ElemSet alt3 = ElemSet::of(6, {0, 3, 4});
  const ElemSet flip = ElemSet::of(6, {0, 2});
  out.push_back(entry("trivial_s3", trivial_from_group(s3), alt3, flip));
  out.push_back(
      entry("almost_trivial_s3", almost_trivial_from_group(s3), alt3, flip));

  const GroupTable d4 = make_dihedral8();
  const ElemSet rot = ElemSet::of(8, {0, 1, 2, 3});
  out.push_back(entry("trivial_d4", trivial_from_group(d4), rot,
                      ElemSet::of(8, {0, 4})));
  out.push_back(entry("almost_trivial_d4", almost_trivial_from_group(d4), rot,
                      ElemSet::of(8, {0, 4})));
  out.push_back(entry("almost_trivial_d4_klein",
                      almost_trivial_from_group(d4), rot,
                      ElemSet::of(8, {0, 2, 4, 6})));

  const GroupTable q8 = make_quaternion8();
  out.push_back(entry("trivial_q8", trivial_from_group(q8), rot,
                      ElemSet::of(8, {0, 2, 4, 6})));
  out.push_back(entry("almost_trivial_q8", almost_trivial_from_group(q8), rot,
                      ElemSet::of(8, {0, 2, 4, 6})));

  for (const std::array<int, 4>& q : enumerate_quadruples(3, true)) {
    const Family1Params params{3, q[0], q[1], q[2], q[3]};
    const BicrossedData data = family1_data(params);
    out.push_back(bicrossed_entry(quadruple_name(3, q), data));
  }
  {
    const Family1Params params{5, 2, 2, 1, 1};
    const BicrossedData data = family1_data(params);
    out.push_back(bicrossed_entry(quadruple_name(5, {2, 2, 1, 1}), data));
  }

  for (const Family2Example& ex : family2_examples()) {
    Family2Params params;
    params.p = ex.p;
    params.m = ex.m;
    params.n = 2;
    params.P = ex.P;
    params.eps = {1, -1};
    const BicrossedData data = family2_data(params);
    out.push_back(bicrossed_entry("family2_" + ex.name, data));
  }

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> corpus = build_corpus();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : standard_corpus())
    if (e.name == name) return e;
  throw DomainError("no corpus entry named " + name);
}

}  // namespace braceforge

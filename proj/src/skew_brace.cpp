#include "braceforge/skew_brace.hpp"

#include <utility>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

// The brace relation in lambda form: with L_a(b) = a^-1.(a o b),
//   a o (b . c) = (a o b) . a^-1 . (a o c)   for all b, c
// is equivalent to L_a(b . c) = L_a(b) . L_a(c) for all b, c.
bool relation_holds_for(const GroupTable& dot, const GroupTable& circle, Elem a,
                        std::vector<Elem>& lam_row, Elem* witness_b, Elem* witness_c) {
  const int n = dot.order;
  const Elem a_inv = dot.inv[static_cast<std::size_t>(a)];
  const Elem* dot_mul = dot.mul.data();
  const Elem* circ_row = circle.mul.data() + static_cast<std::size_t>(a) * n;
  const Elem* inv_row = dot_mul + static_cast<std::size_t>(a_inv) * n;
  for (Elem b = 0; b < n; ++b)
    lam_row[static_cast<std::size_t>(b)] = inv_row[circ_row[b]];
  for (Elem b = 0; b < n; ++b) {
    const Elem* dot_b = dot_mul + static_cast<std::size_t>(b) * n;
    const Elem* dot_lb =
        dot_mul + static_cast<std::size_t>(lam_row[static_cast<std::size_t>(b)]) * n;
    for (Elem c = 0; c < n; ++c) {
      if (lam_row[static_cast<std::size_t>(dot_b[c])] !=
          dot_lb[lam_row[static_cast<std::size_t>(c)]]) {
        *witness_b = b;
        *witness_c = c;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

BraceValidation check_brace_tables(const GroupTable& dot, const GroupTable& circle) {
  BraceValidation v;
  auto fail = [&](const std::string& stage, std::array<Elem, 3> witness,
                  const std::string& msg) {
    v.ok = false;
    v.stage = stage;
    v.witness = witness;
    v.message = msg;
    return v;
  };

  if (dot.order != circle.order)
    return fail("shape", {-1, -1, -1}, "operations have different orders");
  const GroupValidation dv = validate_group(dot);
  if (!dv.ok) return fail("dot." + dv.axiom, dv.witness, dv.message);
  const GroupValidation cv = validate_group(circle);
  if (!cv.ok) return fail("circle." + cv.axiom, cv.witness, cv.message);
  if (dot.identity != circle.identity)
    return fail("shape", {dot.identity, circle.identity, -1},
                "identities do not coincide");

  const int n = dot.order;
  std::vector<Elem> lam_row(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    Elem b = -1, c = -1;
    if (!relation_holds_for(dot, circle, a, lam_row, &b, &c))
      return fail("relation", {a, b, c},
                  "a o (b . c) != (a o b) . a^-1 . (a o c)");
    // Permutation fast-reject; redundant once both tables are groups, kept as
    // a cheap cross-check of the lambda rows.
    seen.assign(static_cast<std::size_t>(n), 0);
    for (Elem x = 0; x < n; ++x) {
      if (seen[static_cast<std::size_t>(lam_row[static_cast<std::size_t>(x)])])
        return fail("lambda", {a, x, -1}, "lambda row is not a permutation");
      seen[static_cast<std::size_t>(lam_row[static_cast<std::size_t>(x)])] = 1;
    }
  }
  return v;
}

SkewBrace build_brace(GroupTable dot, GroupTable circle, std::string label) {
  const BraceValidation v = check_brace_tables(dot, circle);
  if (!v.ok) {
    if (v.stage == "shape") throw ShapeError(v.message);
    if (v.stage == "relation")
      throw BraceAxiomError(v.message, v.witness[0], v.witness[1], v.witness[2]);
    throw DomainError(v.stage + ": " + v.message);
  }

  SkewBrace br;
  br.order = dot.order;
  br.label = label.empty() ? dot.label + "|" + circle.label : std::move(label);
  const int n = dot.order;
  br.lambda.resize(static_cast<std::size_t>(n) * n);
  br.lambda_op.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem a_inv = dot.inv[static_cast<std::size_t>(a)];
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = circle.op(a, b);
      br.lambda[static_cast<std::size_t>(a) * n + b] = dot.op(a_inv, ab);
      br.lambda_op[static_cast<std::size_t>(a) * n + b] = dot.op(ab, a_inv);
    }
  }
  br.dot = std::move(dot);
  br.circle = std::move(circle);
  return br;
}

SkewBrace trivial_from_group(const GroupTable& g) {
  return build_brace(g, g, "trivial(" + g.label + ")");
}

SkewBrace almost_trivial_from_group(const GroupTable& g) {
  GroupTable circle = g;
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      circle.mul[static_cast<std::size_t>(a) * g.order + b] = g.op(b, a);
  circle.label = g.label + "^op";
  return build_brace(g, std::move(circle), "almost_trivial(" + g.label + ")");
}

Elem star(const SkewBrace& br, Elem a, Elem b) {
  return br.dot_op(br.lam(a, b), br.dot_inv(b));
}

ElemSet star_subgroup(const SkewBrace& br, const ElemSet& xs, const ElemSet& ys) {
  ElemSet gens(br.order);
  const std::vector<Elem> x_elems = xs.elems();
  const std::vector<Elem> y_elems = ys.elems();
  for (Elem x : x_elems)
    for (Elem y : y_elems) gens.insert(star(br, x, y));
  return generated_subgroup(br.dot, gens);
}

DerivedSeries3 derived_series3(const SkewBrace& br) {
  const ElemSet all = ElemSet::full(br.order);
  DerivedSeries3 out;
  out.derived = star_subgroup(br, all, all);
  out.left3 = star_subgroup(br, all, out.derived);
  out.right3 = star_subgroup(br, out.derived, all);
  return out;
}

SkewBrace opposite(const SkewBrace& br) {
  GroupTable dot_op = br.dot;
  for (Elem a = 0; a < br.order; ++a)
    for (Elem b = 0; b < br.order; ++b)
      dot_op.mul[static_cast<std::size_t>(a) * br.order + b] = br.dot.op(b, a);
  dot_op.label = br.dot.label + "^op";
  return build_brace(std::move(dot_op), br.circle, br.label + "^op");
}

bool is_trivial(const SkewBrace& br) { return br.dot.mul == br.circle.mul; }

bool is_almost_trivial(const SkewBrace& br) {
  for (Elem a = 0; a < br.order; ++a)
    for (Elem b = 0; b < br.order; ++b)
      if (br.circle_op(a, b) != br.dot_op(b, a)) return false;
  return true;
}

bool is_two_sided(const SkewBrace& br) {
  const int n = br.order;
  const Elem* dot_mul = br.dot.mul.data();
  const Elem* circ_mul = br.circle.mul.data();
  for (Elem a = 0; a < n; ++a) {
    const Elem* dot_a = dot_mul + static_cast<std::size_t>(a) * n;
    const Elem* circ_a = circ_mul + static_cast<std::size_t>(a) * n;
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = dot_a[b];
      const Elem* circ_ab = circ_mul + static_cast<std::size_t>(ab) * n;
      const Elem* circ_b = circ_mul + static_cast<std::size_t>(b) * n;
      for (Elem c = 0; c < n; ++c) {
        // (a . b) o c = (a o c) . c^-1 . (b o c)
        const Elem rhs = br.dot_op(br.dot_op(circ_a[c], br.dot_inv(c)), circ_b[c]);
        if (circ_ab[c] != rhs) return false;
      }
    }
  }
  return true;
}

bool is_meta_trivial(const SkewBrace& br) {
  const ElemSet all = ElemSet::full(br.order);
  const ElemSet derived = star_subgroup(br, all, all);
  return star_subgroup(br, derived, derived).size() == 1;
}

bool is_left_nilpotent3(const SkewBrace& br) {
  return derived_series3(br).left3.size() == 1;
}

bool is_right_nilpotent3(const SkewBrace& br) {
  return derived_series3(br).right3.size() == 1;
}

SubsetStatus subset_status(const SkewBrace& br, const ElemSet& s) {
  SubsetStatus st;
  const bool sub_dot = is_subgroup(br.dot, s);
  const bool sub_circle = is_subgroup(br.circle, s);
  st.sub_skew_brace = sub_dot && sub_circle;

  if (!sub_dot) return st;
  const std::vector<Elem> elems = s.elems();

  st.left_ideal = true;
  st.right_ideal = true;
  st.left_ideal_op = true;
  st.right_ideal_op = true;
  for (Elem a = 0; a < br.order && (st.left_ideal || st.right_ideal ||
                                    st.left_ideal_op || st.right_ideal_op);
       ++a) {
    for (Elem x : elems) {
      if (st.left_ideal && !s.contains(br.lam(a, x))) st.left_ideal = false;
      if (st.right_ideal && !s.contains(star(br, x, a))) st.right_ideal = false;
      if (st.left_ideal_op && !s.contains(br.lam_op(a, x))) st.left_ideal_op = false;
      if (st.right_ideal_op &&
          !s.contains(br.dot_op(br.dot_inv(a), br.lam_op(x, a))))
        st.right_ideal_op = false;
    }
  }

  if (st.sub_skew_brace && is_normal(br.dot, s) && is_normal(br.circle, s)) {
    st.ideal = true;
    // a . s = a o s setwise for every a.
    for (Elem a = 0; a < br.order && st.ideal; ++a) {
      ElemSet dot_coset(br.order);
      for (Elem x : elems) dot_coset.insert(br.dot_op(a, x));
      for (Elem x : elems)
        if (!dot_coset.contains(br.circle_op(a, x))) {
          st.ideal = false;
          break;
        }
    }
  }
  return st;
}

FactorizationCheck factorization_check(const SkewBrace& br, const ElemSet& b,
                                       const ElemSet& c) {
  for (const ElemSet* s : {&b, &c}) {
    const SubsetStatus st = subset_status(br, *s);
    if (!st.sub_skew_brace)
      throw DomainError("factorization_check needs sub-skew braces");
  }
  FactorizationCheck out;
  out.dot_product = product_set(br.dot, b, c) == ElemSet::full(br.order);
  out.circle_product = product_set(br.circle, b, c) == ElemSet::full(br.order);
  out.exact = b.intersect(c) == ElemSet::of(br.order, {br.identity()});
  return out;
}

AnalysisReport analyze(const SkewBrace& br,
                       const std::vector<std::pair<std::string, ElemSet>>&
                           distinguished_subsets) {
  AnalysisReport report;
  report.label = br.label;
  report.order = br.order;
  report.trivial = is_trivial(br);
  report.almost_trivial = is_almost_trivial(br);
  report.two_sided = is_two_sided(br);
  const DerivedSeries3 series = derived_series3(br);
  report.derived = series.derived;
  report.left3 = series.left3;
  report.right3 = series.right3;
  report.meta_trivial =
      star_subgroup(br, series.derived, series.derived).size() == 1;
  report.left_nilpotent3 = series.left3.size() == 1;
  report.right_nilpotent3 = series.right3.size() == 1;
  for (const auto& [name, subset] : distinguished_subsets)
    report.ideal_facts.push_back(
        SubsetFact{name, subset.elems(), subset_status(br, subset)});
  return report;
}

}  // namespace braceforge

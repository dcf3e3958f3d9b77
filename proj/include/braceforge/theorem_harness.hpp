// Executable checks for the product theorems on skew braces: the star
// identity lemmas, generator reductions for star-subgroup vanishing, transfer
// of a factorization from one product to the other, structure of the cross
// star-subgroup B*C, the three theorems about products of trivial sub-braces,
// and the classical facts about products of abelian subgroups (Ito's theorem
// and the class-two proposition) that they generalize.
//
// Every report separates hypotheses from conclusion. Hypotheses are checked
// against the tables, never assumed, and reported individually; the conclusion
// is evaluated even when a hypothesis fails, so sharpness examples (hypothesis
// false and conclusion false) stay visible. A report that is applicable (all
// hypotheses hold) with a false conclusion is a red alert: it would mean the
// implementation or the theorem is wrong, and it always carries a witness.

#pragma once

#include <string>
#include <vector>

#include "braceforge/element_set.hpp"
#include "braceforge/group_table.hpp"
#include "braceforge/skew_brace.hpp"

namespace braceforge {

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::string witness;  // first violation found; empty when the check holds
};

struct TheoremReport {
  std::string id;
  std::vector<HypothesisCheck> hypotheses;
  bool applicable = false;        // all hypotheses hold
  bool conclusion_holds = false;  // evaluated even when not applicable
  std::string conclusion_witness;

  bool red_alert() const { return applicable && !conclusion_holds; }
};

// Scans the star identities over all triples of the carrier:
//   star_product_rules:    a*(b.c)   = (a*b) . b . (a*c) . b^-1
//                          (a o b)*c = (a*(b*c)) . (b*c) . (a*c)
//   star_conjugation_rule: a.(b*c).a^-1 = (b*a)^-1 . (b*(a.c))
//   lambda_twist_rule:     lambda_a(b*c) = (a o b o abar) * lambda_a(c)
//   two_sided_star_rule:   (a.b)*c = b^-1 . (a*c) . b . (b*c),
//                          gated on the two-sided law (a.b)oc = (aoc).c^-1.(boc)
// The first three have no hypotheses and must hold on every valid brace.
// Throws CapacityError when order exceeds triple_cap (scans are O(n^3)).
std::vector<TheoremReport> verify_lemma_suite(const SkewBrace& br,
                                              int triple_cap = 200);

// Reductions of the conclusion "B * C = 1" to generating sets X of B and Y
// of C (all under the dot operation):
//   generator_reduction_a:      b*y = 1 for all b in B, y in Y
//   generator_reduction_b:      x*c = 1 for all x in X, c in C, provided X is
//                               stable under every lambda_xbar or every
//                               lambda_op_xbar with x in X (xbar = circle inverse)
//   generator_reduction_c:      x*y = 1 for all x in X, y in Y, same proviso
//   generator_reduction_nested: X included in Y and x*y = 1, no proviso
// Throws DomainError (with witness) when X does not generate B or Y does not
// generate C, ShapeError when a subset universe does not match the carrier.
std::vector<TheoremReport> verify_prop_gen(const SkewBrace& br,
                                           const ElemSet& b_set,
                                           const ElemSet& c_set,
                                           const ElemSet& x_gens,
                                           const ElemSet& y_gens);

// Transfer of one factorization to the other for sub-braces B and C:
//   dot_to_circle_left_ideal:     A = B.C and B left ideal in A    -> A = B o C
//   dot_to_circle_left_ideal_op:  A = B.C and B left ideal in A^op -> A = B o C
//   circle_to_dot_right_ideal:    A = B o C and B right ideal in A    -> A = B.C
//   circle_to_dot_right_ideal_op: A = B o C and B right ideal in A^op -> A = B.C
std::vector<TheoremReport> verify_lemma_product(const SkewBrace& br,
                                                const ElemSet& b_set,
                                                const ElemSet& c_set);

// Structure of the cross star-subgroups under a dot factorization A = B.C:
//   star_block_normal:        B trivial            -> B*C normal in (A,.)
//   star_block_left_ideal_via_c: C trivial left ideal in A -> B*C left ideal in A
//   star_block_left_ideal_via_b: B trivial normal in (A,o) -> B*C left ideal in A
//   derived_splits_into_blocks: A = B.C = B o C, B and C trivial
//                                                  -> A' = (B*C).(C*B) as sets
std::vector<TheoremReport> verify_star_subgroup_facts(const SkewBrace& br,
                                                      const ElemSet& b_set,
                                                      const ElemSet& c_set);

enum class ProductTheorem { left, right, ito };

// The three product theorems for trivial sub-braces B and C of A:
//   left:  A = B o C, B and C normal in (A,o) and right ideals in A -> A^3 = 1
//   right: A = B.C, B and C normal in (A,.) and left ideals in A -> A^(3) = 1
//   ito:   A = B.C or A = B o C, B and C left and right ideals in A^op
//          -> A' is a trivial sub-brace (the whole brace is meta-trivial)
// On an almost-trivial brace the opposite is trivial, every subgroup is a
// two-sided ideal of A^op, and ito degenerates to the group-theoretic fact
// checked by verify_group_ito.
TheoremReport verify_theorem(const SkewBrace& br, ProductTheorem which,
                             const ElemSet& b_set, const ElemSet& c_set);

// The group-theoretic ancestors, on a plain group G with subgroups H and K:
//   abelian_product_metabelian:       H, K abelian, G = HK -> [G,G] abelian
//   abelian_normal_product_class_two: both also normal     -> [[G,G],G] = 1
// Failed hypotheses yield a not-applicable report, never an exception.
std::vector<TheoremReport> verify_group_ito(const GroupTable& g,
                                            const ElemSet& h_set,
                                            const ElemSet& k_set);

// Fixed, reproducible instance list the test and acceptance suites run the
// verifiers over. Entries carry a distinguished factor pair (B, C).
struct CorpusEntry {
  std::string name;
  SkewBrace brace;
  ElemSet b_set;
  ElemSet c_set;
  bool has_factors = false;
};

// Trivial and almost-trivial braces on Z/9, Z/12, S3, D4 and Q8 with their
// canonical factor pairs; the scalar-action family at p = 3 (all seven
// nontrivial quadruples with parameters up to 3) plus the one p = 5 instance
// of order below 1000 (larger p = 5 instances are exercised at the data level
// only, since full table validation is cubic in the order); and the six stock
// matrix-action examples. Built and memoized on first use.
const std::vector<CorpusEntry>& standard_corpus();

// Lookup by entry name; throws DomainError when absent.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace braceforge

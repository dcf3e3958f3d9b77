#include "braceforge/theorem_harness.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "braceforge/bicrossed.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/families.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace braceforge;

namespace {

const TheoremReport* find_report(const std::vector<TheoremReport>& reports,
                                 const std::string& id) {
  for (const TheoremReport& r : reports)
    if (r.id == id) return &r;
  return nullptr;
}

const HypothesisCheck* find_hyp(const TheoremReport& report,
                                const std::string& name) {
  for (const HypothesisCheck& h : report.hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

// Z/4 under addition with xor as the circle operation; a valid brace that is
// neither trivial nor almost trivial.
SkewBrace xor_plus_brace() {
  return build_brace(make_cyclic(4), make_elementary_abelian(2, 2), "xor_plus");
}

// B = Z/5 acted on by C = Z/4 through c -> (x -> 2^c x); psi trivial.
BicrossedData phi_only_data() {
  BicrossedData data;
  data.b_group = make_cyclic(5);
  data.c_group = make_cyclic(4);
  data.psi.assign(5, {0, 1, 2, 3});
  data.phi.assign(4, {0, 1, 2, 3, 4});
  for (Elem c = 0; c < 4; ++c) {
    const std::int64_t s = oracle::powmod(2, c, 5);
    for (Elem x = 0; x < 5; ++x)
      data.phi[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] =
          static_cast<Elem>(s * x % 5);
  }
  data.label = "z5_by_z4";
  return certify_bicrossed(std::move(data)).data;
}

}  // namespace

TEST_CASE("star identity lemmas hold across the brace zoo") {
  std::vector<SkewBrace> zoo;
  zoo.push_back(trivial_from_group(make_cyclic(9)));
  zoo.push_back(trivial_from_group(make_symmetric3()));
  zoo.push_back(almost_trivial_from_group(make_symmetric3()));
  zoo.push_back(almost_trivial_from_group(make_dihedral8()));
  zoo.push_back(almost_trivial_from_group(make_quaternion8()));
  zoo.push_back(xor_plus_brace());
  zoo.push_back(corpus_entry("family2_m2_p3").brace);

  for (const SkewBrace& br : zoo) {
    CAPTURE(br.label);
    const std::vector<TheoremReport> reports = verify_lemma_suite(br);
    REQUIRE(reports.size() == 4);
    for (const char* id :
         {"star_product_rules", "star_conjugation_rule", "lambda_twist_rule"}) {
      const TheoremReport* r = find_report(reports, id);
      REQUIRE(r != nullptr);
      CHECK(r->hypotheses.empty());
      CHECK(r->applicable);
      CHECK(r->conclusion_holds);
      CHECK(r->conclusion_witness.empty());
    }
    const TheoremReport* two = find_report(reports, "two_sided_star_rule");
    REQUIRE(two != nullptr);
    REQUIRE(two->hypotheses.size() == 1);
    CHECK(two->hypotheses[0].holds == is_two_sided(br));
    CHECK(two->applicable == is_two_sided(br));
    CHECK_FALSE(two->red_alert());
    if (!two->conclusion_holds) CHECK(!two->conclusion_witness.empty());
  }

  SUBCASE("trivial and almost-trivial braces satisfy the two-sided rule") {
    for (const SkewBrace& br : {trivial_from_group(make_cyclic(9)),
                                almost_trivial_from_group(make_dihedral8())}) {
      const TheoremReport* two =
          find_report(verify_lemma_suite(br), "two_sided_star_rule");
      REQUIRE(two != nullptr);
      CHECK(two->applicable);
      CHECK(two->conclusion_holds);
    }
  }
}

TEST_CASE("lemma suite refuses oversized scans and invalid tables") {
  const SkewBrace z9 = trivial_from_group(make_cyclic(9));
  CHECK_THROWS_AS(verify_lemma_suite(z9, 8), CapacityError);
  CHECK_THROWS_WITH_AS(verify_lemma_suite(z9, 0),
                       doctest::Contains("triple_cap"), ParameterError);
  CHECK_THROWS_AS(verify_lemma_suite(trivial_from_group(make_cyclic(201))),
                  CapacityError);

  // A corrupted circle table never reaches the suite: construction rejects it.
  GroupTable dot = make_cyclic(9);
  GroupTable bad = dot;
  std::swap(bad.mul[1 * 9 + 2], bad.mul[1 * 9 + 3]);
  CHECK_THROWS_AS(build_brace(dot, bad, "corrupt"), DomainError);
}

TEST_CASE("generator reductions for star-subgroup vanishing") {
  const GroupTable s3 = make_symmetric3();
  const SkewBrace at = almost_trivial_from_group(s3);
  const ElemSet a3 = ElemSet::of(6, {0, 3, 4});
  const ElemSet flip = ElemSet::of(6, {0, 2});
  const ElemSet gen3 = ElemSet::of(6, {3});
  const ElemSet gen2 = ElemSet::of(6, {2});

  SUBCASE("one 3-cycle generating both factors makes every part apply") {
    const auto reports = verify_prop_gen(at, a3, a3, gen3, gen3);
    REQUIRE(reports.size() == 4);
    for (const char* id :
         {"generator_reduction_a", "generator_reduction_b",
          "generator_reduction_c", "generator_reduction_nested"}) {
      const TheoremReport* r = find_report(reports, id);
      REQUIRE(r != nullptr);
      CHECK(r->applicable);
      CHECK(r->conclusion_holds);
    }
  }

  SUBCASE("a transposition against the 3-cycles fails the star hypotheses") {
    REQUIRE(star(at, 2, 3) != 0);
    const auto reports = verify_prop_gen(at, flip, a3, gen2, gen3);
    for (const TheoremReport& r : reports) {
      CAPTURE(r.id);
      CHECK_FALSE(r.applicable);
      CHECK_FALSE(r.conclusion_holds);
      CHECK(!r.conclusion_witness.empty());
      CHECK_FALSE(r.red_alert());
    }
    const TheoremReport* part_a = find_report(reports, "generator_reduction_a");
    REQUIRE(part_a != nullptr);
    CHECK_FALSE(part_a->hypotheses[0].holds);
    CHECK(!part_a->hypotheses[0].witness.empty());
    const TheoremReport* nested =
        find_report(reports, "generator_reduction_nested");
    REQUIRE(nested != nullptr);
    CHECK_FALSE(find_hyp(*nested, "X included in Y")->holds);
  }

  SUBCASE("on a trivial brace every star hypothesis is vacuous") {
    const SkewBrace tr = trivial_from_group(s3);
    const auto reports = verify_prop_gen(tr, a3, flip, a3, flip);
    for (const char* id : {"generator_reduction_a", "generator_reduction_b",
                           "generator_reduction_c"}) {
      const TheoremReport* r = find_report(reports, id);
      REQUIRE(r != nullptr);
      CHECK(r->applicable);
      CHECK(r->conclusion_holds);
    }
    const TheoremReport* b = find_report(reports, "generator_reduction_b");
    CHECK(find_hyp(*b, "X stable under every lambda_xbar or every "
                       "lambda_op_xbar")
              ->holds);
    // A3 is not included in the transposition subgroup.
    const TheoremReport* nested =
        find_report(reports, "generator_reduction_nested");
    CHECK_FALSE(nested->applicable);
    CHECK(nested->conclusion_holds);
  }

  SUBCASE("generator claims are verified, not trusted") {
    CHECK_THROWS_WITH_AS(verify_prop_gen(at, a3, a3, ElemSet::of(6, {0}), gen3),
                         doctest::Contains("does not generate B"), DomainError);
    CHECK_THROWS_WITH_AS(verify_prop_gen(at, a3, flip, gen3, gen3),
                         doctest::Contains("does not generate C"), DomainError);
    CHECK_THROWS_AS(verify_prop_gen(at, ElemSet::of(5, {0, 3, 4}), a3, gen3,
                                    gen3),
                    ShapeError);
  }
}

TEST_CASE("factorization transfers between the two products") {
  SUBCASE("semidirect data with trivial psi satisfies all four implications") {
    const BicrossedData data = phi_only_data();
    const SkewBrace br = build_bicrossed_brace(data);
    const auto reports =
        verify_lemma_product(br, b_block_set(data), c_block_set(data));
    REQUIRE(reports.size() == 4);
    for (const TheoremReport& r : reports) {
      CAPTURE(r.id);
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
  }

  SUBCASE("nontrivial psi knocks out the right-ideal hypotheses") {
    const CorpusEntry& e = corpus_entry("family2_m2_p3");
    const auto reports = verify_lemma_product(e.brace, e.b_set, e.c_set);
    const TheoremReport* via_right =
        find_report(reports, "circle_to_dot_right_ideal");
    REQUIRE(via_right != nullptr);
    CHECK_FALSE(find_hyp(*via_right, "B right ideal in A")->holds);
    CHECK_FALSE(via_right->applicable);
    CHECK(via_right->conclusion_holds);  // A = B.C holds regardless here
    for (const char* id :
         {"dot_to_circle_left_ideal", "dot_to_circle_left_ideal_op"}) {
      const TheoremReport* r = find_report(reports, id);
      REQUIRE(r != nullptr);
      CHECK(r->applicable);
      CHECK(r->conclusion_holds);
    }
  }

  SUBCASE("complementary subgroups of a trivial brace") {
    const SkewBrace tr = trivial_from_group(make_cyclic(12));
    const auto reports = verify_lemma_product(tr, ElemSet::of(12, {0, 4, 8}),
                                              ElemSet::of(12, {0, 3, 6, 9}));
    for (const TheoremReport& r : reports) {
      CAPTURE(r.id);
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
  }

  SUBCASE("a non-factorizing pair is reported, not rejected") {
    const SkewBrace tr = trivial_from_group(make_symmetric3());
    const ElemSet a3 = ElemSet::of(6, {0, 3, 4});
    const auto reports = verify_lemma_product(tr, a3, a3);
    for (const TheoremReport& r : reports) {
      CAPTURE(r.id);
      CHECK_FALSE(r.applicable);
      CHECK_FALSE(r.conclusion_holds);
      CHECK(!r.conclusion_witness.empty());
    }
  }
}

TEST_CASE("cross star-subgroup facts under a dot factorization") {
  SUBCASE("scalar-action instance of order 81") {
    const CorpusEntry& e = corpus_entry("family1_p3_m2n2k1l1");
    const auto reports = verify_star_subgroup_facts(e.brace, e.b_set, e.c_set);
    REQUIRE(reports.size() == 4);

    const TheoremReport* normal = find_report(reports, "star_block_normal");
    CHECK(normal->applicable);
    CHECK(normal->conclusion_holds);

    const TheoremReport* via_c =
        find_report(reports, "star_block_left_ideal_via_c");
    CHECK(via_c->applicable);  // 1 x C is always a left ideal here
    CHECK(via_c->conclusion_holds);

    // B x 1 is not normal in the circle group, so the other route is closed,
    // but the conclusion is true anyway: no red alert either way.
    const TheoremReport* via_b =
        find_report(reports, "star_block_left_ideal_via_b");
    CHECK_FALSE(find_hyp(*via_b, "B normal in (A,o)")->holds);
    CHECK_FALSE(via_b->applicable);
    CHECK(via_b->conclusion_holds);

    const TheoremReport* split =
        find_report(reports, "derived_splits_into_blocks");
    CHECK(split->applicable);
    CHECK(split->conclusion_holds);
  }

  SUBCASE("trivial brace conclusions are degenerate-true") {
    const SkewBrace tr = trivial_from_group(make_cyclic(12));
    const auto reports = verify_star_subgroup_facts(
        tr, ElemSet::of(12, {0, 4, 8}), ElemSet::of(12, {0, 3, 6, 9}));
    for (const TheoremReport& r : reports) {
      CAPTURE(r.id);
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
    CHECK(star_subgroup(tr, ElemSet::of(12, {0, 4, 8}),
                        ElemSet::of(12, {0, 3, 6, 9})) ==
          ElemSet::of(12, {0}));
  }

  SUBCASE("dihedral commutators against an independent oracle") {
    const GroupTable d4 = make_dihedral8();
    const SkewBrace at = almost_trivial_from_group(d4);
    const ElemSet rot = ElemSet::of(8, {0, 1, 2, 3});
    const ElemSet sset = ElemSet::of(8, {0, 4});

    // The star of an almost-trivial brace is a commutator, so the cross
    // star-subgroup must coincide with the commutator subgroup [B, C].
    CHECK(star_subgroup(at, rot, sset) == commutator_of(d4, rot, sset));
    CHECK(star_subgroup(at, rot, sset) == ElemSet::of(8, {0, 2}));

    const auto reports = verify_star_subgroup_facts(at, rot, sset);
    const TheoremReport* normal = find_report(reports, "star_block_normal");
    CHECK(normal->applicable);
    CHECK(normal->conclusion_holds);

    const TheoremReport* via_c =
        find_report(reports, "star_block_left_ideal_via_c");
    CHECK_FALSE(via_c->applicable);  // the flip subgroup is not normal
    const TheoremReport* via_b =
        find_report(reports, "star_block_left_ideal_via_b");
    CHECK(via_b->applicable);
    CHECK(via_b->conclusion_holds);

    const TheoremReport* split =
        find_report(reports, "derived_splits_into_blocks");
    CHECK(split->applicable);
    CHECK(split->conclusion_holds);
  }
}

TEST_CASE("product theorem reports separate hypotheses from conclusions") {
  SUBCASE("whole trivial brace against the identity factor") {
    const SkewBrace tr = trivial_from_group(make_cyclic(9));
    const ElemSet full = ElemSet::full(9);
    const ElemSet one = ElemSet::of(9, {0});
    for (ProductTheorem which :
         {ProductTheorem::left, ProductTheorem::right, ProductTheorem::ito}) {
      const TheoremReport r = verify_theorem(tr, which, full, one);
      CAPTURE(r.id);
      REQUIRE(r.hypotheses.size() == 7);
      for (const HypothesisCheck& h : r.hypotheses) {
        CAPTURE(h.name);
        CHECK(h.holds);
      }
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
  }

  SUBCASE("the meta-triviality hypothesis list is pinned") {
    const SkewBrace tr = trivial_from_group(make_cyclic(9));
    const TheoremReport r = verify_theorem(tr, ProductTheorem::ito,
                                           ElemSet::full(9), ElemSet::of(9, {0}));
    const std::vector<std::string> names = {
        "B trivial sub-brace",       "C trivial sub-brace",
        "B left ideal in A^op",      "B right ideal in A^op",
        "C left ideal in A^op",      "C right ideal in A^op",
        "A = B . C or A = B o C"};
    REQUIRE(r.hypotheses.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
      CHECK(r.hypotheses[i].name == names[i]);
  }

  SUBCASE("quaternion subgroups are normal, so all three theorems apply") {
    const CorpusEntry& e = corpus_entry("almost_trivial_q8");
    for (ProductTheorem which :
         {ProductTheorem::left, ProductTheorem::right, ProductTheorem::ito}) {
      const TheoremReport r = verify_theorem(e.brace, which, e.b_set, e.c_set);
      CAPTURE(r.id);
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
  }

  SUBCASE("dihedral rotations with the Klein complement") {
    const CorpusEntry& e = corpus_entry("almost_trivial_d4_klein");
    const TheoremReport r =
        verify_theorem(e.brace, ProductTheorem::left, e.b_set, e.c_set);
    for (const HypothesisCheck& h : r.hypotheses) {
      CAPTURE(h.name);
      CHECK(h.holds);
    }
    CHECK(r.applicable);
    CHECK(r.conclusion_holds);
  }

  SUBCASE("dihedral flip factor breaks circle normality for the left theorem") {
    const CorpusEntry& e = corpus_entry("almost_trivial_d4");
    const TheoremReport left =
        verify_theorem(e.brace, ProductTheorem::left, e.b_set, e.c_set);
    CHECK_FALSE(find_hyp(left, "C normal in (A,o)")->holds);
    CHECK_FALSE(left.applicable);
    CHECK(left.conclusion_holds);  // D4 is nilpotent of class two anyway
    const TheoremReport ito =
        verify_theorem(e.brace, ProductTheorem::ito, e.b_set, e.c_set);
    CHECK(ito.applicable);
    CHECK(ito.conclusion_holds);
  }

  SUBCASE("scalar-action braces are meta-trivial but outside the hypotheses") {
    const CorpusEntry& e = corpus_entry("family1_p3_m2n2k1l1");
    const TheoremReport r =
        verify_theorem(e.brace, ProductTheorem::ito, e.b_set, e.c_set);
    CHECK_FALSE(r.applicable);
    CHECK(r.conclusion_holds);
    CHECK(is_meta_trivial(e.brace));

    // The per-hypothesis verdicts must match the action-level predictions.
    const BicrossedData data = family1_data({3, 2, 2, 1, 1});
    const IdealProfile prof = ideal_profile(data);
    CHECK(find_hyp(r, "B left ideal in A^op")->holds ==
          prof.b_block.left_ideal_op);
    CHECK(find_hyp(r, "B right ideal in A^op")->holds ==
          prof.b_block.right_ideal_op);
    CHECK(find_hyp(r, "C left ideal in A^op")->holds ==
          prof.c_block.left_ideal_op);
    CHECK(find_hyp(r, "C right ideal in A^op")->holds ==
          prof.c_block.right_ideal_op);
  }

  SUBCASE("subset universes must match the carrier") {
    const SkewBrace tr = trivial_from_group(make_cyclic(9));
    CHECK_THROWS_AS(verify_theorem(tr, ProductTheorem::ito, ElemSet::full(5),
                                   ElemSet::of(9, {0})),
                    ShapeError);
  }
}

TEST_CASE("the smallest matrix-action example demonstrates sharpness") {
  const CorpusEntry& e = corpus_entry("family2_m2_p3");
  const TheoremReport r =
      verify_theorem(e.brace, ProductTheorem::ito, e.b_set, e.c_set);

  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.conclusion_holds);
  CHECK(!r.conclusion_witness.empty());
  CHECK_FALSE(r.red_alert());
  CHECK_FALSE(is_meta_trivial(e.brace));

  // The first failing hypothesis is the B-side right-ideal condition in the
  // opposite brace; the C-side left-ideal condition fails as well, and
  // everything else holds. Weakening the hypothesis pair to what this brace
  // does satisfy would therefore make the theorem false.
  const HypothesisCheck* first_fail = nullptr;
  for (const HypothesisCheck& h : r.hypotheses)
    if (!h.holds) {
      first_fail = &h;
      break;
    }
  REQUIRE(first_fail != nullptr);
  CHECK(first_fail->name == "B right ideal in A^op");
  CHECK(!first_fail->witness.empty());
  CHECK_FALSE(find_hyp(r, "C left ideal in A^op")->holds);
  for (const char* name :
       {"B trivial sub-brace", "C trivial sub-brace", "B left ideal in A^op",
        "C right ideal in A^op", "A = B . C or A = B o C"}) {
    CAPTURE(name);
    CHECK(find_hyp(r, name)->holds);
  }
}

TEST_CASE("group product facts") {
  const GroupTable s3 = make_symmetric3();
  const ElemSet a3 = ElemSet::of(6, {0, 3, 4});
  const ElemSet flip = ElemSet::of(6, {0, 2});

  SUBCASE("S3 as a product of cyclic subgroups is metabelian") {
    const auto reports = verify_group_ito(s3, a3, flip);
    REQUIRE(reports.size() == 2);
    const TheoremReport* metab =
        find_report(reports, "abelian_product_metabelian");
    CHECK(metab->applicable);
    CHECK(metab->conclusion_holds);

    // The flip factor is not normal and [A3, S3] is nontrivial, so the
    // class-two report is both inapplicable and false in conclusion.
    const TheoremReport* class2 =
        find_report(reports, "abelian_normal_product_class_two");
    CHECK_FALSE(find_hyp(*class2, "K normal in G")->holds);
    CHECK_FALSE(class2->applicable);
    CHECK_FALSE(class2->conclusion_holds);
    CHECK(!class2->conclusion_witness.empty());
  }

  SUBCASE("abelian groups satisfy both facts trivially") {
    const GroupTable z12 = make_cyclic(12);
    for (const TheoremReport& r :
         verify_group_ito(z12, ElemSet::full(12), ElemSet::of(12, {0}))) {
      CAPTURE(r.id);
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
  }

  SUBCASE("dihedral and quaternion products") {
    const GroupTable d4 = make_dihedral8();
    const ElemSet rot = ElemSet::of(8, {0, 1, 2, 3});
    const auto flip_reports =
        verify_group_ito(d4, rot, ElemSet::of(8, {0, 4}));
    CHECK(flip_reports[0].applicable);
    CHECK(flip_reports[0].conclusion_holds);
    CHECK_FALSE(flip_reports[1].applicable);
    CHECK(flip_reports[1].conclusion_holds);  // r^2 is central regardless

    const auto klein_reports =
        verify_group_ito(d4, rot, ElemSet::of(8, {0, 2, 4, 6}));
    CHECK(klein_reports[1].applicable);
    CHECK(klein_reports[1].conclusion_holds);

    const GroupTable q8 = make_quaternion8();
    for (const TheoremReport& r : verify_group_ito(
             q8, ElemSet::of(8, {0, 1, 2, 3}), ElemSet::of(8, {0, 2, 4, 6}))) {
      CAPTURE(r.id);
      CHECK(r.applicable);
      CHECK(r.conclusion_holds);
    }
  }

  SUBCASE("non-abelian or non-covering factors are reported") {
    const auto nonab = verify_group_ito(s3, ElemSet::full(6), ElemSet::of(6, {0}));
    CHECK_FALSE(find_hyp(nonab[0], "H abelian subgroup")->holds);
    CHECK_FALSE(nonab[0].applicable);
    CHECK(nonab[0].conclusion_holds);  // S3 is still metabelian

    const auto small = verify_group_ito(s3, flip, flip);
    CHECK_FALSE(find_hyp(small[0], "G = H K")->holds);
    CHECK_FALSE(small[0].applicable);
  }
}

TEST_CASE("on almost-trivial braces the theorems collapse to the group facts") {
  struct Pair {
    const GroupTable* g;
    ElemSet h;
    ElemSet k;
  };
  const GroupTable s3 = make_symmetric3();
  const GroupTable d4 = make_dihedral8();
  const GroupTable q8 = make_quaternion8();
  const GroupTable z12 = make_cyclic(12);
  const std::vector<Pair> pairs = {
      {&s3, ElemSet::of(6, {0, 3, 4}), ElemSet::of(6, {0, 2})},
      {&s3, ElemSet::of(6, {0, 3, 4}), ElemSet::of(6, {0, 3, 4})},
      {&s3, ElemSet::full(6), ElemSet::of(6, {0})},
      {&s3, ElemSet::of(6, {0, 2}), ElemSet::of(6, {0, 5})},
      {&d4, ElemSet::of(8, {0, 1, 2, 3}), ElemSet::of(8, {0, 4})},
      {&d4, ElemSet::of(8, {0, 1, 2, 3}), ElemSet::of(8, {0, 2, 4, 6})},
      {&q8, ElemSet::of(8, {0, 1, 2, 3}), ElemSet::of(8, {0, 2, 4, 6})},
      {&z12, ElemSet::full(12), ElemSet::of(12, {0})},
  };

  for (const Pair& p : pairs) {
    CAPTURE(p.g->label);
    const SkewBrace at = almost_trivial_from_group(*p.g);
    const auto group_reports = verify_group_ito(*p.g, p.h, p.k);

    const TheoremReport ito = verify_theorem(at, ProductTheorem::ito, p.h, p.k);
    CHECK(ito.applicable == group_reports[0].applicable);
    CHECK(ito.conclusion_holds == group_reports[0].conclusion_holds);

    // The one-sided theorems likewise degenerate to the class-two fact: the
    // ideal conditions become normality and the star series the lower
    // central series.
    const TheoremReport left = verify_theorem(at, ProductTheorem::left, p.h, p.k);
    CHECK(left.applicable == group_reports[1].applicable);
    CHECK(left.conclusion_holds == group_reports[1].conclusion_holds);
    const TheoremReport right =
        verify_theorem(at, ProductTheorem::right, p.h, p.k);
    CHECK(right.applicable == group_reports[1].applicable);
    CHECK(right.conclusion_holds == group_reports[1].conclusion_holds);
  }
}

TEST_CASE("standard corpus is memoized, complete, and red-alert free") {
  const std::vector<CorpusEntry>& corpus = standard_corpus();
  CHECK(&standard_corpus() == &corpus);
  REQUIRE(corpus.size() == 23);

  CHECK(corpus_entry("trivial_z9").brace.order == 9);
  CHECK(corpus_entry("almost_trivial_q8").brace.order == 8);
  CHECK(corpus_entry("family1_p3_m3n3k2l1").brace.order == 729);
  CHECK(corpus_entry("family1_p5_m2n2k1l1").brace.order == 625);
  CHECK(corpus_entry("family2_m4_p7_a").brace.order == 784);
  CHECK(corpus_entry("family2_m2_p3").brace.order == 36);
  CHECK_THROWS_AS(corpus_entry("no_such_entry"), DomainError);

  int applicable_ito = 0;
  bool saw_sharpness = false;
  for (const CorpusEntry& e : corpus) {
    CAPTURE(e.name);
    REQUIRE(e.has_factors);
    REQUIRE(e.b_set.universe() == e.brace.order);
    REQUIRE(e.c_set.universe() == e.brace.order);

    std::vector<TheoremReport> reports;
    for (ProductTheorem which :
         {ProductTheorem::left, ProductTheorem::right, ProductTheorem::ito})
      reports.push_back(verify_theorem(e.brace, which, e.b_set, e.c_set));
    if (reports.back().applicable) ++applicable_ito;
    if (!reports.back().applicable && !reports.back().conclusion_holds)
      saw_sharpness = true;

    for (auto& r : verify_lemma_product(e.brace, e.b_set, e.c_set))
      reports.push_back(std::move(r));
    for (auto& r : verify_star_subgroup_facts(e.brace, e.b_set, e.c_set))
      reports.push_back(std::move(r));
    for (auto& r :
         verify_prop_gen(e.brace, e.b_set, e.c_set, e.b_set, e.c_set))
      reports.push_back(std::move(r));
    if (e.brace.order <= 200)
      for (auto& r : verify_lemma_suite(e.brace)) reports.push_back(std::move(r));

    for (const TheoremReport& r : reports) {
      CAPTURE(r.id);
      CHECK_FALSE(r.red_alert());
      if (!r.applicable) {
        bool some_failed = false;
        for (const HypothesisCheck& h : r.hypotheses)
          if (!h.holds) {
            some_failed = true;
            CHECK(!h.witness.empty());
          }
        CHECK(some_failed);
      }
    }
  }

  // The corpus must witness both applicable instances of the meta-triviality
  // theorem and the sharpness demonstration (inapplicable, conclusion false).
  CHECK(applicable_ito >= 3);
  CHECK(saw_sharpness);
}

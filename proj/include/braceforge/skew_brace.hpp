#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "braceforge/group_table.hpp"

namespace braceforge {

/**
 * Skew brace: one carrier {0..order-1} with two group operations (dot and
 * circle) sharing the identity and satisfying, for all a, b, c,
 *
 *     a o (b . c) = (a o b) . a^-1 . (a o c)
 *
 * lambda[a][b] = a^-1 . (a o b) and lambda_op[a][b] = (a o b) . a^-1 are
 * precomputed; each lambda row is an automorphism of the dot group and
 * a -> lambda[a] is a homomorphism from the circle group.
 */
struct SkewBrace {
  int order = 0;
  GroupTable dot;
  GroupTable circle;
  std::vector<Elem> lambda;     // row-major, length order*order
  std::vector<Elem> lambda_op;  // row-major
  std::string label;

  Elem identity() const { return dot.identity; }
  Elem dot_op(Elem a, Elem b) const { return dot.op(a, b); }
  Elem circle_op(Elem a, Elem b) const { return circle.op(a, b); }
  Elem dot_inv(Elem a) const { return dot.inv[static_cast<std::size_t>(a)]; }
  Elem circle_inv(Elem a) const { return circle.inv[static_cast<std::size_t>(a)]; }
  Elem lam(Elem a, Elem b) const {
    return lambda[static_cast<std::size_t>(a) * order + b];
  }
  Elem lam_op(Elem a, Elem b) const {
    return lambda_op[static_cast<std::size_t>(a) * order + b];
  }
};

// Staged validation of a (dot, circle) table pair. Stages:
//   shape | dot.<axiom> | circle.<axiom> | lambda | relation
// First failure wins; unused witness slots are -1.
struct BraceValidation {
  bool ok = true;
  std::string stage;
  std::array<Elem, 3> witness{-1, -1, -1};
  std::string message;
};

BraceValidation check_brace_tables(const GroupTable& dot, const GroupTable& circle);

// Validates exhaustively, then builds the lambda caches. Throws ShapeError on
// size/identity mismatch, DomainError when either table is not a group, and
// BraceAxiomError (with the violating triple) when the brace relation fails.
SkewBrace build_brace(GroupTable dot, GroupTable circle, std::string label = "");

// circle = dot.
SkewBrace trivial_from_group(const GroupTable& g);

// a o b = b . a; star becomes the group commutator a^-1 b a b^-1.
SkewBrace almost_trivial_from_group(const GroupTable& g);

// a * b = a^-1 . (a o b) . b^-1 = lambda[a][b] . b^-1; measures how far circle
// is from dot and generalizes the commutator.
Elem star(const SkewBrace& br, Elem a, Elem b);

// Dot-subgroup generated by {star(x, y) : x in xs, y in ys}.
ElemSet star_subgroup(const SkewBrace& br, const ElemSet& xs, const ElemSet& ys);

struct DerivedSeries3 {
  ElemSet derived;  // A' = A*A
  ElemSet left3;    // A^3 = A*A'
  ElemSet right3;   // A^(3) = A'*A
};

DerivedSeries3 derived_series3(const SkewBrace& br);

// Same carrier with dot transposed and circle unchanged; revalidated from
// scratch. lambda of the opposite equals lambda_op of the original.
SkewBrace opposite(const SkewBrace& br);

bool is_trivial(const SkewBrace& br);
bool is_almost_trivial(const SkewBrace& br);
// (a . b) o c = (a o c) . c^-1 . (b o c) over all triples.
bool is_two_sided(const SkewBrace& br);
// A' is a trivial sub-brace: star_subgroup(A', A') = {1}.
bool is_meta_trivial(const SkewBrace& br);
bool is_left_nilpotent3(const SkewBrace& br);   // A^3 = {1}
bool is_right_nilpotent3(const SkewBrace& br);  // A^(3) = {1}

struct SubsetStatus {
  bool sub_skew_brace = false;  // subgroup under both operations
  bool ideal = false;           // normal in both groups and a.I = a o I for all a
  bool left_ideal = false;      // dot-subgroup with lambda[a][x] in s
  bool right_ideal = false;     // dot-subgroup with star(x, a) in s
  bool left_ideal_op = false;   // dot-subgroup with lambda_op[a][x] in s
  bool right_ideal_op = false;  // dot-subgroup with a^-1 . lambda_op[x][a] in s

  friend bool operator==(const SubsetStatus&, const SubsetStatus&) = default;
};

SubsetStatus subset_status(const SkewBrace& br, const ElemSet& s);

struct FactorizationCheck {
  bool dot_product = false;     // {x . y} covers the carrier
  bool circle_product = false;  // {x o y} covers the carrier
  bool exact = false;           // b intersect c = {1}
};

// Throws DomainError unless both subsets are sub-skew braces.
FactorizationCheck factorization_check(const SkewBrace& br, const ElemSet& b,
                                       const ElemSet& c);

struct SubsetFact {
  std::string name;
  std::vector<Elem> elems;
  SubsetStatus status;
};

struct AnalysisReport {
  std::string label;
  int order = 0;
  bool trivial = false;
  bool almost_trivial = false;
  bool two_sided = false;
  bool meta_trivial = false;
  bool left_nilpotent3 = false;
  bool right_nilpotent3 = false;
  ElemSet derived;
  ElemSet left3;
  ElemSet right3;
  std::vector<SubsetFact> ideal_facts;
};

AnalysisReport analyze(const SkewBrace& br,
                       const std::vector<std::pair<std::string, ElemSet>>&
                           distinguished_subsets = {});

}  // namespace braceforge

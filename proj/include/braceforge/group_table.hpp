#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/element_set.hpp"

namespace braceforge {

/**
 * Finite group as a complete multiplication table over {0, ..., order-1}.
 * All structure is explicit: mul is row-major (mul[a*order+b] = a*b), inv is
 * a full inverse table, identity is an index. Orders stay small (carrier cap),
 * so O(n^2) tables and O(n^3) scans are the intended working regime.
 */
struct GroupTable {
  int order = 0;
  std::vector<Elem> mul;  // row-major, length order*order
  Elem identity = 0;
  std::vector<Elem> inv;  // length order
  std::string label;

  Elem op(Elem a, Elem b) const {
    return mul[static_cast<std::size_t>(a) * order + b];
  }
  Elem inverse(Elem a) const { return inv[static_cast<std::size_t>(a)]; }
  // g a g^-1
  Elem conj(Elem g, Elem a) const { return op(op(g, a), inv[g]); }
};

// First violated axiom with a witness, or ok. Unused witness slots are -1.
struct GroupValidation {
  bool ok = true;
  std::string axiom;  // closure | identity | inverse | associativity | shape
  std::array<Elem, 3> witness{-1, -1, -1};
  std::string message;
};

// Largest carrier any construction may produce. Defaults to 4096; the
// BRACEFORGE_CARRIER_CAP environment variable overrides at first use.
int carrier_cap();
void set_carrier_cap(int cap);

GroupTable make_cyclic(int n);

// (Z/base)^rank with digit-wise addition; element x has digit i (the i-th
// coordinate, counting from 1 in vector notation) equal to (x / base^i) % base.
GroupTable make_elementary_abelian(int base, int rank);

// Pair encoding (i, j) -> i*h.order + j; stable, shared with the bicrossed
// construction and the file format.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

GroupValidation validate_group(const GroupTable& g);

// Smallest subset containing the identity and gens, closed under mul and inv.
// Breadth-first worklist over a membership bitmap.
ElemSet generated_subgroup(const GroupTable& g, const ElemSet& gens);

bool is_subgroup(const GroupTable& g, const ElemSet& s);

// True iff g s g^-1 stays in s for every g. Throws DomainError when s is not
// a subgroup.
bool is_normal(const GroupTable& g, const ElemSet& s);

bool is_abelian(const GroupTable& g);
bool commutes_within(const GroupTable& g, const ElemSet& s);

// Subgroup generated by all commutators a b a^-1 b^-1.
ElemSet commutator_subgroup(const GroupTable& g);

// Subgroup generated by {x y x^-1 y^-1 : x in xs, y in ys}.
ElemSet commutator_of(const GroupTable& g, const ElemSet& xs, const ElemSet& ys);

int element_order(const GroupTable& g, Elem a);

// {x*y : x in b, y in c} as a bitmap (not necessarily a subgroup).
ElemSet product_set(const GroupTable& g, const ElemSet& b, const ElemSet& c);

// Fixed catalog used by tests and the verification corpus.
//
// Symmetric group on {0,1,2}; elements are one-line permutation arrays in
// lexicographic order:
//   0:[0,1,2]  1:[0,2,1]  2:[1,0,2]  3:[1,2,0]  4:[2,0,1]  5:[2,1,0]
// Product s*t composes right-to-left: (s*t)(i) = s(t(i)). Index 3 is a
// 3-cycle, index 2 a transposition, {0,3,4} the alternating subgroup.
GroupTable make_symmetric3();

// Dihedral group of order 8 on the square; element r^i s^j has index i + 4j
// (i rotation 0..3, j flip 0..1), with s r s = r^-1.
GroupTable make_dihedral8();

// Quaternion group {+-1, +-i, +-j, +-k}; element i^a j^b has index a + 4b.
GroupTable make_quaternion8();

// Multiplicative group of units of Z/n, elements sorted ascending by residue.
// When reps is non-null it receives the residue represented by each index.
GroupTable make_units_mod(int n, std::vector<int>* reps = nullptr);

/**
 * Group homomorphism as a full image table over the domain carrier.
 * Pointers are non-owning; the referenced tables must outlive the hom.
 * certified flips to true only via certify_hom.
 */
struct GroupHomTable {
  const GroupTable* domain = nullptr;
  const GroupTable* codomain = nullptr;
  std::vector<Elem> image;
  bool certified = false;
};

struct HomCertification {
  GroupHomTable hom;
  // First pair (a, b) with image[a*b] != image[a]*image[b], when present.
  std::optional<std::array<Elem, 2>> witness;
  bool ok() const { return !witness.has_value(); }
};

// Full pair scan of the homomorphism law. Throws ShapeError when the image
// table does not match the domain order or hits outside the codomain.
HomCertification certify_hom(GroupHomTable h);

}  // namespace braceforge

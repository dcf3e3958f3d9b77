// Skew braces on B x C from a pair of mutually compatible actions.
//
// Given groups B and C with C abelian, a homomorphism phi: C -> Aut(B), and a
// homomorphism psi: B -> Aut(C) satisfying phi[psi_b(c)] = phi[c] for all b, c,
// the carrier B x C becomes a skew brace with
//
//   (b1,c1) . (b2,c2) = (b1 phi_{c1}(b2), c1 c2)        (semidirect B x| C)
//   (b1,c1) o (b2,c2) = (b1 b2, c1 psi_{b1}(c2))        (semidirect B |x C)
//
// Certification checks every hypothesis exhaustively and reports a witness on
// failure; construction refuses uncertified data. The meta-triviality
// criterion and the block ideal profile are evaluated directly on the actions,
// without building the order-|B||C| tables.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "braceforge/group_table.hpp"
#include "braceforge/skew_brace.hpp"

namespace braceforge {

struct BicrossedData {
  GroupTable b_group;
  GroupTable c_group;
  // phi[c] is a permutation of B's carrier; psi[b] a permutation of C's.
  std::vector<std::vector<Elem>> phi;
  std::vector<std::vector<Elem>> psi;
  bool compat_certified = false;
  std::string label;
};

struct BicrossedCertification {
  // Stages in check order; "none" means every hypothesis verified.
  enum class Failure {
    none,
    c_not_abelian,      // witness (c1, c2, -)
    phi_not_bijective,  // witness (c, x, -) two preimages of phi[c][x]
    phi_not_mult,       // witness (c, x, y)
    phi_not_hom,        // witness (c1, c2, x)
    psi_not_bijective,
    psi_not_mult,
    psi_not_hom,
    compat,             // witness (b, c, x): phi[psi_b(c)][x] != phi[c][x]
  };

  BicrossedData data;  // compat_certified set iff failure == none
  Failure failure = Failure::none;
  std::array<Elem, 3> witness{-1, -1, -1};
  std::string message;

  bool ok() const { return failure == Failure::none; }
};

// Exhaustively verifies: C abelian, each phi[c] an automorphism of B, each
// psi[b] an automorphism of C, c -> phi[c] and b -> psi[b] homomorphisms, and
// the compatibility law. Throws DomainError when C is not abelian and
// ShapeError on malformed tables; every other failure is returned with its
// witness. On success the returned copy has compat_certified = true.
BicrossedCertification certify_bicrossed(BicrossedData data);

// Pair encoding (b, c) -> b*|C| + c, matching direct_product.
Elem pair_index(const BicrossedData& data, Elem b, Elem c);

// {(b, 1) : b in B} and {(1, c) : c in C} in the pair encoding.
ElemSet b_block_set(const BicrossedData& data);
ElemSet c_block_set(const BicrossedData& data);

// Builds the brace on B x C and runs full table validation on the result.
// Throws DomainError unless data.compat_certified, CapacityError when
// |B||C| exceeds the carrier cap.
SkewBrace build_bicrossed_brace(const BicrossedData& data);

// Decides meta-triviality of the (possibly never-built) brace by checking
//   psi_u(t) = t  for  u = phi_{c1}(b1) b1^-1,  t = psi_{b2}(c2) c2^-1
// over every quadruple (b1, c1, b2, c2). Requires certified data.
bool criterion_meta_trivial(const BicrossedData& data);

// Ideal statuses of the two coordinate blocks, predicted from the actions
// alone. Both blocks are always left ideals of the brace; the remaining
// statuses are controlled by whether the opposite-side action is trivial.
struct BlockPrediction {
  bool left_ideal = false;
  bool right_ideal = false;
  bool left_ideal_op = false;
  bool right_ideal_op = false;
};

struct IdealProfile {
  bool phi_trivial = false;
  bool psi_trivial = false;
  BlockPrediction b_block;  // B x 1
  BlockPrediction c_block;  // 1 x C
};

IdealProfile ideal_profile(const BicrossedData& data);

}  // namespace braceforge

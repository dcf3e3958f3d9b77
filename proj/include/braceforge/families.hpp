// Two parameter families of bicrossed data.
//
// Family 1: B = Z/p^m and C = Z/p^n for an odd prime p, with scalar actions
//   phi_c(x) = (1+p^{m-k})^c x mod p^m,   psi_b(y) = (1+p^{n-l})^b y mod p^n,
// for (m,n,k,l) subject to k <= min(m,n), l <= min(m,n), k <= n-l. Every
// certified instance yields a meta-trivial brace.
//
// Family 2: B = (Z/2)^m and C = (Z/p)^n (n >= 2) with phi acting through a
// matrix P in GL_m(Z/2) of order exactly p raised to the first coordinate of
// c, and psi acting through E = diag(1, eps_2, ..., eps_n) with eps_i = +-1
// raised to the first coordinate of b. These braces fail meta-triviality
// whenever some power P^v - I has a nonzero first row.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/bicrossed.hpp"
#include "braceforge/matrix_mod.hpp"

namespace braceforge {

struct Family1Params {
  std::int64_t p = 3;
  int m = 1;
  int n = 1;
  int k = 1;
  int l = 1;
};

// Builds the literal scalar-action data and attempts certification;
// compat_certified records the outcome. At k = m (or l = n) the multiplier
// degenerates to 2 and the formula can stop being a homomorphism, in which
// case the returned data is honestly uncertified. Throws ParameterError
// naming the violated constraint, CapacityError when p^m or p^n exceeds the
// carrier cap.
BicrossedData family1_data(const Family1Params& params);

// All (m,n,k,l) in [1,max]^4 with k <= min(m,n), l <= min(m,n) and k <= n-l,
// in lexicographic order. require_nontrivial additionally demands k <= m-1
// and l <= n-1, keeping only instances where both scalar actions are
// nontrivial of p-power order.
std::vector<std::array<int, 4>> enumerate_quadruples(int max,
                                                     bool require_nontrivial);

struct Family2Params {
  std::int64_t p = 3;
  int m = 2;
  int n = 2;
  MatrixModM P;            // m x m over Z/2, order exactly p
  std::vector<int> eps;    // n entries of +-1; eps[0] must be +1, some -1
};

BicrossedData family2_data(const Family2Params& params);

// Least v in [1, p) such that P^v - I has a nonzero entry in its first row,
// if any; such a v certifies the family-2 brace as non-meta-trivial.
// Throws DomainError unless P has order exactly p.
std::optional<std::int64_t> cri_hypothesis(const MatrixModM& P, std::int64_t p);

// Stock matrices of odd prime order over Z/2 used by the verification corpus;
// all six admit v = 1 in cri_hypothesis.
struct Family2Example {
  std::string name;
  int m;
  std::int64_t p;
  MatrixModM P;
};

const std::vector<Family2Example>& family2_examples();

// Meta-triviality of a family-1 instance decided purely by modular scalar
// arithmetic on deduplicated action images; independent cross-check for
// criterion_meta_trivial.
bool family1_criterion_by_scalars(const Family1Params& params);

}  // namespace braceforge

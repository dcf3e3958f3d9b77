#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace braceforge {

/**
 * Dense integer matrix with entries kept as canonical residues mod modulus.
 * Exact arithmetic only; moduli are small (2 or an odd prime power here).
 */
struct MatrixModM {
  int rows = 0;
  int cols = 0;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  std::int64_t& at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  friend bool operator==(const MatrixModM&, const MatrixModM&) = default;
};

MatrixModM mat_from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                         std::int64_t modulus);
MatrixModM mat_identity(int n, std::int64_t modulus);
MatrixModM mat_mul(const MatrixModM& a, const MatrixModM& b);
MatrixModM mat_sub(const MatrixModM& a, const MatrixModM& b);
MatrixModM mat_pow(const MatrixModM& a, std::uint64_t e);

// Least e >= 1 with a^e = I, or nullopt once e exceeds the cap (which also
// covers singular matrices, whose powers never return to I). cap = 0 means
// the default bound 2 * modulus^rows.
std::optional<std::uint64_t> mat_order(const MatrixModM& a, std::uint64_t cap = 0);

// |GL_m(Z/2)| = 2^(m choose 2) * prod_{i=1..m} (2^i - 1).
std::uint64_t gl2_group_order(int m);

// Least v in [1, p) such that a^v - I has a nonzero entry in the first row.
std::optional<std::int64_t> min_power_moving_first_row(const MatrixModM& a,
                                                       std::int64_t p);

struct Gl2SearchHit {
  MatrixModM matrix;
  // Some v in [1, p) makes matrix^v - I nonzero in the first row.
  bool moves_first_row = false;
};

// Up to budget matrices in GL_m(Z/2) of exact order p, in ascending order of
// the row-major bit pattern. Throws NoSolutionError when p does not divide
// |GL_m(Z/2)| and CapacityError when m is too large to enumerate.
std::vector<Gl2SearchHit> search_gl2_order(int m, std::int64_t p, int budget);

}  // namespace braceforge

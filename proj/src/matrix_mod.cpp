#include "braceforge/matrix_mod.hpp"

#include <limits>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void require_square(const MatrixModM& a) {
  if (a.rows != a.cols) throw ShapeError("matrix must be square");
}

}  // namespace

MatrixModM mat_from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                         std::int64_t modulus) {
  if (modulus < 2) throw ShapeError("matrix modulus must be >= 2");
  if (rows.empty()) throw ShapeError("matrix needs at least one row");
  MatrixModM a;
  a.rows = static_cast<int>(rows.size());
  a.cols = static_cast<int>(rows.front().size());
  a.modulus = modulus;
  a.entries.reserve(static_cast<std::size_t>(a.rows) * a.cols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != a.cols)
      throw ShapeError("matrix rows have unequal lengths");
    for (std::int64_t v : row) a.entries.push_back(mod_reduce(v, modulus));
  }
  return a;
}

MatrixModM mat_identity(int n, std::int64_t modulus) {
  if (n < 1) throw ShapeError("identity matrix needs positive size");
  if (modulus < 2) throw ShapeError("matrix modulus must be >= 2");
  MatrixModM a;
  a.rows = a.cols = n;
  a.modulus = modulus;
  a.entries.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a.at(i, i) = 1;
  return a;
}

MatrixModM mat_mul(const MatrixModM& a, const MatrixModM& b) {
  if (a.cols != b.rows) throw ShapeError("matrix dimensions do not match");
  if (a.modulus != b.modulus) throw ShapeError("matrix moduli do not match");
  MatrixModM out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.modulus = a.modulus;
  out.entries.assign(static_cast<std::size_t>(out.rows) * out.cols, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        // Entries < modulus <= 2^31 keep products inside int64.
        out.at(i, j) = (out.at(i, j) + aik * b.at(k, j)) % out.modulus;
      }
    }
  return out;
}

MatrixModM mat_sub(const MatrixModM& a, const MatrixModM& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeError("matrix dimensions do not match");
  if (a.modulus != b.modulus) throw ShapeError("matrix moduli do not match");
  MatrixModM out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i] = mod_reduce(out.entries[i] - b.entries[i], out.modulus);
  return out;
}

MatrixModM mat_pow(const MatrixModM& a, std::uint64_t e) {
  require_square(a);
  MatrixModM result = mat_identity(a.rows, a.modulus);
  MatrixModM base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return result;
}

std::optional<std::uint64_t> mat_order(const MatrixModM& a, std::uint64_t cap) {
  require_square(a);
  if (cap == 0) {
    cap = 2;
    for (int i = 0; i < a.rows; ++i) {
      if (cap > std::numeric_limits<std::uint64_t>::max() /
                    static_cast<std::uint64_t>(a.modulus)) {
        cap = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      cap *= static_cast<std::uint64_t>(a.modulus);
    }
  }
  const MatrixModM id = mat_identity(a.rows, a.modulus);
  MatrixModM power = a;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (power == id) return e;
    power = mat_mul(power, a);
  }
  return std::nullopt;
}

std::uint64_t gl2_group_order(int m) {
  if (m < 1) throw ShapeError("matrix size must be >= 1");
  std::uint64_t out = std::uint64_t{1} << (static_cast<unsigned>(m) * (m - 1) / 2);
  for (int i = 1; i <= m; ++i) out *= (std::uint64_t{1} << i) - 1;
  return out;
}

std::optional<std::int64_t> min_power_moving_first_row(const MatrixModM& a,
                                                       std::int64_t p) {
  require_square(a);
  const MatrixModM id = mat_identity(a.rows, a.modulus);
  MatrixModM power = a;
  for (std::int64_t v = 1; v < p; ++v) {
    const MatrixModM diff = mat_sub(power, id);
    for (int j = 0; j < diff.cols; ++j)
      if (diff.at(0, j) != 0) return v;
    power = mat_mul(power, a);
  }
  return std::nullopt;
}

std::vector<Gl2SearchHit> search_gl2_order(int m, std::int64_t p, int budget) {
  if (m < 1) throw ShapeError("matrix size must be >= 1");
  if (m > 4) throw CapacityError("GL search enumerates bit patterns; m > 4 unsupported");
  if (budget < 1) throw ParameterError("budget must be >= 1");
  if (gl2_group_order(m) % static_cast<std::uint64_t>(p) != 0)
    throw NoSolutionError("no element of order " + std::to_string(p) +
                          " in GL_" + std::to_string(m) + "(Z/2)");

  std::vector<Gl2SearchHit> hits;
  const int bits = m * m;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < limit && static_cast<int>(hits.size()) < budget;
       ++mask) {
    MatrixModM cand;
    cand.rows = cand.cols = m;
    cand.modulus = 2;
    cand.entries.resize(static_cast<std::size_t>(bits));
    for (int i = 0; i < bits; ++i)
      cand.entries[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    const auto ord = mat_order(cand, static_cast<std::uint64_t>(p));
    if (!ord || *ord != static_cast<std::uint64_t>(p)) continue;
    Gl2SearchHit hit;
    hit.moves_first_row = min_power_moving_first_row(cand, p).has_value();
    hit.matrix = std::move(cand);
    hits.push_back(std::move(hit));
  }
  return hits;
}

}  // namespace braceforge

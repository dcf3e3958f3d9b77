#include "braceforge/families.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// p^e, refusing to grow past the carrier cap (all moduli here are table
// indices, so anything above the cap is unusable anyway).
std::int64_t checked_pow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > carrier_cap())
      throw CapacityError("family modulus " + std::to_string(p) + "^" +
                          std::to_string(e) + " exceeds carrier cap " +
                          std::to_string(carrier_cap()));
  }
  return r;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

void check_family1_constraints(const Family1Params& q) {
  if (!is_odd_prime(q.p))
    throw ParameterError("family1: p must be an odd prime, got " +
                         std::to_string(q.p));
  if (q.m < 1 || q.n < 1 || q.k < 1 || q.l < 1)
    throw ParameterError("family1: m, n, k, l must be positive");
  const int mn = std::min(q.m, q.n);
  const auto tuple = [&q] {
    return " (m=" + std::to_string(q.m) + ", n=" + std::to_string(q.n) +
           ", k=" + std::to_string(q.k) + ", l=" + std::to_string(q.l) + ")";
  };
  if (q.k > mn)
    throw ParameterError("family1 constraint violated: k <= min(m,n)" + tuple());
  if (q.l > mn)
    throw ParameterError("family1 constraint violated: l <= min(m,n)" + tuple());
  if (q.k > q.n - q.l)
    throw ParameterError("family1 constraint violated: k <= n-l" + tuple());
}

// Digit-wise scalar action y -> (s * y per digit) on [0, p^n) is just y -> s*y
// mod p^n for scalars, so family 1 rows are plain modular multiplications.
std::vector<std::vector<Elem>> scalar_rows(std::int64_t multiplier,
                                           std::int64_t index_count,
                                           std::int64_t mod) {
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(index_count));
  for (std::int64_t i = 0; i < index_count; ++i) {
    const std::int64_t s = powmod(multiplier, i, mod);
    std::vector<Elem>& row = rows[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(mod));
    for (std::int64_t x = 0; x < mod; ++x)
      row[static_cast<std::size_t>(x)] = static_cast<Elem>(s * x % mod);
  }
  return rows;
}

// Bit-vector action of an m x m matrix over Z/2; index bit i = coordinate i+1.
std::vector<Elem> bit_action(const MatrixModM& mat) {
  const int m = mat.rows;
  std::vector<unsigned> row_masks(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      if (mat.at(r, c)) row_masks[static_cast<std::size_t>(r)] |= 1u << c;
  const int count = 1 << m;
  std::vector<Elem> action(static_cast<std::size_t>(count));
  for (int x = 0; x < count; ++x) {
    unsigned y = 0;
    for (int r = 0; r < m; ++r)
      y |= static_cast<unsigned>(
               __builtin_popcount(row_masks[static_cast<std::size_t>(r)] &
                                  static_cast<unsigned>(x)) &
               1)
           << r;
    action[static_cast<std::size_t>(x)] = static_cast<Elem>(y);
  }
  return action;
}

}  // namespace

BicrossedData family1_data(const Family1Params& params) {
  check_family1_constraints(params);
  const std::int64_t bmod = checked_pow(params.p, params.m);
  const std::int64_t cmod = checked_pow(params.p, params.n);
  const std::int64_t phi_mult = (1 + checked_pow(params.p, params.m - params.k)) % bmod;
  const std::int64_t psi_mult = (1 + checked_pow(params.p, params.n - params.l)) % cmod;

  BicrossedData data;
  data.b_group = make_cyclic(static_cast<int>(bmod));
  data.c_group = make_cyclic(static_cast<int>(cmod));
  data.phi = scalar_rows(phi_mult, cmod, bmod);
  data.psi = scalar_rows(psi_mult, bmod, cmod);
  data.label = "family1(p=" + std::to_string(params.p) + ",m=" +
               std::to_string(params.m) + ",n=" + std::to_string(params.n) +
               ",k=" + std::to_string(params.k) + ",l=" + std::to_string(params.l) +
               ")";
  return certify_bicrossed(std::move(data)).data;
}

std::vector<std::array<int, 4>> enumerate_quadruples(int max,
                                                     bool require_nontrivial) {
  if (max < 1) throw ParameterError("enumerate_quadruples: max must be >= 1");
  std::vector<std::array<int, 4>> out;
  for (int m = 1; m <= max; ++m)
    for (int n = 1; n <= max; ++n) {
      const int mn = std::min(m, n);
      for (int k = 1; k <= max; ++k) {
        if (k > mn) break;
        for (int l = 1; l <= max; ++l) {
          if (l > mn || k > n - l) break;
          if (require_nontrivial && (k > m - 1 || l > n - 1)) continue;
          out.push_back({m, n, k, l});
        }
      }
    }
  return out;
}

BicrossedData family2_data(const Family2Params& params) {
  if (!is_odd_prime(params.p))
    throw ParameterError("family2: p must be an odd prime, got " +
                         std::to_string(params.p));
  if (params.m < 1) throw ParameterError("family2: m must be positive");
  if (params.n < 2) throw ParameterError("family2: n must be >= 2");
  if (params.P.modulus != 2)
    throw ParameterError("family2: P must be a matrix over Z/2");
  if (params.P.rows != params.m || params.P.cols != params.m)
    throw ParameterError("family2: P must be " + std::to_string(params.m) + " x " +
                         std::to_string(params.m));
  const auto order = mat_order(params.P);
  if (!order)
    throw ParameterError("family2: P is singular or its order exceeds the cap");
  if (static_cast<std::int64_t>(*order) != params.p)
    throw ParameterError("family2: P has order " + std::to_string(*order) +
                         ", expected " + std::to_string(params.p));
  if (static_cast<int>(params.eps.size()) != params.n)
    throw ParameterError("family2: eps must have n entries");
  for (const int e : params.eps)
    if (e != 1 && e != -1)
      throw ParameterError("family2: eps entries must be +1 or -1");
  if (params.eps[0] != 1)
    throw ParameterError("family2: first diagonal entry of E must be +1");
  if (std::all_of(params.eps.begin(), params.eps.end(),
                  [](int e) { return e == 1; }))
    throw ParameterError("family2: E must not be the identity matrix");

  BicrossedData data;
  data.b_group = make_elementary_abelian(2, params.m);
  data.c_group = make_elementary_abelian(static_cast<int>(params.p), params.n);

  // phi depends on c only through its first coordinate: the power of P.
  std::vector<std::vector<Elem>> actions(static_cast<std::size_t>(params.p));
  MatrixModM power = mat_identity(params.m, 2);
  for (std::int64_t v = 0; v < params.p; ++v) {
    actions[static_cast<std::size_t>(v)] = bit_action(power);
    power = mat_mul(power, params.P);
  }
  data.phi.resize(static_cast<std::size_t>(data.c_group.order));
  for (Elem c = 0; c < data.c_group.order; ++c)
    data.phi[static_cast<std::size_t>(c)] =
        actions[static_cast<std::size_t>(c % params.p)];

  // psi depends on b only through its first coordinate: apply E or not.
  std::vector<Elem> identity_row(static_cast<std::size_t>(data.c_group.order));
  std::vector<Elem> e_row(static_cast<std::size_t>(data.c_group.order));
  for (Elem y = 0; y < data.c_group.order; ++y) {
    identity_row[static_cast<std::size_t>(y)] = y;
    std::int64_t out = 0;
    std::int64_t pw = 1;
    for (int i = 0; i < params.n; ++i) {
      std::int64_t digit = (y / pw) % params.p;
      if (params.eps[static_cast<std::size_t>(i)] == -1)
        digit = (params.p - digit) % params.p;
      out += digit * pw;
      pw *= params.p;
    }
    e_row[static_cast<std::size_t>(y)] = static_cast<Elem>(out);
  }
  data.psi.resize(static_cast<std::size_t>(data.b_group.order));
  for (Elem b = 0; b < data.b_group.order; ++b)
    data.psi[static_cast<std::size_t>(b)] = (b & 1) ? e_row : identity_row;

  data.label = "family2(p=" + std::to_string(params.p) + ",m=" +
               std::to_string(params.m) + ",n=" + std::to_string(params.n) + ")";
  return certify_bicrossed(std::move(data)).data;
}

std::optional<std::int64_t> cri_hypothesis(const MatrixModM& P, std::int64_t p) {
  const auto order = mat_order(P);
  if (!order || static_cast<std::int64_t>(*order) != p)
    throw DomainError("cri_hypothesis: matrix must have order exactly " +
                      std::to_string(p));
  return min_power_moving_first_row(P, p);
}

const std::vector<Family2Example>& family2_examples() {
  static const std::vector<Family2Example> examples = [] {
    std::vector<Family2Example> v;
    v.push_back({"m2_p3", 2, 3, mat_from_rows({{0, 1}, {1, 1}}, 2)});
    v.push_back({"m3_p3", 3, 3, mat_from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 2)});
    v.push_back({"m3_p7", 3, 7, mat_from_rows({{0, 0, 1}, {1, 1, 0}, {0, 1, 0}}, 2)});
    v.push_back({"m4_p7_a", 4, 7,
                 mat_from_rows({{0, 1, 1, 1}, {1, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}, 2)});
    v.push_back({"m4_p5", 4, 5,
                 mat_from_rows({{0, 1, 0, 0}, {1, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 0, 0}}, 2)});
    v.push_back({"m4_p7_b", 4, 7,
                 mat_from_rows({{0, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}}, 2)});
    return v;
  }();
  return examples;
}

bool family1_criterion_by_scalars(const Family1Params& params) {
  check_family1_constraints(params);
  const std::int64_t bmod = checked_pow(params.p, params.m);
  const std::int64_t cmod = checked_pow(params.p, params.n);
  const std::int64_t phi_mult = (1 + checked_pow(params.p, params.m - params.k)) % bmod;
  const std::int64_t psi_mult = (1 + checked_pow(params.p, params.n - params.l)) % cmod;

  // u-values phi_c(b) - b and t-values psi_b(c) - c, deduplicated.
  std::vector<bool> u_seen(static_cast<std::size_t>(bmod), false);
  for (std::int64_t c = 0; c < cmod; ++c) {
    const std::int64_t s = powmod(phi_mult, c, bmod);
    for (std::int64_t b = 0; b < bmod; ++b)
      u_seen[static_cast<std::size_t>((s - 1 + bmod) * b % bmod)] = true;
  }
  std::vector<bool> t_seen(static_cast<std::size_t>(cmod), false);
  for (std::int64_t b = 0; b < bmod; ++b) {
    const std::int64_t s = powmod(psi_mult, b, cmod);
    for (std::int64_t c = 0; c < cmod; ++c)
      t_seen[static_cast<std::size_t>((s - 1 + cmod) * c % cmod)] = true;
  }

  for (std::int64_t u = 0; u < bmod; ++u) {
    if (!u_seen[static_cast<std::size_t>(u)]) continue;
    const std::int64_t s = powmod(psi_mult, u, cmod);
    for (std::int64_t t = 0; t < cmod; ++t)
      if (t_seen[static_cast<std::size_t>(t)] && s * t % cmod != t) return false;
  }
  return true;
}

}  // namespace braceforge

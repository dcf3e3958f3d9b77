#include "braceforge/bicrossed.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

using Failure = BicrossedCertification::Failure;

// Permutation tables act on the left: (u after v)(x) = u[v[x]].
bool rows_equal(const std::vector<Elem>& u, const std::vector<Elem>& v) {
  return u == v;
}

void require_shape(const BicrossedData& data) {
  const std::size_t nb = static_cast<std::size_t>(data.b_group.order);
  const std::size_t nc = static_cast<std::size_t>(data.c_group.order);
  if (!validate_group(data.b_group).ok)
    throw DomainError("bicrossed data: B is not a valid group");
  if (!validate_group(data.c_group).ok)
    throw DomainError("bicrossed data: C is not a valid group");
  if (data.phi.size() != nc)
    throw ShapeError("bicrossed data: phi must have one row per element of C");
  if (data.psi.size() != nb)
    throw ShapeError("bicrossed data: psi must have one row per element of B");
  for (const auto& row : data.phi) {
    if (row.size() != nb)
      throw ShapeError("bicrossed data: phi rows must have |B| entries");
    for (const Elem x : row)
      if (x < 0 || x >= data.b_group.order)
        throw ShapeError("bicrossed data: phi entry out of range");
  }
  for (const auto& row : data.psi) {
    if (row.size() != nc)
      throw ShapeError("bicrossed data: psi rows must have |C| entries");
    for (const Elem x : row)
      if (x < 0 || x >= data.c_group.order)
        throw ShapeError("bicrossed data: psi entry out of range");
  }
}

// First (index, x, y) with row[x*y] != row[x]*row[y], if any.
bool find_non_mult(const GroupTable& g, const std::vector<std::vector<Elem>>& rows,
                   std::array<Elem, 3>& witness) {
  for (Elem i = 0; i < static_cast<Elem>(rows.size()); ++i) {
    const std::vector<Elem>& row = rows[static_cast<std::size_t>(i)];
    for (Elem x = 0; x < g.order; ++x)
      for (Elem y = 0; y < g.order; ++y)
        if (row[static_cast<std::size_t>(g.op(x, y))] !=
            g.op(row[static_cast<std::size_t>(x)], row[static_cast<std::size_t>(y)])) {
          witness = {i, x, y};
          return true;
        }
  }
  return false;
}

bool find_non_bijective(int n, const std::vector<std::vector<Elem>>& rows,
                        std::array<Elem, 3>& witness) {
  std::vector<Elem> seen_at(static_cast<std::size_t>(n));
  for (Elem i = 0; i < static_cast<Elem>(rows.size()); ++i) {
    seen_at.assign(static_cast<std::size_t>(n), -1);
    const std::vector<Elem>& row = rows[static_cast<std::size_t>(i)];
    for (Elem x = 0; x < n; ++x) {
      Elem& slot = seen_at[static_cast<std::size_t>(row[static_cast<std::size_t>(x)])];
      if (slot >= 0) {
        witness = {i, slot, x};
        return true;
      }
      slot = x;
    }
  }
  return false;
}

// First (i, j, x) where rows[i*j] != rows[i] after rows[j], if any.
bool find_non_hom(const GroupTable& index_group, int point_count,
                  const std::vector<std::vector<Elem>>& rows,
                  std::array<Elem, 3>& witness) {
  for (Elem i = 0; i < index_group.order; ++i)
    for (Elem j = 0; j < index_group.order; ++j) {
      const std::vector<Elem>& composite =
          rows[static_cast<std::size_t>(index_group.op(i, j))];
      const std::vector<Elem>& outer = rows[static_cast<std::size_t>(i)];
      const std::vector<Elem>& inner = rows[static_cast<std::size_t>(j)];
      for (Elem x = 0; x < point_count; ++x)
        if (composite[static_cast<std::size_t>(x)] !=
            outer[static_cast<std::size_t>(inner[static_cast<std::size_t>(x)])]) {
          witness = {i, j, x};
          return true;
        }
    }
  return false;
}

}  // namespace

BicrossedCertification certify_bicrossed(BicrossedData data) {
  require_shape(data);

  BicrossedCertification cert;
  cert.failure = Failure::none;

  if (!is_abelian(data.c_group))
    throw DomainError("bicrossed data: C must be abelian");

  std::array<Elem, 3> w{-1, -1, -1};
  if (find_non_bijective(data.b_group.order, data.phi, w)) {
    cert.failure = Failure::phi_not_bijective;
    cert.message = "phi[" + std::to_string(w[0]) + "] maps " + std::to_string(w[1]) +
                   " and " + std::to_string(w[2]) + " to the same element";
  } else if (find_non_mult(data.b_group, data.phi, w)) {
    cert.failure = Failure::phi_not_mult;
    cert.message = "phi[" + std::to_string(w[0]) + "] is not multiplicative at (" +
                   std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
  } else if (find_non_hom(data.c_group, data.b_group.order, data.phi, w)) {
    cert.failure = Failure::phi_not_hom;
    cert.message = "phi is not a homomorphism: phi[" + std::to_string(w[0]) + " + " +
                   std::to_string(w[1]) + "] differs at " + std::to_string(w[2]);
  } else if (find_non_bijective(data.c_group.order, data.psi, w)) {
    cert.failure = Failure::psi_not_bijective;
    cert.message = "psi[" + std::to_string(w[0]) + "] maps " + std::to_string(w[1]) +
                   " and " + std::to_string(w[2]) + " to the same element";
  } else if (find_non_mult(data.c_group, data.psi, w)) {
    cert.failure = Failure::psi_not_mult;
    cert.message = "psi[" + std::to_string(w[0]) + "] is not multiplicative at (" +
                   std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
  } else if (find_non_hom(data.b_group, data.c_group.order, data.psi, w)) {
    cert.failure = Failure::psi_not_hom;
    cert.message = "psi is not a homomorphism: psi[" + std::to_string(w[0]) + " * " +
                   std::to_string(w[1]) + "] differs at " + std::to_string(w[2]);
  } else {
    // Compatibility: the phi row selected by psi_b(c) is the row of c itself.
    [&] {
      for (Elem b = 0; b < data.b_group.order; ++b)
        for (Elem c = 0; c < data.c_group.order; ++c) {
          const std::vector<Elem>& moved =
              data.phi[static_cast<std::size_t>(data.psi[static_cast<std::size_t>(b)]
                                                        [static_cast<std::size_t>(c)])];
          const std::vector<Elem>& same = data.phi[static_cast<std::size_t>(c)];
          if (!rows_equal(moved, same)) {
            for (Elem x = 0; x < data.b_group.order; ++x)
              if (moved[static_cast<std::size_t>(x)] != same[static_cast<std::size_t>(x)]) {
                w = {b, c, x};
                break;
              }
            cert.failure = Failure::compat;
            cert.message = "compatibility fails at (b, c) = (" + std::to_string(b) +
                           ", " + std::to_string(c) + ")";
            return;
          }
        }
    }();
  }

  cert.witness = w;
  data.compat_certified = cert.ok();
  cert.data = std::move(data);
  return cert;
}

Elem pair_index(const BicrossedData& data, Elem b, Elem c) {
  return b * data.c_group.order + c;
}

ElemSet b_block_set(const BicrossedData& data) {
  const int order = data.b_group.order * data.c_group.order;
  ElemSet s(order);
  for (Elem b = 0; b < data.b_group.order; ++b)
    s.insert(pair_index(data, b, data.c_group.identity));
  return s;
}

ElemSet c_block_set(const BicrossedData& data) {
  const int order = data.b_group.order * data.c_group.order;
  ElemSet s(order);
  for (Elem c = 0; c < data.c_group.order; ++c)
    s.insert(pair_index(data, data.b_group.identity, c));
  return s;
}

SkewBrace build_bicrossed_brace(const BicrossedData& data) {
  if (!data.compat_certified)
    throw DomainError("build_bicrossed_brace requires certified data");
  const long long order =
      static_cast<long long>(data.b_group.order) * data.c_group.order;
  if (order > carrier_cap())
    throw CapacityError("bicrossed brace order " + std::to_string(order) +
                        " exceeds carrier cap " + std::to_string(carrier_cap()));

  const GroupTable& bg = data.b_group;
  const GroupTable& cg = data.c_group;
  const int n = static_cast<int>(order);

  GroupTable dot;
  dot.order = n;
  dot.identity = pair_index(data, bg.identity, cg.identity);
  dot.label = data.label.empty() ? "bicrossed_dot" : data.label + "_dot";
  dot.mul.resize(static_cast<std::size_t>(n) * n);

  GroupTable circle;
  circle.order = n;
  circle.identity = dot.identity;
  circle.label = data.label.empty() ? "bicrossed_circle" : data.label + "_circle";
  circle.mul.resize(static_cast<std::size_t>(n) * n);

  for (Elem b1 = 0; b1 < bg.order; ++b1)
    for (Elem c1 = 0; c1 < cg.order; ++c1) {
      const Elem a1 = pair_index(data, b1, c1);
      Elem* dot_row = dot.mul.data() + static_cast<std::size_t>(a1) * n;
      Elem* circ_row = circle.mul.data() + static_cast<std::size_t>(a1) * n;
      const std::vector<Elem>& phi_c1 = data.phi[static_cast<std::size_t>(c1)];
      const std::vector<Elem>& psi_b1 = data.psi[static_cast<std::size_t>(b1)];
      for (Elem b2 = 0; b2 < bg.order; ++b2)
        for (Elem c2 = 0; c2 < cg.order; ++c2) {
          const Elem a2 = pair_index(data, b2, c2);
          dot_row[a2] = pair_index(
              data, bg.op(b1, phi_c1[static_cast<std::size_t>(b2)]), cg.op(c1, c2));
          circ_row[a2] = pair_index(data, bg.op(b1, b2),
                                    cg.op(c1, psi_b1[static_cast<std::size_t>(c2)]));
        }
    }

  dot.inv.resize(static_cast<std::size_t>(n));
  circle.inv.resize(static_cast<std::size_t>(n));
  for (Elem b = 0; b < bg.order; ++b)
    for (Elem c = 0; c < cg.order; ++c) {
      const Elem a = pair_index(data, b, c);
      // (b, c)^-1 under dot is (phi_{c^-1}(b^-1), c^-1); under circle it is
      // (b^-1, psi_{b^-1}(c^-1)).
      const Elem ci = cg.inv[static_cast<std::size_t>(c)];
      const Elem bi = bg.inv[static_cast<std::size_t>(b)];
      dot.inv[static_cast<std::size_t>(a)] = pair_index(
          data, data.phi[static_cast<std::size_t>(ci)][static_cast<std::size_t>(bi)], ci);
      circle.inv[static_cast<std::size_t>(a)] = pair_index(
          data, bi, data.psi[static_cast<std::size_t>(bi)][static_cast<std::size_t>(ci)]);
    }

  return build_brace(std::move(dot), std::move(circle),
                     data.label.empty() ? "bicrossed" : data.label);
}

bool criterion_meta_trivial(const BicrossedData& data) {
  if (!data.compat_certified)
    throw DomainError("criterion_meta_trivial requires certified data");
  const GroupTable& bg = data.b_group;
  const GroupTable& cg = data.c_group;

  // t(b2, c2) = psi_{b2}(c2) c2^-1 depends on its pair only; cache the rows.
  std::vector<Elem> t_table(static_cast<std::size_t>(bg.order) * cg.order);
  for (Elem b2 = 0; b2 < bg.order; ++b2) {
    const std::vector<Elem>& psi_b2 = data.psi[static_cast<std::size_t>(b2)];
    Elem* row = t_table.data() + static_cast<std::size_t>(b2) * cg.order;
    for (Elem c2 = 0; c2 < cg.order; ++c2)
      row[c2] = cg.op(psi_b2[static_cast<std::size_t>(c2)],
                      cg.inv[static_cast<std::size_t>(c2)]);
  }

  for (Elem b1 = 0; b1 < bg.order; ++b1)
    for (Elem c1 = 0; c1 < cg.order; ++c1) {
      const Elem u = bg.op(
          data.phi[static_cast<std::size_t>(c1)][static_cast<std::size_t>(b1)],
          bg.inv[static_cast<std::size_t>(b1)]);
      const std::vector<Elem>& psi_u = data.psi[static_cast<std::size_t>(u)];
      for (const Elem t : t_table)
        if (psi_u[static_cast<std::size_t>(t)] != t) return false;
    }
  return true;
}

IdealProfile ideal_profile(const BicrossedData& data) {
  if (!data.compat_certified)
    throw DomainError("ideal_profile requires certified data");

  IdealProfile profile;
  profile.phi_trivial = true;
  for (Elem c = 0; c < data.c_group.order && profile.phi_trivial; ++c)
    for (Elem x = 0; x < data.b_group.order; ++x)
      if (data.phi[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] != x) {
        profile.phi_trivial = false;
        break;
      }
  profile.psi_trivial = true;
  for (Elem b = 0; b < data.b_group.order && profile.psi_trivial; ++b)
    for (Elem y = 0; y < data.c_group.order; ++y)
      if (data.psi[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)] != y) {
        profile.psi_trivial = false;
        break;
      }

  profile.b_block.left_ideal = true;
  profile.b_block.right_ideal = profile.psi_trivial;
  profile.b_block.left_ideal_op = true;
  profile.b_block.right_ideal_op = profile.psi_trivial;

  profile.c_block.left_ideal = true;
  profile.c_block.right_ideal = profile.phi_trivial;
  profile.c_block.right_ideal_op = true;
  profile.c_block.left_ideal_op = profile.phi_trivial;

  return profile;
}

}  // namespace braceforge

#include "braceforge/group_table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

constexpr int kDefaultCarrierCap = 4096;

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap = [] {
    if (const char* env = std::getenv("BRACEFORGE_CARRIER_CAP")) {
      const int parsed = std::atoi(env);
      if (parsed >= 1) return parsed;
    }
    return kDefaultCarrierCap;
  }();
  return cap;
}

void fill_inverses(GroupTable& g) {
  g.inv.assign(static_cast<std::size_t>(g.order), 0);
  for (Elem a = 0; a < g.order; ++a) {
    for (Elem b = 0; b < g.order; ++b) {
      if (g.op(a, b) == g.identity) {
        g.inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
}

}  // namespace

int carrier_cap() { return cap_storage().load(); }

void set_carrier_cap(int cap) {
  if (cap < 1) throw ParameterError("carrier cap must be >= 1");
  cap_storage().store(cap);
}

GroupTable make_cyclic(int n) {
  if (n <= 0) throw InvalidOrderError("cyclic group order must be >= 1");
  if (n > carrier_cap()) throw CapacityError("cyclic group order exceeds carrier cap");
  GroupTable g;
  g.order = n;
  g.identity = 0;
  g.label = "Z/" + std::to_string(n);
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      g.mul[static_cast<std::size_t>(a) * n + b] = static_cast<Elem>((a + b) % n);
  g.inv.resize(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) g.inv[static_cast<std::size_t>(a)] = static_cast<Elem>((n - a) % n);
  return g;
}

GroupTable make_elementary_abelian(int base, int rank) {
  if (base < 2) throw ParameterError("digit base must be >= 2");
  if (rank < 1) throw ParameterError("rank must be >= 1");
  long long order = 1;
  for (int i = 0; i < rank; ++i) {
    order *= base;
    if (order > carrier_cap())
      throw CapacityError("group order " + std::to_string(base) + "^" +
                          std::to_string(rank) + " exceeds carrier cap " +
                          std::to_string(carrier_cap()));
  }
  GroupTable g;
  g.order = static_cast<int>(order);
  g.identity = 0;
  g.label = "(Z/" + std::to_string(base) + ")^" + std::to_string(rank);
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b) {
      Elem sum = 0;
      long long pw = 1;
      for (int i = 0; i < rank; ++i) {
        const long long da = (a / pw) % base;
        const long long db = (b / pw) % base;
        sum += static_cast<Elem>(((da + db) % base) * pw);
        pw *= base;
      }
      g.mul[static_cast<std::size_t>(a) * g.order + b] = sum;
    }
  fill_inverses(g);
  return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const long long order = static_cast<long long>(g.order) * h.order;
  if (order > carrier_cap())
    throw CapacityError("direct product order " + std::to_string(order) +
                        " exceeds carrier cap " + std::to_string(carrier_cap()));
  GroupTable p;
  p.order = static_cast<int>(order);
  p.identity = g.identity * h.order + h.identity;
  p.label = g.label + "x" + h.label;
  p.mul.resize(static_cast<std::size_t>(p.order) * p.order);
  for (Elem i = 0; i < g.order; ++i)
    for (Elem j = 0; j < h.order; ++j) {
      const Elem a = i * h.order + j;
      for (Elem k = 0; k < g.order; ++k)
        for (Elem l = 0; l < h.order; ++l) {
          const Elem b = k * h.order + l;
          p.mul[static_cast<std::size_t>(a) * p.order + b] =
              g.op(i, k) * h.order + h.op(j, l);
        }
    }
  fill_inverses(p);
  return p;
}

GroupValidation validate_group(const GroupTable& g) {
  GroupValidation v;
  auto fail = [&](const std::string& axiom, Elem a, Elem b, Elem c,
                  const std::string& msg) {
    v.ok = false;
    v.axiom = axiom;
    v.witness = {a, b, c};
    v.message = msg;
    return v;
  };

  const int n = g.order;
  if (n <= 0) return fail("shape", -1, -1, -1, "order must be >= 1");
  if (g.mul.size() != static_cast<std::size_t>(n) * n)
    return fail("shape", -1, -1, -1, "mul table length is not order^2");
  if (g.inv.size() != static_cast<std::size_t>(n))
    return fail("shape", -1, -1, -1, "inverse table length is not order");
  if (g.identity < 0 || g.identity >= n)
    return fail("shape", g.identity, -1, -1, "identity index out of range");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.op(a, b);
      if (ab < 0 || ab >= n)
        return fail("closure", a, b, -1, "table entry out of range");
    }
  for (Elem a = 0; a < n; ++a) {
    if (g.inv[static_cast<std::size_t>(a)] < 0 || g.inv[static_cast<std::size_t>(a)] >= n)
      return fail("closure", a, -1, -1, "inverse entry out of range");
  }

  const Elem e = g.identity;
  for (Elem a = 0; a < n; ++a) {
    if (g.op(e, a) != a || g.op(a, e) != a)
      return fail("identity", a, -1, -1, "identity element does not fix element");
  }
  for (Elem a = 0; a < n; ++a) {
    const Elem ia = g.inv[static_cast<std::size_t>(a)];
    if (g.op(a, ia) != e || g.op(ia, a) != e)
      return fail("inverse", a, ia, -1, "inverse table entry is not a two-sided inverse");
  }

  // Full O(n^3) scan; first failing triple is the witness.
  const Elem* mul = g.mul.data();
  for (Elem a = 0; a < n; ++a) {
    const Elem* row_a = mul + static_cast<std::size_t>(a) * n;
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = row_a[b];
      const Elem* row_ab = mul + static_cast<std::size_t>(ab) * n;
      const Elem* row_b = mul + static_cast<std::size_t>(b) * n;
      for (Elem c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]])
          return fail("associativity", a, b, c, "(a*b)*c != a*(b*c)");
      }
    }
  }
  return v;
}

ElemSet generated_subgroup(const GroupTable& g, const ElemSet& gens) {
  ElemSet out(g.order);
  std::vector<Elem> work;
  out.insert(g.identity);
  work.push_back(g.identity);
  std::vector<Elem> gen_list = gens.elems();
  {
    const std::size_t base = gen_list.size();
    for (std::size_t i = 0; i < base; ++i) gen_list.push_back(g.inv[static_cast<std::size_t>(gen_list[i])]);
  }
  while (!work.empty()) {
    const Elem w = work.back();
    work.pop_back();
    for (Elem x : gen_list) {
      const Elem next = g.op(w, x);
      if (out.insert(next)) work.push_back(next);
    }
  }
  return out;
}

bool is_subgroup(const GroupTable& g, const ElemSet& s) {
  if (!s.contains(g.identity)) return false;
  const std::vector<Elem> elems = s.elems();
  for (Elem x : elems) {
    if (!s.contains(g.inv[static_cast<std::size_t>(x)])) return false;
    for (Elem y : elems)
      if (!s.contains(g.op(x, y))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const ElemSet& s) {
  if (!is_subgroup(g, s)) throw DomainError("normality asked of a non-subgroup");
  const std::vector<Elem> elems = s.elems();
  for (Elem a = 0; a < g.order; ++a)
    for (Elem x : elems)
      if (!s.contains(g.conj(a, x))) return false;
  return true;
}

bool is_abelian(const GroupTable& g) {
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = a + 1; b < g.order; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

bool commutes_within(const GroupTable& g, const ElemSet& s) {
  const std::vector<Elem> elems = s.elems();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.op(elems[i], elems[j]) != g.op(elems[j], elems[i])) return false;
  return true;
}

ElemSet commutator_subgroup(const GroupTable& g) {
  return commutator_of(g, ElemSet::full(g.order), ElemSet::full(g.order));
}

ElemSet commutator_of(const GroupTable& g, const ElemSet& xs, const ElemSet& ys) {
  ElemSet gens(g.order);
  for (Elem x : xs.elems())
    for (Elem y : ys.elems()) {
      const Elem comm = g.op(g.op(x, y), g.op(g.inv[static_cast<std::size_t>(x)],
                                              g.inv[static_cast<std::size_t>(y)]));
      gens.insert(comm);
    }
  return generated_subgroup(g, gens);
}

int element_order(const GroupTable& g, Elem a) {
  int ord = 1;
  Elem x = a;
  while (x != g.identity) {
    x = g.op(x, a);
    ++ord;
  }
  return ord;
}

ElemSet product_set(const GroupTable& g, const ElemSet& b, const ElemSet& c) {
  ElemSet out(g.order);
  for (Elem x : b.elems())
    for (Elem y : c.elems()) out.insert(g.op(x, y));
  return out;
}

namespace {

GroupTable from_permutations(std::vector<std::array<int, 3>> perms,
                             const std::string& label) {
  GroupTable g;
  const int n = static_cast<int>(perms.size());
  g.order = n;
  g.label = label;
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[static_cast<std::size_t>(i)] == p) return static_cast<Elem>(i);
    throw DomainError("permutation set not closed");
  };
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::array<int, 3> comp{};
      for (int i = 0; i < 3; ++i)
        comp[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(s)]
                 [static_cast<std::size_t>(perms[static_cast<std::size_t>(t)]
                                               [static_cast<std::size_t>(i)])];
      g.mul[static_cast<std::size_t>(s) * n + t] = index_of(comp);
    }
  g.identity = index_of({0, 1, 2});
  fill_inverses(g);
  return g;
}

}  // namespace

GroupTable make_symmetric3() {
  return from_permutations(
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}, "S3");
}

GroupTable make_dihedral8() {
  GroupTable g;
  g.order = 8;
  g.identity = 0;
  g.label = "D4";
  g.mul.resize(64);
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          const int a = i1 + 4 * j1;
          const int b = i2 + 4 * j2;
          const int i = ((j1 ? i1 - i2 : i1 + i2) % 4 + 4) % 4;
          const int j = (j1 + j2) % 2;
          g.mul[static_cast<std::size_t>(a) * 8 + b] = static_cast<Elem>(i + 4 * j);
        }
  fill_inverses(g);
  return g;
}

GroupTable make_quaternion8() {
  GroupTable g;
  g.order = 8;
  g.identity = 0;
  g.label = "Q8";
  g.mul.resize(64);
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const int x = a1 + 4 * b1;
          const int y = a2 + 4 * b2;
          const int a = ((b1 ? a1 - a2 : a1 + a2) + 2 * b1 * b2 + 8) % 4;
          const int b = (b1 + b2) % 2;
          g.mul[static_cast<std::size_t>(x) * 8 + y] = static_cast<Elem>(a + 4 * b);
        }
  fill_inverses(g);
  return g;
}

GroupTable make_units_mod(int n, std::vector<int>* reps) {
  if (n <= 1) throw InvalidOrderError("units group needs modulus >= 2");
  std::vector<int> units;
  for (int r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) units.push_back(r);
  GroupTable g;
  g.order = static_cast<int>(units.size());
  g.label = "U(" + std::to_string(n) + ")";
  auto index_of = [&](int value) {
    const auto it = std::lower_bound(units.begin(), units.end(), value);
    return static_cast<Elem>(it - units.begin());
  };
  g.identity = index_of(1);
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      g.mul[static_cast<std::size_t>(i) * g.order + j] =
          index_of(units[static_cast<std::size_t>(i)] *
                   units[static_cast<std::size_t>(j)] % n);
  fill_inverses(g);
  if (reps) *reps = units;
  return g;
}

HomCertification certify_hom(GroupHomTable h) {
  if (!h.domain || !h.codomain) throw ShapeError("hom needs domain and codomain");
  const GroupTable& dom = *h.domain;
  const GroupTable& cod = *h.codomain;
  if (h.image.size() != static_cast<std::size_t>(dom.order))
    throw ShapeError("hom image length does not match domain order");
  for (Elem v : h.image)
    if (v < 0 || v >= cod.order) throw ShapeError("hom image entry out of codomain range");

  for (Elem a = 0; a < dom.order; ++a)
    for (Elem b = 0; b < dom.order; ++b) {
      const Elem lhs = h.image[static_cast<std::size_t>(dom.op(a, b))];
      const Elem rhs = cod.op(h.image[static_cast<std::size_t>(a)],
                              h.image[static_cast<std::size_t>(b)]);
      if (lhs != rhs) {
        h.certified = false;
        return HomCertification{std::move(h), std::array<Elem, 2>{a, b}};
      }
    }
  h.certified = true;
  return HomCertification{std::move(h), std::nullopt};
}

}  // namespace braceforge

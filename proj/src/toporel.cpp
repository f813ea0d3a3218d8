#include "topo/toporel.hpp"

#include <algorithm>
#include <bit>

namespace topo {

namespace {

void need_same_n(const FiniteSpace& sp, const Relation& r) {
  if (sp.n != r.n)
    throw SizeMismatch("space and relation have different point counts");
}

Verdict fail1(int x) { return {false, 1, {x, -1, -1, -1}}; }
Verdict fail2(int x, int k) { return {false, 2, {x, k, -1, -1}}; }

// Conjunction that keeps the first failing family, tagging it with kind.
Verdict join(std::initializer_list<std::pair<const Verdict*, int>> parts) {
  for (auto [v, kind] : parts)
    if (!v->holds) return fail2(v->w[0], kind);
  return {};
}

}  // namespace

ContinuityReport continuity(const FiniteSpace& sp, const Relation& r) {
  need_same_n(sp, r);
  ContinuityReport rep;
  const Relation p = derive_parts(r).strict;
  for (int x = 0; x < sp.n; ++x) {
    if (rep.closed_upper_r.holds && !sp.is_closed(r.upper(x)))
      rep.closed_upper_r = fail1(x);
    if (rep.closed_lower_r.holds && !sp.is_closed(r.lower(x)))
      rep.closed_lower_r = fail1(x);
    if (rep.open_upper_p.holds && !sp.is_open(p.upper(x)))
      rep.open_upper_p = fail1(x);
    if (rep.open_lower_p.holds && !sp.is_open(p.lower(x)))
      rep.open_lower_p = fail1(x);
  }
  rep.closed_sections_r =
      join({{&rep.closed_upper_r, 0}, {&rep.closed_lower_r, 1}});
  rep.open_sections_p = join({{&rep.open_upper_p, 2}, {&rep.open_lower_p, 3}});
  rep.continuous = join({{&rep.closed_upper_r, 0},
                         {&rep.closed_lower_r, 1},
                         {&rep.open_upper_p, 2},
                         {&rep.open_lower_p, 3}});
  return rep;
}

SectionConnectivityReport section_connectivity(const FiniteSpace& sp,
                                               const Relation& r) {
  need_same_n(sp, r);
  SectionConnectivityReport rep;
  const Relation i = derive_parts(r).sym;
  Verdict upper_conn, lower_conn;
  for (int x = 0; x < sp.n; ++x) {
    if (rep.i_sections_connected.holds && !subspace_connected(sp, i.upper(x)))
      rep.i_sections_connected = fail1(x);
    if (upper_conn.holds && !subspace_connected(sp, r.upper(x)))
      upper_conn = fail1(x);
    if (lower_conn.holds && !subspace_connected(sp, r.lower(x)))
      lower_conn = fail1(x);
    if (rep.r_upper_path_connected.holds &&
        !subspace_path_connected(sp, r.upper(x)))
      rep.r_upper_path_connected = fail1(x);
    if (rep.r_lower_path_connected.holds &&
        !subspace_path_connected(sp, r.lower(x)))
      rep.r_lower_path_connected = fail1(x);
  }
  rep.r_sections_connected = join({{&upper_conn, 0}, {&lower_conn, 1}});
  rep.r_sections_path_connected = join(
      {{&rep.r_upper_path_connected, 0}, {&rep.r_lower_path_connected, 1}});
  return rep;
}

NontrivialityReport nontriviality(const FiniteSpace& sp, const Relation& r,
                                  int k) {
  return nontriviality(sp, r, k, components(sp));
}

NontrivialityReport nontriviality(const FiniteSpace& sp, const Relation& r,
                                  int k, const Partition& comp) {
  need_same_n(sp, r);
  const DerivedParts d = derive_parts(r);
  const Relation& p = d.strict;
  const int c = static_cast<int>(comp.size());
  if (k < 1 || k > c)
    throw KOutOfRange("k must be between 1 and the component count");

  NontrivialityReport rep;
  rep.k = k;
  if (p.empty()) rep.non_trivial = {false, 0, {-1, -1, -1, -1}};

  // Per-component-pair comparability tables, strict and weak.
  std::array<std::array<bool, kMaxPoints>, kMaxPoints> strict_in{}, weak_in{};
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b)
      for (int x = 0; x < sp.n; ++x) {
        if (!((comp.blocks[a] >> x) & 1u)) continue;
        if (p.row[x] & comp.blocks[b]) strict_in[a][b] = true;
        if ((r.row[x] & comp.blocks[b]) || (r.lower(x) & comp.blocks[b]))
          weak_in[a][b] = true;
        if (strict_in[a][b] && weak_in[a][b]) break;
      }
  // strict_in only recorded x-side pairs; symmetrize to P union P^T.
  std::array<std::array<bool, kMaxPoints>, kMaxPoints> strict_or{};
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b)
      strict_or[a][b] = strict_in[a][b] || strict_in[b][a];

  for (int a = 0; a < c && rep.componentwise_non_trivial.holds; ++a)
    if (!strict_in[a][a]) rep.componentwise_non_trivial = fail1(a);
  for (int a = 0; a < c && rep.componentwise_non_trivial.holds; ++a)
    for (int b = a + 1; b < c; ++b)
      if (!weak_in[a][b] && !weak_in[b][a]) {
        rep.componentwise_non_trivial = fail2(a, b);
        break;
      }

  // Definition 5: strictly increasing index tuples over the component list.
  std::vector<int> m(k), nn(k);
  auto first_combo = [c, k](std::vector<int>& v) {
    for (int i = 0; i < k; ++i) v[i] = i;
    return k <= c;
  };
  auto next_combo = [c, k](std::vector<int>& v) {
    int i = k - 1;
    while (i >= 0 && v[i] == c - k + i) --i;
    if (i < 0) return false;
    ++v[i];
    for (int j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
    return true;
  };
  bool found = false;
  for (bool more_m = first_combo(m); more_m && !found; more_m = next_combo(m))
    for (bool more_n = first_combo(nn); more_n && !found;
         more_n = next_combo(nn)) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = strict_or[m[i]][nn[i]];
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j)
          ok = weak_in[m[i]][nn[j]] || weak_in[m[j]][nn[i]];
      if (ok) {
        found = true;
        rep.k_witness_m = m;
        rep.k_witness_n = nn;
      }
    }
  if (!found) rep.k_non_trivial = {false, 0, {-1, -1, -1, -1}};

  rep.strongly_non_trivial = {false, 0, {-1, -1, -1, -1}};
  for (int x = 0; x < sp.n; ++x) {
    const Mask px = p.upper(x);
    if (!px) continue;
    bool ok = true;
    for (int a = 0; a < sp.n && ok; ++a) {
      if (!((px >> a) & 1u)) continue;
      for (int b = 0; b < sp.n && ok; ++b)
        if (((px >> b) & 1u) && !(r.row[a] & r.row[b])) ok = false;
    }
    if (ok) {
      rep.strongly_non_trivial = {true, 1, {x, -1, -1, -1}};
      break;
    }
  }
  return rep;
}

RobustnessReport robustness(const FiniteSpace& sp, const Relation& r) {
  need_same_n(sp, r);
  RobustnessReport rep;
  const Relation p = derive_parts(r).strict;
  auto comparable = [&r](int a, int b) { return r.at(a, b) || r.at(b, a); };
  rep.fragile = {false, 0, {-1, -1, -1, -1}};
  rep.flimsy = {false, 0, {-1, -1, -1, -1}};
  for (int x = 0; x < sp.n && !rep.fragile.holds; ++x)
    for (int y = 0; y < sp.n && !rep.fragile.holds; ++y) {
      if (!p.at(x, y)) continue;
      for (int a = 0; a < sp.n && !rep.fragile.holds; ++a) {
        if (!((sp.min_nbhd[x] >> a) & 1u)) continue;
        for (int b = 0; b < sp.n; ++b)
          if (((sp.min_nbhd[y] >> b) & 1u) && !comparable(a, b)) {
            rep.fragile = {true, 4, {x, y, a, b}};
            break;
          }
      }
    }
  for (int x = 0; x < sp.n && !rep.flimsy.holds; ++x)
    for (int y = 0; y < sp.n && !rep.flimsy.holds; ++y) {
      if (comparable(x, y)) continue;
      for (int a = 0; a < sp.n && !rep.flimsy.holds; ++a) {
        if (!((sp.min_nbhd[x] >> a) & 1u)) continue;
        for (int b = 0; b < sp.n; ++b)
          if (((sp.min_nbhd[y] >> b) & 1u) && comparable(a, b)) {
            rep.flimsy = {true, 4, {x, y, a, b}};
            break;
          }
      }
    }
  return rep;
}

Verdict covering_closed_sections(const FiniteSpace& sp, const Relation& r) {
  need_same_n(sp, r);
  const Relation hull = reflexive_hull(derive_parts(r).strict);
  const DerivedParts h = derive_parts(hull);
  const Relation& lo = h.covering_lower;
  const Relation& up = h.covering_upper;
  for (int x = 0; x < sp.n; ++x) {
    if (!sp.is_closed(lo.upper(x))) return fail2(x, 0);
    if (!sp.is_closed(lo.lower(x))) return fail2(x, 1);
    if (!sp.is_closed(up.upper(x))) return fail2(x, 2);
    if (!sp.is_closed(up.lower(x))) return fail2(x, 3);
  }
  return {};
}

QuasiOrderResult is_quasi_ordered(const FiniteSpace& sp) {
  RelationEnumerator en(sp.n, RelationFilter::complete_anti_symmetric);
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    const Relation r = en.at(i);
    if (continuity(sp, r).continuous.holds) return {true, r};
  }
  return {false, std::nullopt};
}

std::optional<std::vector<long long>> solve(const InequalitySystem& sys) {
  std::vector<long long> val(sys.vars, 0);
  // Longest-path relaxation; a positive cycle, i.e. a cycle through a strict
  // edge, keeps relaxing past the vertex-count round and means infeasible.
  for (int round = 0; round <= sys.vars; ++round) {
    bool changed = false;
    for (auto [a, b] : sys.le)
      if (val[b] < val[a]) {
        val[b] = val[a];
        changed = true;
      }
    for (auto [a, b] : sys.lt)
      if (val[b] < val[a] + 1) {
        val[b] = val[a] + 1;
        changed = true;
      }
    if (!changed) return val;
  }
  return std::nullopt;
}

std::optional<DualRepresentation> dual_representation(const FiniteSpace& sp,
                                                      const Relation& p) {
  need_same_n(sp, p);
  if (!order_properties(p).asymmetric.holds)
    throw NotAsymmetric("dual representation needs an asymmetric relation");
  const Partition comp = components(sp);
  const int k = static_cast<int>(comp.size());

  InequalitySystem sys;
  sys.vars = 2 * k;  // u_c then v_c blocks
  for (int x = 0; x < sp.n; ++x)
    for (int y = 0; y < sp.n; ++y) {
      const int cu = comp.block_of(x), cv = k + comp.block_of(y);
      if (p.at(x, y))
        sys.lt.emplace_back(cu, cv);
      else
        sys.le.emplace_back(cv, cu);
    }
  const auto val = solve(sys);
  if (!val) return std::nullopt;

  DualRepresentation rep;
  rep.u.resize(sp.n);
  rep.v.resize(sp.n);
  for (int x = 0; x < sp.n; ++x) {
    rep.u[x] = (*val)[comp.block_of(x)];
    rep.v[x] = (*val)[k + comp.block_of(x)];
  }
  for (int x = 0; x < sp.n; ++x)
    for (int y = 0; y < sp.n; ++y)
      if (p.at(x, y) != (rep.u[x] < rep.v[y]))
        throw Error("dual representation failed its defining biconditional");
  return rep;
}

Partition indifference_partition(const Relation& r) {
  const Relation i = derive_parts(r).sym;
  const OrderPropertyVector v = order_properties(r);
  if (!v.reflexive.holds || !v.ii.holds)
    throw InvalidPartition("indifference is not an equivalence relation");
  Partition part;
  part.n = r.n;
  Mask left = (Mask(1) << r.n) - 1;
  while (left) {
    const int x = std::countr_zero(left);
    part.blocks.push_back(i.upper(x));
    left &= ~i.upper(x);
  }
  return part;
}

Relation quotient_relation(const Relation& r, const Partition& part) {
  if (part.n != r.n)
    throw SizeMismatch("partition is over a different point count");
  const int k = static_cast<int>(part.blocks.size());
  if (k > kMaxPoints) throw SizeLimit("quotient has too many classes");
  Relation q;
  q.n = k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool all = true;
      for (int x = 0; x < r.n && all; ++x) {
        if (!((part.blocks[a] >> x) & 1u)) continue;
        if (part.blocks[b] & ~r.row[x]) all = false;
      }
      if (all) q.set(a, b);
    }
  return q;
}

}  // namespace topo

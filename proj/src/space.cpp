#include "topo/space.hpp"

#include <algorithm>
#include <bit>

namespace topo {

int Partition::block_of(int p) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] & (Mask(1) << p)) return static_cast<int>(i);
  return -1;
}

FiniteSpace new_space(int n, std::vector<Mask> opens) {
  if (n < 1 || n > kMaxPoints)
    throw SizeLimit("point count must be between 1 and 8");
  const Mask full = (Mask(1) << n) - 1;
  for (Mask s : opens)
    if (s & ~full) throw Error("open set contains a point outside the space");

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  FiniteSpace sp;
  sp.n = n;
  sp.full = full;
  sp.opens = std::move(opens);
  sp.open_at.assign(std::size_t(1) << n, 0);
  for (Mask s : sp.opens) sp.open_at[s] = 1;

  if (!sp.open_at[0])
    throw AxiomViolation(AxiomViolation::Kind::missing_empty,
                         "the empty set is not in the family");
  if (!sp.open_at[full])
    throw AxiomViolation(AxiomViolation::Kind::missing_full,
                         "the full point set is not in the family");
  for (std::size_t i = 0; i < sp.opens.size(); ++i)
    for (std::size_t j = i + 1; j < sp.opens.size(); ++j) {
      const Mask a = sp.opens[i], b = sp.opens[j];
      if (!sp.open_at[a | b])
        throw AxiomViolation(AxiomViolation::Kind::union_gap,
                             "union of two opens is not open", a, b);
      if (!sp.open_at[a & b])
        throw AxiomViolation(AxiomViolation::Kind::intersection_gap,
                             "intersection of two opens is not open", a, b);
    }

  for (int p = 0; p < n; ++p) {
    Mask u = full;
    for (Mask s : sp.opens)
      if (s & (Mask(1) << p)) u &= s;
    sp.min_nbhd[p] = u;
  }
  return sp;
}

FiniteSpace discrete_space(int n) {
  if (n < 1 || n > kMaxPoints)
    throw SizeLimit("point count must be between 1 and 8");
  std::vector<Mask> opens(std::size_t(1) << n);
  for (Mask s = 0; s < opens.size(); ++s) opens[s] = s;
  return new_space(n, std::move(opens));
}

FiniteSpace indiscrete_space(int n) {
  if (n < 1 || n > kMaxPoints)
    throw SizeLimit("point count must be between 1 and 8");
  return new_space(n, {0, (Mask(1) << n) - 1});
}

Mask closure(const FiniteSpace& sp, Mask s) {
  Mask c = 0;
  for (int p = 0; p < sp.n; ++p)
    if (sp.min_nbhd[p] & s) c |= Mask(1) << p;
  return c;
}

Mask interior(const FiniteSpace& sp, Mask s) {
  Mask in = 0;
  for (int p = 0; p < sp.n; ++p)
    if ((s >> p & 1u) && (sp.min_nbhd[p] & ~s) == 0) in |= Mask(1) << p;
  return in;
}

bool subspace_connected(const FiniteSpace& sp, Mask s) {
  if (s == 0) return true;
  // s is disconnected iff two opens trace complementary nonempty pieces of s.
  // One pass marks every trace, a second looks for a marked complement.
  static thread_local std::array<std::uint32_t, 256> seen{};
  static thread_local std::uint32_t generation = 0;
  ++generation;
  for (Mask u : sp.opens) seen[u & s] = generation;
  for (Mask u : sp.opens) {
    const Mask t = u & s;
    if (t != 0 && t != s && seen[s & ~t] == generation) return false;
  }
  return true;
}

namespace {

// Union of every connected subset of the ambient space that lies inside
// domain and contains each point; acc[p] ends up as p's component.
std::array<Mask, kMaxPoints> component_masks(const FiniteSpace& sp,
                                             Mask domain) {
  std::array<Mask, kMaxPoints> acc{};
  for (int p = 0; p < sp.n; ++p)
    if (domain >> p & 1u) acc[p] = Mask(1) << p;
  Mask t = domain;
  while (true) {
    if (subspace_connected(sp, t))
      for (int p = 0; p < sp.n; ++p)
        if (t >> p & 1u) acc[p] |= t;
    if (t == 0) break;
    t = (t - 1) & domain;
  }
  return acc;
}

Partition blocks_from(const std::array<Mask, kMaxPoints>& acc, int n,
                      Mask domain) {
  Partition part;
  part.n = n;
  Mask left = domain;
  while (left) {
    const int p = std::countr_zero(left);
    part.blocks.push_back(acc[p]);
    left &= ~acc[p];
  }
  return part;
}

}  // namespace

Partition subspace_components(const FiniteSpace& sp, Mask s) {
  return blocks_from(component_masks(sp, s), sp.n, s);
}

Partition components(const FiniteSpace& sp) {
  return subspace_components(sp, sp.full);
}

bool is_connected(const FiniteSpace& sp) {
  return subspace_connected(sp, sp.full);
}

bool is_k_connected(const FiniteSpace& sp, int k) {
  if (k < 1) throw KOutOfRange("component bound must be at least 1");
  return components(sp).size() <= static_cast<std::size_t>(k);
}

std::vector<Mask> clopen_partition(const FiniteSpace& sp, int k) {
  if (k < 1) throw KOutOfRange("partition size must be at least 1");
  const Partition comp = components(sp);
  if (comp.size() < static_cast<std::size_t>(k))
    throw TooFewComponents("space has fewer components than requested blocks");
  // First k-1 components stand alone, the rest merge into the last block;
  // a union of components is clopen.
  std::vector<Mask> out(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < comp.size(); ++i)
    out[std::min(i, std::size_t(k) - 1)] |= comp.blocks[i];
  return out;
}

bool separated(const FiniteSpace& sp, Mask a, Mask b) {
  if (a == 0 || b == 0) throw EmptyInput("separated sets must be nonempty");
  return (closure(sp, a) & b) == 0 && (a & closure(sp, b)) == 0;
}

bool separates(const FiniteSpace& sp, Mask s, int x, int y) {
  const Mask bx = Mask(1) << x, by = Mask(1) << y;
  if ((s & bx) || (s & by))
    throw PointInSeparator("separator must avoid both endpoints");
  const Partition rest = subspace_components(sp, sp.full & ~s);
  return rest.block_of(x) != rest.block_of(y);
}

PbpResult has_pbp(const FiniteSpace& sp) {
  for (Mask a : sp.opens) {
    if (a == 0) continue;
    for (Mask b : sp.opens) {
      if (b == 0 || !separated(sp, a, b)) continue;
      const Mask rest = sp.full & ~(a | b);
      for (int x = 0; x < sp.n; ++x) {
        if (!(a >> x & 1u)) continue;
        for (int y = 0; y < sp.n; ++y) {
          if (!(b >> y & 1u)) continue;
          bool found = false;
          Mask t = rest;
          while (true) {
            if (subspace_connected(sp, t) && separates(sp, t, x, y)) {
              found = true;
              break;
            }
            if (t == 0) break;
            t = (t - 1) & rest;
          }
          if (!found) return {false, a, b, x, y};
        }
      }
    }
  }
  return {};
}

namespace {

// p below q in the specialization preorder iff p is in closure({q}), i.e.
// q lies in p's minimal neighborhood. Path components are the connected
// components of the comparability graph.
bool comparable(const FiniteSpace& sp, int p, int q) {
  return (sp.min_nbhd[p] >> q & 1u) || (sp.min_nbhd[q] >> p & 1u);
}

Mask reach(const FiniteSpace& sp, int start, Mask domain) {
  Mask seen = Mask(1) << start;
  Mask frontier = seen;
  while (frontier) {
    const int p = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (int q = 0; q < sp.n; ++q) {
      const Mask bq = Mask(1) << q;
      if ((domain & bq) && !(seen & bq) && comparable(sp, p, q)) {
        seen |= bq;
        frontier |= bq;
      }
    }
  }
  return seen;
}

}  // namespace

bool subspace_path_connected(const FiniteSpace& sp, Mask s) {
  if (s == 0) return true;
  return reach(sp, std::countr_zero(s), s) == s;
}

Partition path_components(const FiniteSpace& sp) {
  Partition part;
  part.n = sp.n;
  Mask left = sp.full;
  while (left) {
    const Mask block = reach(sp, std::countr_zero(left), sp.full);
    part.blocks.push_back(block);
    left &= ~block;
  }
  return part;
}

FiniteSpace quotient_space(const FiniteSpace& sp, const Partition& part) {
  if (part.n != sp.n)
    throw InvalidPartition("partition is over a different point count");
  Mask covered = 0;
  for (Mask b : part.blocks) {
    if (b == 0) throw InvalidPartition("partition block is empty");
    if (b & ~sp.full) throw InvalidPartition("partition block leaves the space");
    if (b & covered) throw InvalidPartition("partition blocks overlap");
    covered |= b;
  }
  if (covered != sp.full)
    throw InvalidPartition("partition does not cover the space");

  const int k = static_cast<int>(part.blocks.size());
  std::vector<Mask> opens;
  for (Mask a = 0; a < (Mask(1) << k); ++a) {
    Mask pre = 0;
    for (int i = 0; i < k; ++i)
      if (a >> i & 1u) pre |= part.blocks[i];
    if (sp.is_open(pre)) opens.push_back(a);
  }
  return new_space(k, std::move(opens));
}

bool is_hausdorff(const FiniteSpace& sp) {
  for (int p = 0; p < sp.n; ++p)
    for (int q = p + 1; q < sp.n; ++q)
      if (sp.min_nbhd[p] & sp.min_nbhd[q]) return false;
  return true;
}

}  // namespace topo

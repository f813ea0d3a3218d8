#include "topo/relation.hpp"

namespace topo {

std::uint64_t Relation::code() const {
  std::uint64_t c = 0;
  for (int x = 0; x < n; ++x)
    c |= static_cast<std::uint64_t>(row[x]) << (x * n);
  return c;
}

Relation Relation::from_code(int n, std::uint64_t code) {
  Relation r;
  r.n = n;
  const Mask rowmask = (Mask(1) << n) - 1;
  for (int x = 0; x < n; ++x)
    r.row[x] = static_cast<Mask>(code >> (x * n)) & rowmask;
  return r;
}

Relation relation_from_pairs(int n,
                             const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1 || n > kMaxPoints)
    throw SizeLimit("point count must be between 1 and 8");
  Relation r;
  r.n = n;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error("relation pair references a point outside the carrier");
    r.set(x, y);
  }
  return r;
}

namespace {

bool is_asymmetric(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (r.at(x, y) && r.at(y, x)) return false;
  return true;
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

Relation reflexive_hull(const Relation& p) {
  if (!is_asymmetric(p))
    throw NotAsymmetric("reflexive hull needs an asymmetric relation");
  Relation h;
  h.n = p.n;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (!p.at(y, x)) h.set(x, y);
  return h;
}

DerivedParts derive_parts(const Relation& r) {
  DerivedParts d;
  d.sym.n = d.strict.n = d.transpose.n = d.complement.n = r.n;
  d.covering_lower.n = d.covering_upper.n = r.n;
  const Mask rowmask = (Mask(1) << r.n) - 1;
  for (int x = 0; x < r.n; ++x) {
    d.transpose.row[x] = r.lower(x);
    d.complement.row[x] = ~r.row[x] & rowmask;
    d.sym.row[x] = r.row[x] & d.transpose.row[x];
    d.strict.row[x] = r.row[x] & ~d.transpose.row[x];
  }
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      if (subset(r.lower(x), r.lower(y))) d.covering_lower.set(x, y);
      if (subset(r.row[y], r.row[x])) d.covering_upper.set(x, y);
    }
  if (is_asymmetric(r)) d.reflexive_hull = reflexive_hull(r);
  return d;
}

namespace {

Verdict fail1(int x) { return {false, 1, {x, -1, -1, -1}}; }
Verdict fail2(int x, int y) { return {false, 2, {x, y, -1, -1}}; }
Verdict fail3(int x, int y, int z) { return {false, 3, {x, y, z, -1}}; }
Verdict fail4(int x, int y, int z, int w) { return {false, 4, {x, y, z, w}}; }

Verdict transitive_of(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      if (!r.at(x, y)) continue;
      for (int z = 0; z < r.n; ++z)
        if (r.at(y, z) && !r.at(x, z)) return fail3(x, y, z);
    }
  return {};
}

}  // namespace

OrderPropertyVector order_properties(const Relation& r) {
  OrderPropertyVector v;
  const int n = r.n;
  const DerivedParts d = derive_parts(r);
  const Relation& p = d.strict;
  const Relation& i = d.sym;

  for (int x = 0; x < n && v.reflexive.holds; ++x)
    if (!r.at(x, x)) v.reflexive = fail1(x);

  for (int x = 0; x < n && v.complete.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (!r.at(x, y) && !r.at(y, x)) {
        v.complete = fail2(x, y);
        break;
      }

  for (int x = 0; x < n && v.symmetric.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (r.at(x, y) && !r.at(y, x)) {
        v.symmetric = fail2(x, y);
        break;
      }

  for (int x = 0; x < n && v.asymmetric.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (r.at(x, y) && r.at(y, x)) {
        v.asymmetric = fail2(x, y);
        break;
      }

  for (int x = 0; x < n && v.anti_symmetric.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && r.at(x, y) && r.at(y, x)) {
        v.anti_symmetric = fail2(x, y);
        break;
      }

  if (p.empty()) v.non_trivial = {false, 0, {-1, -1, -1, -1}};

  v.transitive = transitive_of(r);
  v.pp = transitive_of(p);
  v.ii = transitive_of(i);

  for (int x = 0; x < n && v.negatively_transitive_p.holds; ++x)
    for (int y = 0; y < n && v.negatively_transitive_p.holds; ++y) {
      if (p.at(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (!p.at(y, z) && p.at(x, z)) {
          v.negatively_transitive_p = fail3(x, y, z);
          break;
        }
    }

  for (int x = 0; x < n && v.pi.holds; ++x)
    for (int y = 0; y < n && v.pi.holds; ++y) {
      if (!p.at(y, x)) continue;
      for (int z = 0; z < n; ++z)
        if (i.at(x, z) && !p.at(y, z)) {
          v.pi = fail3(x, y, z);
          break;
        }
    }

  for (int x = 0; x < n && v.ip.holds; ++x)
    for (int y = 0; y < n && v.ip.holds; ++y) {
      if (!i.at(y, x)) continue;
      for (int z = 0; z < n; ++z)
        if (p.at(x, z) && !p.at(y, z)) {
          v.ip = fail3(x, y, z);
          break;
        }
    }

  v.semi_transitive = v.pi.holds ? v.ip : v.pi;

  // Definition 11(i) on the strict part and its hull: x<a, a hull b, b<y
  // must force x<y. P is asymmetric by construction so the hull exists.
  const Relation h = reflexive_hull(p);
  for (int x = 0; x < n && v.pseudo_transitive_dual.holds; ++x)
    for (int a = 0; a < n && v.pseudo_transitive_dual.holds; ++a) {
      if (!p.at(x, a)) continue;
      for (int b = 0; b < n && v.pseudo_transitive_dual.holds; ++b) {
        if (!h.at(a, b)) continue;
        for (int y = 0; y < n; ++y)
          if (p.at(b, y) && !p.at(x, y)) {
            v.pseudo_transitive_dual = fail4(x, a, b, y);
            break;
          }
      }
    }

  return v;
}

SeparabilityReport separability(const Relation& p) {
  if (!is_asymmetric(p))
    throw NotAsymmetric("separability needs an asymmetric relation");
  SeparabilityReport rep;
  const int n = p.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.at(x, y)) continue;
      bool mid = false;
      for (int a = 0; a < n && !mid; ++a)
        if (p.at(x, a) && p.at(a, y)) mid = true;
      if (!mid) rep.separable = false;
      bool pair = false;
      for (int a = 0; a < n && !pair; ++a) {
        if (!p.at(x, a)) continue;
        for (int b = 0; b < n && !pair; ++b)
          if (!p.at(b, a) && p.at(b, y)) pair = true;  // (a,b) in the hull
      }
      if (!pair) rep.strongly_separable = false;
      if (!rep.separable && !rep.strongly_separable) return rep;
    }
  return rep;
}

RelationEnumerator::RelationEnumerator(int n, RelationFilter filter)
    : n_(n), filter_(filter) {
  if (n < 1) throw SizeLimit("point count must be at least 1");
  if (filter == RelationFilter::none) {
    if (n > 4) throw SizeLimit("unfiltered relation streams stop at 4 points");
    count_ = std::uint64_t(1) << (n * n);
  } else {
    if (n > kMaxPoints)
      throw SizeLimit("filtered relation streams stop at 8 points");
    count_ = std::uint64_t(1) << (n * (n - 1) / 2);
  }
}

Relation RelationEnumerator::at(std::uint64_t i) const {
  if (filter_ == RelationFilter::none) return Relation::from_code(n_, i);
  Relation r;
  r.n = n_;
  for (int x = 0; x < n_; ++x) r.set(x, x);
  int k = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y, ++k) {
      if ((i >> k) & 1u)
        r.set(y, x);
      else
        r.set(x, y);
    }
  return r;
}

}  // namespace topo

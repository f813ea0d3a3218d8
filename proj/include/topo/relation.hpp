// Binary relations on n <= 8 points, stored as one row bitmask per point.
//
// Sections follow the usual convention: the upper section R(x) is the row
// {y : (x,y) in R}, the lower section R^-1(x) is the column {y : (y,x) in R}.
// The symmetric part I and strict part P split R as I = R meet R^T and
// P = R minus R^T. Axiom verdicts come from direct quantifier scans, and a
// failed axiom always reports the lexicographically first violating tuple in
// the scan order written next to each field below.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topo/space.hpp"

namespace topo {

struct Relation {
  int n = 0;
  std::array<Mask, kMaxPoints> row{};

  bool at(int x, int y) const { return (row[x] >> y) & 1u; }
  void set(int x, int y) { row[x] |= Mask(1) << y; }
  void clear(int x, int y) { row[x] &= ~(Mask(1) << y); }

  Mask upper(int x) const { return row[x]; }  // R(x)
  Mask lower(int y) const {                   // R^-1(y)
    Mask c = 0;
    for (int x = 0; x < n; ++x) c |= ((row[x] >> y) & 1u) << x;
    return c;
  }

  bool empty() const {
    for (int x = 0; x < n; ++x)
      if (row[x]) return false;
    return true;
  }

  // Row-major packing, bit x*n+y for the pair (x,y). Doubles as the
  // enumeration index of the unfiltered stream.
  std::uint64_t code() const;
  static Relation from_code(int n, std::uint64_t code);

  friend bool operator==(const Relation&, const Relation&) = default;
};

Relation relation_from_pairs(int n,
                             const std::vector<std::pair<int, int>>& pairs);

// Symmetric, strict, transpose and complement parts plus the two covering
// relations, each straight from its set definition. The reflexive hull
// (x,y) in R iff (y,x) not in P only makes sense for asymmetric input, so it
// is present exactly when the input is asymmetric; the standalone
// reflexive_hull() throws NotAsymmetric instead.
struct DerivedParts {
  Relation sym;             // I
  Relation strict;          // P
  Relation transpose;
  Relation complement;
  Relation covering_lower;  // {(x,y) : R^-1(x) subset of R^-1(y)}
  Relation covering_upper;  // {(x,y) : R(y) subset of R(x)}
  std::optional<Relation> reflexive_hull;
};

DerivedParts derive_parts(const Relation& r);
Relation reflexive_hull(const Relation& p);

struct Verdict {
  bool holds = true;
  int wlen = 0;  // 0 when the property holds or no tuple witnesses a failure
  std::array<int, 4> w{-1, -1, -1, -1};
};

// Scan orders, each loop ascending from 0:
//   reflexive            (x)       with (x,x) missing
//   complete             (x,y)     with neither (x,y) nor (y,x); x=y included
//   symmetric            (x,y)     with (x,y) in R, (y,x) not
//   asymmetric           (x,y)     with both (x,y) and (y,x); x=y included
//   anti_symmetric       (x,y)     x != y with both directions present
//   non_trivial          none      holds iff P is nonempty
//   transitive           (x,y,z)   chain in R, (x,z) missing
//   negatively_transitive_p (x,y,z)  (x,y),(y,z) outside P, (x,z) in P
//   pp                   (x,y,z)   chain in P, (x,z) missing from P
//   ii                   (x,y,z)   chain in I, (x,z) missing from I
//   pi                   (x,y,z)   (y,x) in P, (x,z) in I, (y,z) not in P
//   ip                   (x,y,z)   (y,x) in I, (x,z) in P, (y,z) not in P
//   semi_transitive      pi's witness when PI fails, else ip's
//   pseudo_transitive_dual (x,a,b,y)  x<a, b<y in P, (a,b) in P's hull,
//                                     (x,y) not in P
struct OrderPropertyVector {
  Verdict reflexive, complete, symmetric, asymmetric, anti_symmetric,
      non_trivial, transitive, negatively_transitive_p, pp, ii, pi, ip,
      semi_transitive, pseudo_transitive_dual;
};

OrderPropertyVector order_properties(const Relation& r);

// Countable-subset quantifiers collapse to the whole carrier on finite sets,
// leaving one interpolation scan per strict pair. Input must be asymmetric.
struct SeparabilityReport {
  bool separable = true;
  bool strongly_separable = true;
};

SeparabilityReport separability(const Relation& p);

enum class RelationFilter { none, complete_anti_symmetric };

// Unfiltered: every relation on n points once, ordered by code (n <= 4).
// Filtered: diagonal plus one orientation per unordered pair, so exactly the
// complete anti-symmetric relations, 2^(n(n-1)/2) of them (n <= 8); bit k of
// the index flips pair k, pairs listed in lexicographic (i,j) order, and
// index 0 is the linear order 0 <= 1 <= ... <= n-1.
class RelationEnumerator {
 public:
  explicit RelationEnumerator(int n,
                              RelationFilter filter = RelationFilter::none);
  std::uint64_t count() const { return count_; }
  Relation at(std::uint64_t i) const;

 private:
  int n_;
  RelationFilter filter_;
  std::uint64_t count_;
};

}  // namespace topo

// Topology core suite. The recurring pattern: recompute each operation with
// a deliberately naive oracle (scan the whole family, enumerate all subsets)
// and compare against the library over the complete enumeration at small n,
// so no structural shortcut in the implementation goes untested. Pinned
// values come from the 4-point space with opens
// {{}, {a}, {c}, {a,c}, {a,b,c}, {a,c,d}, X} (points a,b,c,d = 0..3), whose
// closed family and connectivity facts are known exactly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "topo/space.hpp"
#include "util.hpp"

using namespace topo;
using testutil::for_all_spaces;
using testutil::msk;

namespace {

FiniteSpace pinned_four_point() {
  return new_space(4, {0, 1, 4, 5, 7, 13, 15});
}

// Basis {{x},{y},{z,w}} completed under unions; three components by design.
FiniteSpace three_component_space() {
  return new_space(4, {0, 1, 2, 3, 12, 13, 14, 15});
}

Mask oracle_closure(const FiniteSpace& sp, Mask s) {
  Mask c = sp.full;
  for (Mask u : sp.opens) {
    const Mask closed = sp.full & ~u;
    if ((s & ~closed) == 0) c &= closed;
  }
  return c;
}

Mask oracle_interior(const FiniteSpace& sp, Mask s) {
  Mask in = 0;
  for (Mask u : sp.opens)
    if ((u & ~s) == 0) in |= u;
  return in;
}

// Disconnected iff two opens trace nonempty, disjoint pieces covering s.
bool oracle_connected(const FiniteSpace& sp, Mask s) {
  if (s == 0) return true;
  for (Mask u : sp.opens)
    for (Mask v : sp.opens) {
      const Mask a = u & s, b = v & s;
      if (a && b && (a & b) == 0 && (a | b) == s) return false;
    }
  return true;
}

bool oracle_hausdorff(const FiniteSpace& sp) {
  for (int p = 0; p < sp.n; ++p)
    for (int q = p + 1; q < sp.n; ++q) {
      bool split = false;
      for (Mask u : sp.opens) {
        if (!(u >> p & 1u)) continue;
        for (Mask v : sp.opens)
          if ((v >> q & 1u) && (u & v) == 0) {
            split = true;
            break;
          }
        if (split) break;
      }
      if (!split) return false;
    }
  return true;
}

std::string where(const FiniteSpace& sp, Mask s) {
  std::string out = "n=" + std::to_string(sp.n) + " opens={";
  for (Mask u : sp.opens) out += std::to_string(u) + ",";
  out += "} s=" + std::to_string(s);
  return out;
}

}  // namespace

TEST_CASE("new_space validates the axioms and keeps the family as given") {
  const FiniteSpace sp = pinned_four_point();
  CHECK(sp.n == 4);
  CHECK(sp.opens == std::vector<Mask>{0, 1, 4, 5, 7, 13, 15});
  CHECK(sp.is_open(5));
  CHECK_FALSE(sp.is_open(2));
  CHECK(sp.is_closed(2));
  CHECK(sp.is_clopen(0));
  CHECK(sp.is_clopen(15));

  // Duplicates collapse, nothing else is added or removed.
  const FiniteSpace dup = new_space(2, {0, 1, 1, 3, 3});
  CHECK(dup.opens == std::vector<Mask>{0, 1, 3});

  CHECK_NOTHROW(new_space(1, {0, 1}));
  CHECK_THROWS_AS(new_space(2, {0, 1}), AxiomViolation);
  CHECK_THROWS_AS(new_space(2, {1, 3}), AxiomViolation);
  CHECK_THROWS_AS(new_space(0, {0}), SizeLimit);
  CHECK_THROWS_AS(new_space(9, {0}), SizeLimit);
  CHECK_THROWS_AS(new_space(2, {0, 3, 4}), Error);  // stray point

  try {
    new_space(2, {1, 3});
    FAIL("missing empty set went unnoticed");
  } catch (const AxiomViolation& e) {
    CHECK(e.kind == AxiomViolation::Kind::missing_empty);
  }
  try {
    new_space(2, {0, 1});
    FAIL("missing full set went unnoticed");
  } catch (const AxiomViolation& e) {
    CHECK(e.kind == AxiomViolation::Kind::missing_full);
  }
  // {0} union {1} = {0,1} is absent; the witness is the offending pair.
  try {
    new_space(3, {0, 1, 2, 7});
    FAIL("union gap went unnoticed");
  } catch (const AxiomViolation& e) {
    CHECK(e.kind == AxiomViolation::Kind::union_gap);
    CHECK(e.a == 1);
    CHECK(e.b == 2);
  }
  // {0,1} meet {1,2} = {1} is absent.
  try {
    new_space(3, {0, 3, 6, 7});
    FAIL("intersection gap went unnoticed");
  } catch (const AxiomViolation& e) {
    CHECK(e.kind == AxiomViolation::Kind::intersection_gap);
    CHECK(e.a == 3);
    CHECK(e.b == 6);
  }
}

TEST_CASE("closure and interior match the family-scan oracle") {
  const FiniteSpace pinned = pinned_four_point();
  // Closed family of the pinned space, complement by complement.
  std::vector<Mask> closed;
  for (Mask s = 0; s <= pinned.full; ++s)
    if (pinned.is_closed(s)) closed.push_back(s);
  CHECK(closed == std::vector<Mask>{0, 2, 8, 10, 11, 14, 15});
  CHECK(closure(pinned, msk({0})) == msk({0, 1, 3}));
  CHECK(closure(pinned, 0) == 0);
  CHECK(interior(pinned, msk({0, 1})) == msk({0}));

  const FiniteSpace disc = discrete_space(3);
  CHECK(closure(disc, msk({1})) == msk({1}));
  CHECK(interior(disc, msk({1})) == msk({1}));

  int checked = 0;
  for_all_spaces(3, [&](const FiniteSpace& sp) {
    for (Mask s = 0; s <= sp.full; ++s) {
      const Mask c = closure(sp, s), in = interior(sp, s);
      if (c != oracle_closure(sp, s) || in != oracle_interior(sp, s))
        FAIL("closure/interior oracle mismatch at ", where(sp, s));
      // Duality and the closure axioms double as sanity checks.
      if (c != (sp.full & ~interior(sp, sp.full & ~s)))
        FAIL("closure is not the dual of interior at ", where(sp, s));
      if ((s & ~c) != 0 || !sp.is_closed(c) || (in & ~s) != 0 ||
          !sp.is_open(in))
        FAIL("closure/interior violates an axiom at ", where(sp, s));
      ++checked;
    }
  });
  CHECK(checked > 0);
}

TEST_CASE("subspace connectedness agrees with the two-open-cover oracle") {
  const FiniteSpace pinned = pinned_four_point();
  CHECK(is_connected(pinned));
  CHECK_FALSE(subspace_connected(pinned, msk({1, 3})));
  CHECK(subspace_connected(pinned, msk({0, 1, 2})));
  CHECK(subspace_connected(pinned, msk({0, 2, 3})));
  CHECK(subspace_connected(pinned, pinned.full));
  CHECK(subspace_connected(pinned, 0));  // empty set counts as connected

  int checked = 0;
  for_all_spaces(3, [&](const FiniteSpace& sp) {
    for (Mask s = 0; s <= sp.full; ++s) {
      if (subspace_connected(sp, s) != oracle_connected(sp, s))
        FAIL("connectivity oracle mismatch at ", where(sp, s));
      ++checked;
    }
  });
  CHECK(checked > 0);
}

TEST_CASE("components are maximal connected blocks and partition the space") {
  const FiniteSpace three = three_component_space();
  const Partition comp3 = components(three);
  REQUIRE(comp3.size() == 3);
  CHECK(comp3.blocks == std::vector<Mask>{msk({0}), msk({1}), msk({2, 3})});
  CHECK(comp3.block_of(2) == comp3.block_of(3));
  CHECK(comp3.block_of(0) != comp3.block_of(1));
  CHECK_FALSE(is_connected(three));
  CHECK_FALSE(is_k_connected(three, 2));
  CHECK(is_k_connected(three, 3));
  CHECK_THROWS_AS(is_k_connected(three, 0), KOutOfRange);

  CHECK(components(indiscrete_space(4)).size() == 1);
  CHECK(components(discrete_space(4)).size() == 4);

  for_all_spaces(4, [&](const FiniteSpace& sp) {
    const Partition comp = components(sp);
    Mask covered = 0;
    for (Mask b : comp.blocks) {
      if (b == 0 || (b & covered))
        FAIL("component blocks overlap or are empty at ", where(sp, b));
      covered |= b;
      if (!subspace_connected(sp, b))
        FAIL("component block is not connected at ", where(sp, b));
      // Maximality: adjoining any outside point must disconnect the block.
      for (int p = 0; p < sp.n; ++p)
        if (!(b >> p & 1u) && subspace_connected(sp, b | (Mask(1) << p)))
          FAIL("component block is not maximal at ", where(sp, b));
    }
    if (covered != sp.full) FAIL("components do not cover ", where(sp, 0));
    if (is_connected(sp) != (comp.size() == 1))
      FAIL("is_connected disagrees with the block count at ", where(sp, 0));
  });
}

TEST_CASE("every nonempty clopen set is a union of component blocks") {
  for_all_spaces(4, [&](const FiniteSpace& sp) {
    const Partition comp = components(sp);
    for (Mask b : comp.blocks)
      if (!sp.is_clopen(b))
        FAIL("component block is not clopen at ", where(sp, b));
    for (Mask s = 1; s <= sp.full; ++s) {
      if (!sp.is_clopen(s)) continue;
      Mask rebuilt = 0;
      for (Mask b : comp.blocks)
        if (b & s) rebuilt |= b;
      if (rebuilt != s)
        FAIL("clopen set is not a union of components at ", where(sp, s));
    }
  });
}

TEST_CASE("clopen partitions group components and validate their inputs") {
  const FiniteSpace three = three_component_space();
  CHECK(clopen_partition(three, 3) ==
        std::vector<Mask>{msk({0}), msk({1}), msk({2, 3})});
  CHECK(clopen_partition(indiscrete_space(3), 1) ==
        std::vector<Mask>{msk({0, 1, 2})});
  CHECK_THROWS_AS(clopen_partition(three, 4), TooFewComponents);
  CHECK_THROWS_AS(clopen_partition(three, 0), KOutOfRange);

  // Any grouping passes as long as the blocks are disjoint, covering, clopen.
  for (int k = 1; k <= 4; ++k) {
    const FiniteSpace disc = discrete_space(4);
    const std::vector<Mask> part = clopen_partition(disc, k);
    REQUIRE(part.size() == std::size_t(k));
    Mask covered = 0;
    for (Mask b : part) {
      CHECK(b != 0);
      CHECK((b & covered) == 0);
      CHECK(disc.is_clopen(b));
      covered |= b;
    }
    CHECK(covered == disc.full);
  }
}

TEST_CASE("separated set pairs and point separators") {
  const FiniteSpace pinned = pinned_four_point();
  CHECK(separated(pinned, msk({0}), msk({2})));
  CHECK_FALSE(separated(pinned, msk({0}), msk({0})));
  CHECK_THROWS_AS(separated(pinned, 0, msk({1})), EmptyInput);
  CHECK_THROWS_AS(separated(pinned, msk({1}), 0), EmptyInput);

  const FiniteSpace disc = discrete_space(3);
  CHECK(separated(disc, msk({0}), msk({1, 2})));

  // Symmetry across every nonempty pair at n <= 3.
  for_all_spaces(3, [&](const FiniteSpace& sp) {
    for (Mask a = 1; a <= sp.full; ++a)
      for (Mask b = 1; b <= sp.full; ++b)
        if (separated(sp, a, b) != separated(sp, b, a))
          FAIL("separated is not symmetric at ", where(sp, a), " b=", b);
  });

  const FiniteSpace three = three_component_space();
  CHECK(separates(three, msk({1}), 0, 2));
  CHECK_FALSE(separates(three, 0, 2, 3));  // same component stays together
  CHECK(separates(discrete_space(2), 0, 0, 1));
  CHECK_THROWS_AS(separates(three, msk({1}), 1, 2), PointInSeparator);
}

TEST_CASE("Phragmen-Brouwer detection with a pinned failing witness") {
  const PbpResult bad = has_pbp(pinned_four_point());
  CHECK_FALSE(bad.holds);
  // First separated open pair in scan order is ({a},{c}); no connected
  // subset of {b,d} separates a from c because {b,d} is the disconnected
  // pair and each singleton leaves the rest connected.
  CHECK(bad.a == msk({0}));
  CHECK(bad.b == msk({2}));
  CHECK(bad.x == 0);
  CHECK(bad.y == 2);

  for (int n = 1; n <= 4; ++n) {
    CHECK(has_pbp(discrete_space(n)).holds);
    CHECK(has_pbp(indiscrete_space(n)).holds);
  }
}

TEST_CASE("path components equal components over the full enumeration") {
  for_all_spaces(4, [&](const FiniteSpace& sp) {
    if (path_components(sp).blocks != components(sp).blocks)
      FAIL("path components differ from components at ", where(sp, 0));
  });

  CHECK(path_components(discrete_space(3)).size() == 3);
  const FiniteSpace sierpinski = new_space(2, {0, 1, 3});
  CHECK(path_components(sierpinski).size() == 1);
  CHECK(subspace_path_connected(sierpinski, 0));
}

TEST_CASE("quotient spaces carry the preimage-open family") {
  // The all-singletons partition reproduces the space bit for bit.
  for_all_spaces(3, [&](const FiniteSpace& sp) {
    Partition ident;
    ident.n = sp.n;
    for (int p = 0; p < sp.n; ++p) ident.blocks.push_back(Mask(1) << p);
    if (quotient_space(sp, ident).opens != sp.opens)
      FAIL("identity quotient changed the family at ", where(sp, 0));
  });

  Partition whole;
  whole.n = 2;
  whole.blocks = {msk({0, 1})};
  const FiniteSpace point = quotient_space(indiscrete_space(2), whole);
  CHECK(point.n == 1);
  CHECK(point.opens == std::vector<Mask>{0, 1});

  Partition halves;
  halves.n = 4;
  halves.blocks = {msk({0, 1}), msk({2, 3})};
  const FiniteSpace q = quotient_space(discrete_space(4), halves);
  CHECK(q.n == 2);
  CHECK(q.opens == std::vector<Mask>{0, 1, 2, 3});

  Partition broken;
  broken.n = 2;
  broken.blocks = {msk({0})};  // does not cover
  CHECK_THROWS_AS(quotient_space(discrete_space(2), broken), InvalidPartition);
  broken.blocks = {msk({0, 1}), msk({1})};  // overlap
  CHECK_THROWS_AS(quotient_space(discrete_space(2), broken), InvalidPartition);
  broken.blocks = {msk({0, 1}), 0};  // empty block
  CHECK_THROWS_AS(quotient_space(discrete_space(2), broken), InvalidPartition);
  broken.n = 3;  // wrong carrier
  broken.blocks = {msk({0, 1, 2})};
  CHECK_THROWS_AS(quotient_space(discrete_space(2), broken), InvalidPartition);
}

TEST_CASE("hausdorff detection matches the pairwise-separation definition") {
  for_all_spaces(4, [&](const FiniteSpace& sp) {
    const bool lib = is_hausdorff(sp);
    if (lib != oracle_hausdorff(sp))
      FAIL("hausdorff oracle mismatch at ", where(sp, 0));
    bool all_singletons = true;
    for (int p = 0; p < sp.n; ++p)
      if (!sp.is_open(Mask(1) << p)) all_singletons = false;
    if (lib != all_singletons)
      FAIL("hausdorff does not mean discrete at ", where(sp, 0));
  });
}

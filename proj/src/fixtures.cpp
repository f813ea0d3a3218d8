// Worked examples with every verdict pinned by hand. Each fixture builds
// its space and relation from scratch, states what must come out, and
// reports any mismatch with enough text to debug from the failure alone.
#include <functional>

#include "topo/theoremlab.hpp"

namespace topo {

namespace {

struct Probe {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

// Three components {x}, {y}, {z,w} glued from a basis; the space is not
// quasi-ordered because no complete anti-symmetric relation on it can have
// closed sections across the indiscrete pair.
void fx_example_3(Probe& p) {
  const FiniteSpace sp =
      new_space(4, {0b0000, 0b0001, 0b0010, 0b0011, 0b1100, 0b1101, 0b1110,
                    0b1111});
  const Partition comp = components(sp);
  p.expect(comp.blocks.size() == 3, "expected three components");
  p.expect(comp.blocks == std::vector<Mask>{0b0001, 0b0010, 0b1100},
           "unexpected component blocks");
  p.expect(subspace_connected(sp, 0b1100), "the pair {z,w} must be connected");
  p.expect(!is_connected(sp), "the space must be disconnected");
  p.expect(!is_quasi_ordered(sp).yes, "the space must not be quasi-ordered");
}

// Two discrete points. Every relation is continuous; PP, NP, PI and IP
// hold for all sixteen relations, and T fails exactly when II does.
void fx_example_4(Probe& p) {
  const FiniteSpace sp = discrete_space(2);
  const Relation r = relation_from_pairs(2, {{0, 1}, {1, 0}, {0, 0}});
  const OrderPropertyVector v = order_properties(r);
  p.expect(v.pp.holds && v.pi.holds && v.ip.holds &&
               v.negatively_transitive_p.holds,
           "the named relation must satisfy PP, PI, IP and NP");
  p.expect(!v.transitive.holds && !v.ii.holds,
           "the named relation must fail T and II");
  p.expect(continuity(sp, r).continuous.holds,
           "the named relation must be continuous");
  for (std::uint64_t code = 0; code < 16; ++code) {
    const Relation q = Relation::from_code(2, code);
    const OrderPropertyVector w = order_properties(q);
    p.expect(continuity(sp, q).continuous.holds,
             "every relation on two discrete points is continuous");
    p.expect(w.pp.holds && w.pi.holds && w.ip.holds &&
                 w.negatively_transitive_p.holds,
             "every relation on two points satisfies PP, PI, IP and NP");
    p.expect(w.transitive.holds == w.ii.holds,
             "on two points T and II stand or fall together");
  }
  // The full relation: indifference everywhere, sections disconnected.
  const Relation full = Relation::from_code(2, 15);
  const OrderPropertyVector w = order_properties(full);
  p.expect(w.ii.holds && w.semi_transitive.holds,
           "the full relation is semi-transitive with transitive I");
  p.expect(!section_connectivity(sp, full).i_sections_connected.holds,
           "the full relation has disconnected indifference sections");
}

// Four points, seven opens, no Phragmen-Brouwer property: {b,d} is a
// disconnected set that continuous indifference sections with
// path-connected upper sections can never produce.
void fx_example_7(Probe& p) {
  const FiniteSpace sp =
      new_space(4, {0b0000, 0b0001, 0b0100, 0b0101, 0b0111, 0b1101, 0b1111});
  p.expect(is_connected(sp), "the space must be connected");
  p.expect(!has_pbp(sp).holds,
           "the space must fail the Phragmen-Brouwer property");
  p.expect(!subspace_connected(sp, 0b1010), "{b,d} must be disconnected");
  p.expect(subspace_connected(sp, 0b0111) && subspace_connected(sp, 0b1101),
           "{a,b,c} and {a,c,d} must be connected");
  const std::vector<Mask> closed = {0b0000, 0b0010, 0b1000, 0b1010,
                                    0b1110, 0b1011, 0b1111};
  for (Mask m : closed)
    p.expect(sp.is_closed(m),
             "mask " + std::to_string(m) + " must be closed");
  std::uint64_t hits = 0;
  for (std::uint64_t code = 0; code < (1u << 16); ++code) {
    const Relation r = Relation::from_code(4, code);
    if (!continuity(sp, r).continuous.holds) continue;
    const OrderPropertyVector v = order_properties(r);
    if (!v.ii.holds) continue;
    const SectionConnectivityReport sec = section_connectivity(sp, r);
    if (!sec.r_upper_path_connected.holds) continue;
    ++hits;
    if (!v.pi.holds) {
      p.problems.push_back("continuous + II + path-connected upper sections "
                           "must imply PI here (code " +
                           std::to_string(code) + ")");
      return;
    }
    const DerivedParts d = derive_parts(r);
    for (int x = 0; x < 4; ++x)
      if (d.sym.row[x] == 0b1010) {
        p.problems.push_back(
            "no indifference section may equal the disconnected {b,d} "
            "(code " + std::to_string(code) + ")");
        return;
      }
  }
  p.expect(hits > 0, "the hypothesis set must be satisfiable on this space");
}

// Three discrete points carrying the cyclic tournament: complete,
// anti-symmetric, continuous, yet not transitive. Three components put it
// outside every two-component hypothesis.
void fx_cyclic_tournament(Probe& p) {
  const FiniteSpace sp = discrete_space(3);
  const Relation r = relation_from_pairs(
      3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 0}});
  const OrderPropertyVector v = order_properties(r);
  p.expect(v.complete.holds, "the cyclic tournament is complete");
  p.expect(v.anti_symmetric.holds, "the cyclic tournament is anti-symmetric");
  p.expect(!v.transitive.holds, "the cyclic tournament is not transitive");
  p.expect(continuity(sp, r).continuous.holds,
           "every relation on a discrete space is continuous");
  p.expect(is_quasi_ordered(sp).yes, "discrete spaces are quasi-ordered");
  p.expect(components(sp).blocks.size() == 3, "three components");
}

// Six points in three indiscrete blocks with one strict pair across the
// middle and last blocks: non-trivial and 1-non-trivial, but neither
// componentwise nor strongly non-trivial, separating Definitions 4, 5, 7.
void fx_three_blocks(Probe& p) {
  const std::vector<Mask> blocks = {0b000011, 0b001100, 0b110000};
  std::vector<Mask> opens;
  for (Mask u = 0; u < 8; ++u) {
    Mask m = 0;
    for (int b = 0; b < 3; ++b)
      if ((u >> b) & 1u) m |= blocks[b];
    opens.push_back(m);
  }
  const FiniteSpace sp = new_space(6, opens);
  p.expect(components(sp).blocks == blocks, "three two-point components");
  const Relation r = relation_from_pairs(6, {{2, 4}});
  const NontrivialityReport one = nontriviality(sp, r, 1);
  p.expect(one.non_trivial.holds, "a strict pair exists");
  p.expect(one.k_non_trivial.holds, "1-non-trivial");
  p.expect(!one.componentwise_non_trivial.holds,
           "not componentwise non-trivial");
  p.expect(!one.strongly_non_trivial.holds, "not strongly non-trivial");
  p.expect(!nontriviality(sp, r, 2).k_non_trivial.holds,
           "a single strict pair cannot be 2-non-trivial");
}

// Two discrete points with one strict pair. A dual representation exists
// and the other three conditions of the representation equivalence split:
// strong separability fails while the dual is pseudo-transitive and the
// coverings have closed sections. Disconnectedness is what lets the
// equivalence break.
void fx_two_point_dual(Probe& p) {
  const FiniteSpace sp = discrete_space(2);
  const Relation q = relation_from_pairs(2, {{0, 1}});
  p.expect(dual_representation(sp, q).has_value(),
           "the single strict pair has a dual representation");
  const SeparabilityReport sep = separability(q);
  p.expect(!sep.strongly_separable, "not strongly separable");
  p.expect(!sep.separable, "not separable");
  p.expect(order_properties(q).pseudo_transitive_dual.holds,
           "the dual pair is pseudo-transitive");
  p.expect(covering_closed_sections(sp, q).holds,
           "covering relations have closed sections");
}

// The Sierpinski space with the identity relation: no strict pairs, so not
// fragile, but the incomparable pair (0,1) has comparable points in every
// neighborhood box, so the relation is flimsy.
void fx_sierpinski_flimsy(Probe& p) {
  const FiniteSpace sp = new_space(2, {0b00, 0b01, 0b11});
  const Relation r = relation_from_pairs(2, {{0, 0}, {1, 1}});
  const RobustnessReport rep = robustness(sp, r);
  p.expect(rep.flimsy.holds, "the identity on Sierpinski space is flimsy");
  p.expect(!rep.fragile.holds, "no strict pair, so not fragile");
}

}  // namespace

FixtureReport run_fixtures() {
  const std::vector<
      std::pair<std::string, std::function<void(Probe&)>>>
      fixtures = {
          {"example-3", fx_example_3},
          {"example-4", fx_example_4},
          {"example-7", fx_example_7},
          {"example-2-analog", fx_cyclic_tournament},
          {"example-1-analog", fx_three_blocks},
          {"theorem-4f", fx_two_point_dual},
          {"sierpinski-flimsy", fx_sierpinski_flimsy},
      };
  FixtureReport rep;
  for (const auto& [name, fn] : fixtures) {
    Probe p;
    try {
      fn(p);
    } catch (const std::exception& e) {
      p.problems.push_back(std::string("exception: ") + e.what());
    }
    if (p.problems.empty()) {
      rep.passed.push_back(name);
    } else {
      for (const std::string& detail : p.problems)
        rep.failures.push_back({name, detail});
    }
  }
  return rep;
}

}  // namespace topo

// Sharpness witnesses: relations showing each connectivity hypothesis is
// doing real work. Every construction re-checks the exact property list it
// promises before returning; a failed post-check is a library bug, not a
// caller error, and raises plain Error.
#include "topo/theoremlab.hpp"

namespace topo {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok)
    throw Error(std::string("witness post-check failed: ") + what);
}

int block_of(const std::vector<Mask>& blocks, int x) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if ((blocks[i] >> x) & 1u) return static_cast<int>(i);
  return -1;
}

// Blocks stacked into a strict linear order: everything in an earlier
// block beats everything in a later one, nothing inside a block compares.
// With k+1 clopen blocks this is k-non-trivial, continuous and
// semi-transitive yet incomplete.
WitnessResult chain_witness(const FiniteSpace& sp, int k) {
  if (k < 1) throw KOutOfRange("chain witness needs k >= 1");
  const std::vector<Mask> blocks = clopen_partition(sp, k + 1);
  Relation r;
  r.n = sp.n;
  for (int x = 0; x < sp.n; ++x) {
    const int bx = block_of(blocks, x);
    for (std::size_t j = bx + 1; j < blocks.size(); ++j) r.row[x] |= blocks[j];
  }
  const OrderPropertyVector v = order_properties(r);
  ensure(v.anti_symmetric.holds, "chain anti-symmetric");
  ensure(v.transitive.holds, "chain transitive");
  ensure(v.semi_transitive.holds, "chain semi-transitive");
  ensure(v.ii.holds, "chain ii");
  ensure(!v.complete.holds, "chain incomplete");
  ensure(continuity(sp, r).continuous.holds, "chain continuous");
  ensure(nontriviality(sp, r, k).k_non_trivial.holds, "chain k-non-trivial");
  return {r, k,
          {"anti_symmetric", "transitive", "semi_transitive", "ii",
           "incomplete", "continuous", "k_non_trivial"}};
}

// A continuous complete anti-symmetric relation that cycles through three
// clopen blocks, so transitivity fails although every section is closed.
WitnessResult cyclic_witness(const FiniteSpace& sp) {
  const QuasiOrderResult q = is_quasi_ordered(sp);
  if (!q.yes)
    throw PreconditionUnmet("cyclic witness needs a quasi-ordered space");
  const std::vector<Mask> blocks = clopen_partition(sp, 3);
  Relation r;
  r.n = sp.n;
  for (int x = 0; x < sp.n; ++x) {
    const int bx = block_of(blocks, x);
    r.row[x] = (q.witness->row[x] & blocks[bx]) | blocks[(bx + 1) % 3];
  }
  const OrderPropertyVector v = order_properties(r);
  ensure(v.complete.holds, "cyclic complete");
  ensure(v.anti_symmetric.holds, "cyclic anti-symmetric");
  ensure(!v.transitive.holds, "cyclic non-transitive");
  ensure(continuity(sp, r).closed_sections_r.holds, "cyclic closed sections");
  return {r, 1,
          {"complete", "anti_symmetric", "not_transitive",
           "closed_sections_r"}};
}

// Everything weakly prefers the second block: transitive, negatively
// transitive, with closed upper sections and open strict upper sections,
// strongly non-trivial, and still incomplete inside the first block.
WitnessResult cross_witness(const FiniteSpace& sp) {
  const std::vector<Mask> blocks = clopen_partition(sp, 2);
  Relation r;
  r.n = sp.n;
  for (int x = 0; x < sp.n; ++x) r.row[x] = blocks[1];
  const OrderPropertyVector v = order_properties(r);
  ensure(v.transitive.holds, "cross transitive");
  ensure(v.negatively_transitive_p.holds, "cross NP");
  ensure(!v.complete.holds, "cross incomplete");
  const ContinuityReport cont = continuity(sp, r);
  ensure(cont.closed_upper_r.holds, "cross closed upper sections");
  ensure(cont.open_upper_p.holds, "cross open strict upper sections");
  ensure(nontriviality(sp, r, 1).strongly_non_trivial.holds,
         "cross strongly non-trivial");
  return {r, 1,
          {"transitive", "negatively_transitive_p", "incomplete",
           "closed_upper_r", "open_upper_p", "strongly_non_trivial"}};
}

}  // namespace

Construction construction_from_name(const std::string& name) {
  if (name == "chain") return Construction::chain;
  if (name == "product") return Construction::product;
  if (name == "cyclic") return Construction::cyclic;
  if (name == "cross") return Construction::cross;
  throw ParseError("unknown construction: " + name);
}

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::chain:
      return "chain";
    case Construction::product:
      return "product";
    case Construction::cyclic:
      return "cyclic";
    case Construction::cross:
      return "cross";
  }
  return "";
}

WitnessResult witness(const FiniteSpace& sp, Construction c, int k) {
  if (c != Construction::chain && k != 1)
    throw KOutOfRange("only the chain construction takes k");
  switch (c) {
    case Construction::chain:
      return chain_witness(sp, k);
    case Construction::product:
      // The two-block chain: one clopen half strictly above the other.
      return chain_witness(sp, 1);
    case Construction::cyclic:
      return cyclic_witness(sp);
    case Construction::cross:
      return cross_witness(sp);
  }
  throw Error("unreachable construction");
}

}  // namespace topo

// Internals of the verification engine, shared by the catalog, the sweep
// driver and the counterexample search. Not installed; the public surface
// is topo/theoremlab.hpp.
//
// Layout of a sweep: relation-level facts live in a per-n table indexed by
// relation code (built once, cached); space-level facts live in a SpaceCtx
// built once per topology; pair-level facts are computed lazily per
// (space, relation) and memoized in Ctx so several claims sharing a sweep
// never recompute them. Hypotheses carry a cost class and run cheapest
// first under short-circuiting.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topo/theoremlab.hpp"

namespace topo::engine {

enum RelBit : std::uint32_t {
  rb_reflexive = 1u << 0,
  rb_complete = 1u << 1,
  rb_symmetric = 1u << 2,
  rb_asymmetric = 1u << 3,
  rb_anti_symmetric = 1u << 4,
  rb_non_trivial = 1u << 5,
  rb_transitive = 1u << 6,
  rb_np = 1u << 7,
  rb_pp = 1u << 8,
  rb_ii = 1u << 9,
  rb_pi = 1u << 10,
  rb_ip = 1u << 11,
  rb_semi_transitive = 1u << 12,
  rb_pseudo_transitive_dual = 1u << 13,
  rb_strongly_non_trivial = 1u << 14,
};

struct RelEntry {
  std::uint16_t flags = 0;
  std::array<std::uint8_t, 4> prow{}, irow{};
};

struct RelTable {
  int n = 0;
  std::vector<RelEntry> rows;
};

const RelTable& rel_table(int n);  // 1 <= n <= 4, built once per n

struct SpaceCtx {
  const FiniteSpace* sp = nullptr;
  Partition comp;
  int ncomp = 1;
  bool connected = true;
  bool discrete = false;
  mutable int quasi = -1;  // -1 unknown, else 0/1
  mutable int pbp = -1;

  bool quasi_ordered() const;
  bool pbp_holds() const;
};

SpaceCtx make_space_ctx(const FiniteSpace& sp);

// Lazily memoized pair-level facts. Bit i of computed marks value bit i
// as meaningful.
enum PairBit : unsigned {
  pb_continuous,
  pb_closed_upper_r,
  pb_closed_lower_r,
  pb_open_upper_p,
  pb_open_lower_p,
  pb_closed_sections_r,
  pb_open_sections_p,
  pb_i_sections_connected,
  pb_r_sections_connected,
  pb_r_upper_path_connected,
  pb_r_lower_path_connected,
  pb_r_sections_path_connected,
  pb_componentwise_non_trivial,
  pb_k_non_trivial_comps,
  pb_strongly_separable,
  pb_separable,
  pb_has_dual_representation,
  pb_covering_closed_sections,
  pb_fragile,
  pb_flimsy,
};

struct Ctx {
  const SpaceCtx* s = nullptr;
  const RelEntry* e = nullptr;
  Relation r;  // empty (n = 0) for space-only claims
  std::uint32_t computed = 0;
  std::uint32_t value = 0;

  bool rel_bit(std::uint32_t bit) const { return (e->flags & bit) != 0; }
  bool pair_bit(PairBit b, bool (*compute)(Ctx&)) {
    const std::uint32_t m = 1u << b;
    if (!(computed & m)) {
      if (compute(*this)) value |= m;
      computed |= m;
    }
    return (value & m) != 0;
  }
};

Ctx make_ctx(const SpaceCtx& s, const RelEntry* e, const Relation& r);

using PredFn = bool (*)(Ctx&);

struct Pred {
  int cost = 0;  // 0 table bit, 1 space fact, 2 pair fact, 3 heavy pair fact
  PredFn fn = nullptr;
};

const std::map<std::string, Pred>& predicate_registry();

// Conclusion evaluators return pass/fail; on failure they fill the witness
// tuple and a note naming the failing leg.
using ConclFn = bool (*)(Ctx&, std::vector<int>&, std::string&);

const std::map<std::string, ConclFn>& conclusion_registry();

// Pairwise conclusions take a second relation (T4 identical-or-inverse).
using PairConclFn = bool (*)(Ctx&, const Relation&, std::vector<int>&,
                             std::string&);

PairConclFn pairwise_conclusion(const std::string& name);

// Failure explanation for biconditional reporting: the witness tuple and a
// short description of why the named predicate fails on this instance.
void explain_predicate(const std::string& name, Ctx& ctx,
                       std::vector<int>& witness, std::string& note);

// A claim resolved against the registries, ready for the sweep.
struct ResolvedClaim {
  const ClaimSpec* spec = nullptr;
  std::vector<Pred> space_hyps;            // cost 1, checked once per space
  std::vector<Pred> rel_hyps;              // cost 0/2/3, cheapest first
  ConclFn conclusion = nullptr;            // directed claims
  PredFn concl_pred = nullptr;             // conclusion that is a predicate
  std::string concl_pred_name;
  PredFn lhs = nullptr, rhs = nullptr;     // biconditional claims
  PairConclFn pair_conclusion = nullptr;   // pairwise claims
  std::vector<Pred> pair_filter;           // pairwise: per-relation filter
};

ResolvedClaim resolve(const ClaimSpec& spec);  // UnknownClaim on bad names

}  // namespace topo::engine

// Properties coupling a relation to a finite space: section topology and
// connectivity, the non-triviality ladder, fragility and flimsiness, the
// quasi-order witness search, and continuous dual representations.
//
// Witness encodings reuse Verdict. Section verdicts that fail carry (x, kind)
// where kind selects the family: 0 = R(x) closed, 1 = R^-1(x) closed,
// 2 = P(x) open, 3 = P^-1(x) open (covering sections use the same 0..3 over
// the lower then upper covering). Fragility and flimsiness are existence
// properties, so there a verdict that holds carries the found tuple
// (x, y, x', y') instead.
#pragma once

#include <optional>
#include <vector>

#include "topo/relation.hpp"
#include "topo/space.hpp"

namespace topo {

struct ContinuityReport {
  Verdict closed_upper_r, closed_lower_r;  // witness (x)
  Verdict open_upper_p, open_lower_p;      // witness (x)
  Verdict closed_sections_r;               // witness (x, kind)
  Verdict open_sections_p;                 // witness (x, kind)
  Verdict continuous;                      // witness (x, kind)
};

ContinuityReport continuity(const FiniteSpace& sp, const Relation& r);

struct SectionConnectivityReport {
  Verdict i_sections_connected;       // every I(x) connected; witness (x)
  Verdict r_sections_connected;       // R(x) and R^-1(x); witness (x, kind)
  Verdict r_upper_path_connected;     // witness (x)
  Verdict r_lower_path_connected;     // witness (x)
  Verdict r_sections_path_connected;  // conjunction; witness (x, kind)
};

SectionConnectivityReport section_connectivity(const FiniteSpace& sp,
                                               const Relation& r);

// Definitions 4, 5 and 7. The k-clause searches strictly increasing index
// tuples m, n over the component list L with (a) a strict pair linking
// C_{m_i} and C_{n_i} for every i and (b) weak comparability between blocks
// for every i < j; indices run up to |L|. Witness tuples for the k-clause
// live in k_witness_m / k_witness_n when it holds.
struct NontrivialityReport {
  Verdict non_trivial;                // P nonempty
  Verdict componentwise_non_trivial;  // fails at (i) no strict pair inside
                                      // component i, or (i, j) no weak pair
  Verdict k_non_trivial;
  Verdict strongly_non_trivial;       // holds at (x) per Definition 7
  int k = 1;
  std::vector<int> k_witness_m, k_witness_n;
};

NontrivialityReport nontriviality(const FiniteSpace& sp, const Relation& r,
                                  int k);

// Same report against a component partition the caller already has.
NontrivialityReport nontriviality(const FiniteSpace& sp, const Relation& r,
                                  int k, const Partition& comp);

// Definitions 8 and 9 through minimal neighborhoods: the minimal open box
// U_x x U_y sits inside every open neighborhood of (x, y), so quantifying
// over it is exact. Verdicts that hold carry (x, y, x', y').
struct RobustnessReport {
  Verdict fragile;  // some strict (x,y) with (x',y') incomparable in the box
  Verdict flimsy;   // some incomparable (x,y) with comparable (x',y') there
};

RobustnessReport robustness(const FiniteSpace& sp, const Relation& r);

// Sections of both covering relations of the reflexive hull of the strict
// part, all required closed. Total in R since P = R minus R^T is always
// asymmetric. Failing witness (x, kind) with kind 0..3 as in the header note.
Verdict covering_closed_sections(const FiniteSpace& sp, const Relation& r);

struct QuasiOrderResult {
  bool yes = false;
  std::optional<Relation> witness;  // first continuous candidate found
};

// Searches the complete anti-symmetric relations in enumeration order.
QuasiOrderResult is_quasi_ordered(const FiniteSpace& sp);

// Difference constraints over abstract variables: le pairs demand
// value[a] <= value[b], lt pairs demand strict increase. Feasible exactly
// when no directed cycle mixes in a strict edge; solutions come out as
// nonnegative integer levels.
struct InequalitySystem {
  int vars = 0;
  std::vector<std::pair<int, int>> le;
  std::vector<std::pair<int, int>> lt;
};

std::optional<std::vector<long long>> solve(const InequalitySystem& sys);

// Definition 11(iv) at finite scale. Continuous real maps on a finite space
// are constant on components, so u and v reduce to one variable per
// component: each strict pair forces u_{c(x)} < v_{c(y)}, each non-pair
// forces v_{c(y)} <= u_{c(x)}. Values are expanded back to per-point arrays
// and the defining biconditional is re-verified before returning.
struct DualRepresentation {
  std::vector<long long> u, v;
};

std::optional<DualRepresentation> dual_representation(const FiniteSpace& sp,
                                                      const Relation& p);

// Indifference classes of R. I must be an equivalence relation (R reflexive
// and I transitive), otherwise InvalidPartition.
Partition indifference_partition(const Relation& r);

// ([x],[y]) related iff every representative pair is; the all-pairs form is
// what the quotient constructions downstream rely on.
Relation quotient_relation(const Relation& r, const Partition& part);

}  // namespace topo

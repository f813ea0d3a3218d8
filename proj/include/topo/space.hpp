// Finite topological spaces on n <= 8 labeled points.
//
// A subset of {0..n-1} is a bitmask; the topology is the explicit list of its
// open masks. Everything downstream leans on two finite-space facts:
//
//   * each point p has a smallest open neighborhood U_p (the intersection of
//     all opens containing p), so closure(S) = {x : U_x meets S} and
//     interior(S) = {p in S : U_p subset of S};
//   * a subset is disconnected exactly when two opens trace a clopen split of
//     it, which is Definition-of-connectedness verbatim and O(|opens|) to test.
//
// Components are computed definitionally: the component of p is the union of
// all connected subsets containing p. Path components use the specialization
// preorder p below q iff p lies in closure({q}); on finite spaces the two
// partitions coincide, an equality the test suite asserts over the full
// enumeration rather than assuming.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "topo/error.hpp"

namespace topo {

using Mask = unsigned;  // subset of {0..n-1}, bit p = point p

constexpr int kMaxPoints = 8;

// Pairwise disjoint nonempty blocks covering {0..n-1}, kept sorted by their
// smallest element so block indices are reproducible.
struct Partition {
  int n = 0;
  std::vector<Mask> blocks;
  int block_of(int p) const;
  std::size_t size() const { return blocks.size(); }
};

struct FiniteSpace {
  int n = 0;
  Mask full = 0;
  std::vector<Mask> opens;             // ascending, deduplicated
  std::vector<std::uint8_t> open_at;   // 1<<n bytes, constant-time membership
  std::array<Mask, kMaxPoints> min_nbhd{};

  bool is_open(Mask s) const { return open_at[s] != 0; }
  bool is_closed(Mask s) const { return open_at[(~s) & full] != 0; }
  bool is_clopen(Mask s) const { return is_open(s) && is_closed(s); }
};

// Validates the axioms and stores the family exactly as given (deduplicated,
// never silently completed). Throws AxiomViolation with the witness pair of
// the first union/intersection gap in scan order.
FiniteSpace new_space(int n, std::vector<Mask> opens);

FiniteSpace discrete_space(int n);
FiniteSpace indiscrete_space(int n);

Mask closure(const FiniteSpace& sp, Mask s);
Mask interior(const FiniteSpace& sp, Mask s);

// Connectedness of s in the subspace topology (traces of opens). The empty
// set counts as connected; see the section-connectivity convention.
bool subspace_connected(const FiniteSpace& sp, Mask s);

Partition components(const FiniteSpace& sp);
Partition subspace_components(const FiniteSpace& sp, Mask s);
bool is_connected(const FiniteSpace& sp);
bool is_k_connected(const FiniteSpace& sp, int k);

// k pairwise-disjoint covering clopen sets, built by grouping components.
// Throws TooFewComponents when the space has fewer than k components.
std::vector<Mask> clopen_partition(const FiniteSpace& sp, int k);

// closure(a) misses b and a misses closure(b); both sets must be nonempty.
bool separated(const FiniteSpace& sp, Mask a, Mask b);

// x and y fall into different components of the subspace X \ s.
bool separates(const FiniteSpace& sp, Mask s, int x, int y);

struct PbpResult {
  bool holds = true;
  // Failing witness: separated opens a, b and points x in a, y in b with no
  // connected subset of X \ (a|b) separating them.
  Mask a = 0, b = 0;
  int x = -1, y = -1;
};

// Phragmen-Brouwer property. Quantifies over separated open pairs only, but
// candidate separators range over all subsets of the complement, the empty
// set included.
PbpResult has_pbp(const FiniteSpace& sp);

bool subspace_path_connected(const FiniteSpace& sp, Mask s);
Partition path_components(const FiniteSpace& sp);

// Points are the partition blocks; a block set is open iff its preimage is.
FiniteSpace quotient_space(const FiniteSpace& sp, const Partition& part);

// On a finite space Hausdorff forces singletons open, i.e. discreteness;
// implemented via minimal neighborhoods and tested against the direct
// pairwise-separation definition.
bool is_hausdorff(const FiniteSpace& sp);

// All topologies on n labeled points (1 <= n <= 5), each exactly once,
// ordered by the family's bitmask encoding ascending. The list is built once
// per n and shared, so streams restart from any index for sharding.
class TopologyEnumerator {
 public:
  explicit TopologyEnumerator(int n);
  std::size_t count() const { return spaces_->size(); }
  const FiniteSpace& at(std::size_t i) const { return (*spaces_)[i]; }

 private:
  const std::vector<FiniteSpace>* spaces_;
};

}  // namespace topo

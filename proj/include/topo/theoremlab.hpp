// Exhaustive verification harness. A claim is data: hypothesis predicate
// names, a conclusion name, an enumeration domain and a size bound. The
// engine sweeps every (space, relation) instance inside the bound, counts
// hypothesis hits, and records each instance whose conclusion fails.
//
// Equivalence-shaped conclusions are evaluated per instance as a
// biconditional; the sides' individual hit counts ride along for reporting.
// Sharding splits the sweep by topology index (relation code when no
// topology is in play) and merges by summing counts and concatenating
// violations, then sorting, so the shard count never shows in the output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/relation.hpp"
#include "topo/space.hpp"
#include "topo/toporel.hpp"

namespace topo {

enum class ClaimDomain {
  pair,           // all topologies x all relations, n from 1 to max_n
  relation_only,  // all relations on exactly max_n points, no topology
  space_only,     // all topologies, n from 1 to max_n, no relation
  pairwise,       // all topologies x all relation pairs passing the filter
};

struct ClaimSpec {
  std::string id;
  std::string statement;  // quoted conclusion text
  std::vector<std::string> hypotheses;
  std::string conclusion;
  std::string bicond_lhs, bicond_rhs;  // nonempty iff conclusion is an iff
  ClaimDomain domain = ClaimDomain::pair;
  int max_n = 3;
  bool expected_vacuous = false;
  std::string vacuity_anchor;  // why zero hits is the correct outcome
};

struct Violation {
  int n = 0;
  std::int64_t topo_index = -1;  // -1 when the claim has no topology
  std::uint64_t rel_code = 0;
  std::uint64_t rel2_code = 0;
  bool has_rel = false;
  bool has_rel2 = false;
  std::vector<int> witness;
  std::string note;  // which leg of the conclusion failed
};

struct CountByN {
  int n = 0;
  std::uint64_t instances = 0;
  std::uint64_t hits = 0;
};

// Violations are stored up to a cap so a badly wrong claim cannot flood
// memory; the true total is always in violation_count and the truncation is
// flagged, never silent.
struct VerificationOutcome {
  std::string claim;
  std::uint64_t instances = 0;
  std::uint64_t hits = 0;
  std::uint64_t lhs_hits = 0, rhs_hits = 0;
  std::vector<CountByN> by_n;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  bool violations_truncated = false;
  bool partial = false;
  bool expected_vacuous = false;
  double wall_seconds = 0;

  bool passed() const {
    return violation_count == 0 && !partial &&
           (hits > 0 || expected_vacuous);
  }
};

// Carries whatever the sweep had finished when the budget ran out.
struct BudgetExceeded : Error {
  VerificationOutcome outcome;
  explicit BudgetExceeded(VerificationOutcome o)
      : Error("verification budget exceeded"), outcome(std::move(o)) {
    outcome.partial = true;
  }
};

struct VerifyOptions {
  int jobs = 1;
  double budget_seconds = 0;  // 0 = no budget
  int max_n = 0;              // 0 = the claim's own bound
};

const std::vector<ClaimSpec>& claim_catalog();
const ClaimSpec& find_claim(const std::string& id);  // UnknownClaim

// Names usable as hypotheses or conclusions, for CLI validation and help.
const std::vector<std::string>& predicate_names();
bool is_predicate_name(const std::string& name);

VerificationOutcome verify(const ClaimSpec& claim,
                           const VerifyOptions& opt = {});
std::vector<VerificationOutcome> verify_set(
    const std::vector<ClaimSpec>& claims, const VerifyOptions& opt = {});

enum class Construction { chain, product, cyclic, cross };
Construction construction_from_name(const std::string& name);  // ParseError
std::string construction_name(Construction c);

// Proof-backed relation on the given space. Post-checks assert the exact
// property list the construction promises and name what they checked;
// a post-check failure raises Error since it means the library is wrong.
struct WitnessResult {
  Relation relation;
  int k = 1;
  std::vector<std::string> checked;
};

WitnessResult witness(const FiniteSpace& sp, Construction c,
                      int k = 1);  // PreconditionUnmet, KOutOfRange

struct FixtureFailure {
  std::string fixture;
  std::string detail;
};

struct FixtureReport {
  std::vector<std::string> passed;
  std::vector<FixtureFailure> failures;
  bool ok() const { return failures.empty(); }
};

FixtureReport run_fixtures();

struct SearchDomain {
  bool no_topology = false;  // relations alone, exactly max_n points
  bool connected_only = false;
  bool disconnected_only = false;
};

struct SearchResult {
  bool found = false;
  int n = 0;
  std::int64_t topo_index = -1;
  std::uint64_t rel_code = 0;
  std::uint64_t enumerated = 0;  // exhaustion certificate when not found
  std::optional<FiniteSpace> space;
  std::optional<Relation> relation;
};

// First instance in enumeration order satisfying every hypothesis and
// failing the conclusion, or the count of instances ruled out.
SearchResult search_counterexample(const std::vector<std::string>& hypotheses,
                                   const std::string& conclusion, int max_n,
                                   const SearchDomain& dom = {});

}  // namespace topo

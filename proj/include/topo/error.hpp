// Typed error conditions shared across the library.
//
// Every precondition failure maps to one concrete exception type so callers
// (and the CLI exit-code logic) can distinguish bad input from a genuine
// property violation, which is never an exception but ordinary result data.
#pragma once

#include <stdexcept>
#include <string>

namespace topo {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// new_space: the family misses the empty/full set or is not closed under a
// pairwise union or intersection. The offending pair of members is kept as
// bitmasks so tests can assert the exact witness.
struct AxiomViolation : Error {
  enum class Kind { missing_empty, missing_full, union_gap, intersection_gap };
  Kind kind;
  unsigned a = 0, b = 0;  // witness pair for the two gap kinds
  AxiomViolation(Kind k, const std::string& what, unsigned a_ = 0, unsigned b_ = 0)
      : Error(what), kind(k), a(a_), b(b_) {}
};

struct TooFewComponents : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

struct PointInSeparator : Error {
  using Error::Error;
};

struct InvalidPartition : Error {
  using Error::Error;
};

// Enumeration request beyond the exhaustive bound (topologies n > 5,
// unfiltered relations n > 4, search beyond the supported carrier).
struct SizeLimit : Error {
  using Error::Error;
};

// A relation and a space with different point counts were combined.
struct SizeMismatch : Error {
  using Error::Error;
};

// reflexive_hull / separability / dual_representation on a non-asymmetric input.
struct NotAsymmetric : Error {
  using Error::Error;
};

struct KOutOfRange : Error {
  using Error::Error;
};

struct UnknownClaim : Error {
  using Error::Error;
};

// witness(): the space cannot host the requested construction.
struct PreconditionUnmet : Error {
  using Error::Error;
};

// CLI input files that do not parse or do not reference declared labels.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace topo

// File formats for spaces and relations. A space file names its points and
// lists its open sets by label; a relation file lists ordered pairs over
// the labels of an already-parsed space. Parsing failures throw ParseError
// with the offending label or key in the message; topology axiom failures
// propagate as AxiomViolation from validation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topo/relation.hpp"
#include "topo/space.hpp"
#include "topo/theoremlab.hpp"

namespace topo {

struct LabeledSpace {
  FiniteSpace space;
  std::vector<std::string> labels;
};

LabeledSpace parse_space_text(const std::string& text);
LabeledSpace parse_space_file(const std::string& path);

Relation parse_relation_text(const std::string& text,
                             const std::vector<std::string>& labels);
Relation parse_relation_file(const std::string& path,
                             const std::vector<std::string>& labels);

// Labels used when a space comes from the enumerator instead of a file.
std::vector<std::string> default_labels(int n);

// Renders a point-set mask as sorted labels, for report output.
std::vector<std::string> mask_labels(Mask m,
                                     const std::vector<std::string>& labels);

// FNV-1a over the canonical report dump; stable across platforms.
std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

// Canonical serialization of a verification outcome. Timing never appears,
// so the bytes are identical across shard counts and machines.
std::string outcome_canonical(const VerificationOutcome& out);

}  // namespace topo

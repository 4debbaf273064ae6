#pragma once

#include <set>
#include <string>
#include <vector>

#include "pss/concept.hpp"

namespace pss {

// Labeled example pairs over a subset of situations. Under the closed-world
// flag every unlisted response to a covered situation counts as negative;
// otherwise only the explicit negatives do and the rest stay don't-care.
struct OstensiveDefinition {
  VocabPtr vocab;
  std::set<std::string> covered_situations;
  std::set<Bits> positives;
  std::set<Bits> explicit_negatives;  // must be empty when closed_world
  bool closed_world = true;
};

// Checks the structural invariants; throws on a state labeled both ways.
void validate(const OstensiveDefinition& def);

// Positives and negatives as concrete states (lexicographic order); every
// other assignment is don't-care. The three sets partition the space.
struct LabelledSpace {
  std::vector<Bits> positives;
  std::vector<Bits> negatives;
};

LabelledSpace materialize(const OstensiveDefinition& def);

// The weakest necessary-and-sufficient concept for the labels: the
// disjunction of all prime implicants among cubes that contain no negative
// and at least one positive. Unique and canonical.
Concept induce(const OstensiveDefinition& def);

// Independent check: enumerates all 3^n cubes and decides admissibility and
// primality by listing the states of each cube. Hard-capped at 12 bits.
Concept oracle_induce(const OstensiveDefinition& def);

inline constexpr std::size_t kOracleMaxBits = 12;

struct NsReport {
  bool sufficient = false;  // every positive satisfied
  bool necessary = false;   // every negative falsified
  std::vector<DecisionState> unsatisfied_positives;
  std::vector<DecisionState> satisfied_negatives;
  bool ok() const { return sufficient && necessary; }
};

NsReport verify_ns(const Concept& c, const OstensiveDefinition& def);

}  // namespace pss

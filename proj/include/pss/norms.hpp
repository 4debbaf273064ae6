#pragma once

#include <map>
#include <string>
#include <vector>

#include "pss/induction.hpp"

namespace pss {

// Per-pair ethical votes from a population of labelers. Each vote string has
// one character per labeler: '+' ethical, '-' unethical, '.' abstain.
struct NormCorpus {
  VocabPtr vocab;
  std::size_t labelers = 0;
  std::map<Bits, std::string> votes;
};

void validate(const NormCorpus& corpus);

// Subgroup view: keep only the listed labeler columns.
NormCorpus restrict_labelers(const NormCorpus& corpus, const std::vector<std::size_t>& keep);

// Strict per-pair majority among non-abstaining votes. Ties and all-abstain
// rows are excluded entirely (don't-care). Explicit-negative result.
OstensiveDefinition aggregate_majority(const NormCorpus& corpus);

// The majority norm as a concept, ready to conjoin into every goal.
Concept learn_ethics(const NormCorpus& corpus);

}  // namespace pss

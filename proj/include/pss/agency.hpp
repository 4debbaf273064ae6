#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pss/induction.hpp"

namespace pss {

// Integer-linear scorer over state bits.
struct ObjectiveFunction {
  VocabPtr vocab;
  std::vector<long long> weights;  // one per symbol index
  long long bias = 0;
  long long theta = 0;  // acceptance threshold

  long long score(Bits bits) const;
  long long score(const DecisionState& state) const;
};

// Why a pair was chosen: the satisfied implicants of every goal, plus the
// responses that were ruled out and the first goal each one violates.
struct Explanation {
  std::string situation;
  std::string response;
  std::vector<std::vector<Implicant>> satisfied_per_goal;
  std::vector<std::pair<std::string, std::size_t>> rejected;
};

struct Decision {
  std::string response;
  Explanation why;
};

// Exactly the responses making the concept true in this situation, in
// lexicographic order. May be empty.
std::vector<std::string> abduct(const Concept& c, std::string_view situation);

// Conjoins the goals, abducts, returns the lexicographically first response.
// Throws no_ethical_response on an empty abduction: dilemmas are loud, the
// caller never gets an unconstrained fallback.
Decision decide(const std::vector<Concept>& goals, std::string_view situation);

struct CounterfactualResult {
  bool before = false;
  bool after = false;
  bool changed = false;
};

CounterfactualResult counterfactual(const Concept& c, const DecisionState& state,
                                    const std::set<std::size_t>& flips);

// Experienced states become labeled examples: score >= theta is positive,
// the rest explicit negatives. Unexperienced responses stay don't-care.
OstensiveDefinition objective_to_ostensive(const ObjectiveFunction& objective,
                                           const std::vector<DecisionState>& experiences);

struct Scenario;  // harness environment fixture

// Seeded uniform-random response policy over `budget` episodes, then
// objective_to_ostensive and induce. Deterministic for a fixed seed.
Concept explore_and_learn(const ObjectiveFunction& objective, const Scenario& env,
                          std::size_t budget, std::uint64_t seed);

}  // namespace pss

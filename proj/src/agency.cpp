#include "pss/agency.hpp"

#include <algorithm>

#include "pss/rng.hpp"
#include "pss/scenario.hpp"

namespace pss {

long long ObjectiveFunction::score(Bits bits) const {
  long long total = bias;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if ((bits >> i) & 1) total += weights[i];
  }
  return total;
}

long long ObjectiveFunction::score(const DecisionState& state) const {
  require_same_vocab(vocab, state.vocab());
  return score(state.bits());
}

// Response strings of length m in lexicographic order.
static std::string response_string(Bits v, std::size_t m) {
  std::string out(m, '0');
  for (std::size_t j = 0; j < m; ++j) {
    if ((v >> (m - 1 - j)) & 1) out[j] = '1';
  }
  return out;
}

std::vector<std::string> abduct(const Concept& c, std::string_view situation) {
  const Vocabulary& v = *c.vocab();
  if (situation.size() != v.sensor_count()) {
    fail(Err::length_mismatch, "situation has length " + std::to_string(situation.size()) +
                                   ", expected " + std::to_string(v.sensor_count()));
  }
  const std::size_t m = v.actuator_count();
  std::vector<std::string> out;
  const Bits limit = Bits{1} << m;
  for (Bits r = 0; r < limit; ++r) {
    const std::string rbits = response_string(r, m);
    if (c.evaluate_bits(compose_bits(v, situation, rbits))) out.push_back(rbits);
  }
  return out;
}

Decision decide(const std::vector<Concept>& goals, std::string_view situation) {
  if (goals.empty()) fail(Err::invariant_violation, "decide requires at least one goal");
  const VocabPtr vocab = goals.front().vocab();
  Concept combined = goals.front();
  for (std::size_t g = 1; g < goals.size(); ++g) {
    combined = conjoin(combined, goals[g]);
  }
  const Vocabulary& v = *vocab;
  if (situation.size() != v.sensor_count()) {
    fail(Err::length_mismatch, "situation has length " + std::to_string(situation.size()) +
                                   ", expected " + std::to_string(v.sensor_count()));
  }

  Decision decision;
  decision.why.situation = std::string(situation);
  const std::size_t m = v.actuator_count();
  const Bits limit = Bits{1} << m;
  bool chosen = false;
  for (Bits r = 0; r < limit; ++r) {
    const std::string rbits = response_string(r, m);
    const Bits state = compose_bits(v, situation, rbits);
    if (!chosen && combined.evaluate_bits(state)) {
      chosen = true;
      decision.response = rbits;
      decision.why.response = rbits;
      for (const Concept& goal : goals) {
        std::vector<Implicant> satisfied;
        for (const Implicant& imp : goal.implicants()) {
          if (imp.contains(state)) satisfied.push_back(imp);
        }
        decision.why.satisfied_per_goal.push_back(std::move(satisfied));
      }
    } else if (!combined.evaluate_bits(state)) {
      for (std::size_t g = 0; g < goals.size(); ++g) {
        if (!goals[g].evaluate_bits(state)) {
          decision.why.rejected.emplace_back(rbits, g);
          break;
        }
      }
    }
  }
  if (!chosen) {
    fail(Err::no_ethical_response,
         "no response satisfies every goal in situation '" + std::string(situation) + "'");
  }
  return decision;
}

CounterfactualResult counterfactual(const Concept& c, const DecisionState& state,
                                    const std::set<std::size_t>& flips) {
  require_same_vocab(c.vocab(), state.vocab());
  Bits flip_mask = 0;
  for (std::size_t index : flips) {
    if (index >= state.vocab()->size()) {
      fail(Err::index_out_of_range, "flip index " + std::to_string(index));
    }
    flip_mask |= Bits{1} << index;
  }
  CounterfactualResult result;
  result.before = c.evaluate_bits(state.bits());
  result.after = c.evaluate_bits(state.bits() ^ flip_mask);
  result.changed = result.before != result.after;
  return result;
}

OstensiveDefinition objective_to_ostensive(const ObjectiveFunction& objective,
                                           const std::vector<DecisionState>& experiences) {
  if (experiences.empty()) fail(Err::empty_experiences, "no experienced states");
  OstensiveDefinition def;
  def.vocab = objective.vocab;
  def.closed_world = false;
  for (const DecisionState& state : experiences) {
    require_same_vocab(objective.vocab, state.vocab());
    def.covered_situations.insert(state.situation());
    if (objective.score(state.bits()) >= objective.theta) {
      def.positives.insert(state.bits());
    } else {
      def.explicit_negatives.insert(state.bits());
    }
  }
  return def;
}

Concept explore_and_learn(const ObjectiveFunction& objective, const Scenario& env,
                          std::size_t budget, std::uint64_t seed) {
  if (budget == 0) fail(Err::invariant_violation, "exploration budget must be at least 1");
  require_same_vocab(objective.vocab, env.vocab);
  const Vocabulary& v = *env.vocab;
  const std::size_t m = v.actuator_count();
  SplitMix64 policy(seed);
  std::vector<DecisionState> experiences;
  experiences.reserve(budget);
  for (std::size_t episode = 0; episode < budget; ++episode) {
    const std::string situation = scenario_situation(env, seed, episode);
    const std::string response = response_string(
        static_cast<Bits>(policy.below(std::uint64_t{1} << m)), m);
    experiences.push_back(compose(env.vocab, situation, response));
  }
  return induce(objective_to_ostensive(objective, experiences));
}

}  // namespace pss

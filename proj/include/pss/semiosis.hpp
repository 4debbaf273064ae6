#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pss/agency.hpp"

namespace pss {

enum class Mode { enacted, observed };
const char* mode_name(Mode mode);

// A grounded symbol: the interpretant concept links transmittable sign
// patterns to remembered referent states. A sign is just a referent the
// agent can transmit, so patterns live on the transmittable actuator bits.
struct SymbolTriad {
  std::string token;
  Concept interpretant;
  std::set<std::string> sign_patterns;         // never all-zero, never empty strings
  std::vector<DecisionState> referent_memory;  // lexicographic, deduped

  // Append an experienced state; it must satisfy the interpretant.
  void commit(const DecisionState& state);
};

class Lexicon {
public:
  explicit Lexicon(VocabPtr vocab);

  const VocabPtr& vocab() const { return vocab_; }
  const std::map<std::string, SymbolTriad>& triads() const { return triads_; }
  bool contains(const std::string& token) const { return triads_.count(token) != 0; }
  const SymbolTriad& at(const std::string& token) const;
  SymbolTriad& at(const std::string& token);

  void insert(SymbolTriad triad);
  SymbolTriad& learn(const std::string& token, const OstensiveDefinition& def);

private:
  VocabPtr vocab_;
  std::map<std::string, SymbolTriad> triads_;
};

// Tokens are also file stems; keep them shell- and filesystem-safe.
bool valid_token(std::string_view token);

SymbolTriad learn_symbol(const std::string& token, const OstensiveDefinition& def);

// All tokens whose interpretant holds on the state. Ambiguity is preserved.
std::vector<std::string> interpret(const DecisionState& state, const Lexicon& lexicon);

// Lexicographically first response that satisfies the interpretant and whose
// transmittable projection is a known sign pattern.
std::string convey(const std::string& token, std::string_view situation, const Lexicon& lexicon);

std::vector<DecisionState> recall(const std::string& token, const Lexicon& lexicon);

struct DialogueRecord {
  DecisionState state;
  std::set<std::string> tokens;
};

struct BootstrapResult {
  std::vector<SymbolTriad> learned;                             // token order
  std::vector<std::pair<std::string, std::string>> unlearnable;  // token, reason
};

// Learns every unknown token from observed communication: records whose
// known-token annotations disagree with the lexicon are dropped as noise,
// then each unknown token gets a closed-world reading of the remaining
// corpus (annotated = positive, unannotated = negative).
BootstrapResult bootstrap(const std::vector<DialogueRecord>& dialogues, const Lexicon& lexicon);

// Mirror property: one interpretant serves enacting and observing, so the
// mode tag is transcript metadata only and never changes the result.
std::vector<std::string> activation(const DecisionState& state, const Lexicon& lexicon, Mode mode);

// The implicants across the observer's own goals satisfied by the observed
// state; empty when the observation is inexplicable under shared intent.
std::vector<Implicant> infer_intent(const DecisionState& observed,
                                    const std::vector<Concept>& own_goals);

struct EmpathyReport {
  DecisionState observed;
  std::vector<std::string> active_tokens;
  std::map<std::string, std::vector<DecisionState>> recalled;
  std::vector<Implicant> attributed_intent;
  std::vector<std::string> inferred_want;  // responses the observer would seek
};

EmpathyReport empathise(const DecisionState& observed, const Lexicon& lexicon,
                        const std::vector<Concept>& own_goals);

}  // namespace pss

#include "pss/semiosis.hpp"

#include <algorithm>

namespace pss {

const char* mode_name(Mode mode) { return mode == Mode::enacted ? "enacted" : "observed"; }

namespace {

std::string transmittable_projection(const Vocabulary& vocab, Bits bits) {
  std::string out;
  out.reserve(vocab.transmittable_indices().size());
  for (std::size_t i : vocab.transmittable_indices()) {
    out.push_back((bits >> i) & 1 ? '1' : '0');
  }
  return out;
}

bool all_zero(std::string_view pattern) {
  return pattern.find('1') == std::string_view::npos;
}

}  // namespace

void SymbolTriad::commit(const DecisionState& state) {
  if (!interpretant.evaluate(state)) {
    fail(Err::invariant_violation, "state " + state.assignment() +
                                       " does not satisfy the interpretant of '" + token + "'");
  }
  auto pos = std::lower_bound(referent_memory.begin(), referent_memory.end(), state);
  if (pos != referent_memory.end() && *pos == state) return;
  referent_memory.insert(pos, state);
  const std::string pattern = transmittable_projection(*state.vocab(), state.bits());
  if (!all_zero(pattern)) sign_patterns.insert(pattern);
}

Lexicon::Lexicon(VocabPtr vocab) : vocab_(std::move(vocab)) {
  if (!vocab_) fail(Err::invalid_vocabulary, "lexicon without a vocabulary");
}

const SymbolTriad& Lexicon::at(const std::string& token) const {
  auto it = triads_.find(token);
  if (it == triads_.end()) fail(Err::unknown_token, "'" + token + "' is not in the lexicon");
  return it->second;
}

SymbolTriad& Lexicon::at(const std::string& token) {
  auto it = triads_.find(token);
  if (it == triads_.end()) fail(Err::unknown_token, "'" + token + "' is not in the lexicon");
  return it->second;
}

void Lexicon::insert(SymbolTriad triad) {
  require_same_vocab(vocab_, triad.interpretant.vocab());
  if (triads_.count(triad.token)) {
    fail(Err::duplicate_token, "'" + triad.token + "' is already in the lexicon");
  }
  triads_.emplace(triad.token, std::move(triad));
}

SymbolTriad& Lexicon::learn(const std::string& token, const OstensiveDefinition& def) {
  if (triads_.count(token)) {
    fail(Err::duplicate_token, "'" + token + "' is already in the lexicon");
  }
  require_same_vocab(vocab_, def.vocab);
  insert(learn_symbol(token, def));
  return triads_.at(token);
}

bool valid_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

SymbolTriad learn_symbol(const std::string& token, const OstensiveDefinition& def) {
  if (!valid_token(token)) {
    fail(Err::invariant_violation, "token '" + token + "' must match [A-Za-z0-9_]+");
  }
  SymbolTriad triad{token, induce(def), {}, {}};
  const Vocabulary& v = *def.vocab;
  for (Bits p : def.positives) {
    triad.referent_memory.emplace_back(def.vocab, p);
    const std::string pattern = transmittable_projection(v, p);
    if (!all_zero(pattern)) triad.sign_patterns.insert(pattern);
  }
  std::sort(triad.referent_memory.begin(), triad.referent_memory.end());
  return triad;
}

std::vector<std::string> interpret(const DecisionState& state, const Lexicon& lexicon) {
  require_same_vocab(state.vocab(), lexicon.vocab());
  std::vector<std::string> out;
  for (const auto& [token, triad] : lexicon.triads()) {
    if (triad.interpretant.evaluate_bits(state.bits())) out.push_back(token);
  }
  return out;
}

std::string convey(const std::string& token, std::string_view situation, const Lexicon& lexicon) {
  const SymbolTriad& triad = lexicon.at(token);
  const Vocabulary& v = *lexicon.vocab();
  if (situation.size() != v.sensor_count()) {
    fail(Err::length_mismatch, "situation has length " + std::to_string(situation.size()) +
                                   ", expected " + std::to_string(v.sensor_count()));
  }
  const std::size_t m = v.actuator_count();
  const Bits limit = Bits{1} << m;
  for (Bits r = 0; r < limit; ++r) {
    std::string rbits(m, '0');
    for (std::size_t j = 0; j < m; ++j) {
      if ((r >> (m - 1 - j)) & 1) rbits[j] = '1';
    }
    const Bits state = compose_bits(v, situation, rbits);
    if (!triad.interpretant.evaluate_bits(state)) continue;
    if (triad.sign_patterns.count(transmittable_projection(v, state))) return rbits;
  }
  fail(Err::no_appropriate_sign,
       "no response conveys '" + token + "' in situation '" + std::string(situation) + "'");
}

std::vector<DecisionState> recall(const std::string& token, const Lexicon& lexicon) {
  return lexicon.at(token).referent_memory;
}

BootstrapResult bootstrap(const std::vector<DialogueRecord>& dialogues, const Lexicon& lexicon) {
  bool mentions_unknown = false;
  std::set<std::string> unknown_tokens;
  for (const DialogueRecord& record : dialogues) {
    require_same_vocab(record.state.vocab(), lexicon.vocab());
    for (const std::string& token : record.tokens) {
      if (!lexicon.contains(token)) {
        mentions_unknown = true;
        unknown_tokens.insert(token);
      }
    }
  }
  if (!mentions_unknown) {
    fail(Err::empty_corpus, "dialogue corpus mentions no unknown token");
  }

  // Noise filter: a record claiming a known token the lexicon rejects is
  // dropped entirely.
  std::vector<const DialogueRecord*> kept;
  kept.reserve(dialogues.size());
  for (const DialogueRecord& record : dialogues) {
    bool consistent = true;
    for (const std::string& token : record.tokens) {
      if (!lexicon.contains(token)) continue;
      if (!lexicon.at(token).interpretant.evaluate_bits(record.state.bits())) {
        consistent = false;
        break;
      }
    }
    if (consistent) kept.push_back(&record);
  }

  std::set<std::string> covered;
  for (const DialogueRecord* record : kept) covered.insert(record->state.situation());

  BootstrapResult result;
  for (const std::string& token : unknown_tokens) {
    OstensiveDefinition def;
    def.vocab = lexicon.vocab();
    def.closed_world = false;
    def.covered_situations = covered;
    for (const DialogueRecord* record : kept) {
      if (record->tokens.count(token)) {
        def.positives.insert(record->state.bits());
      } else {
        def.explicit_negatives.insert(record->state.bits());
      }
    }
    // A state annotated in one record and bare in another is a contradiction
    // for the exact learner, not soft evidence; it surfaces as inconsistent.
    try {
      result.learned.push_back(learn_symbol(token, def));
    } catch (const Error& e) {
      if (e.code() == Err::empty_positives || e.code() == Err::inconsistent) {
        result.unlearnable.emplace_back(token, err_name(e.code()));
      } else {
        throw;
      }
    }
  }
  return result;
}

std::vector<std::string> activation(const DecisionState& state, const Lexicon& lexicon,
                                    Mode mode) {
  (void)mode;  // recorded by transcripts, never consulted
  return interpret(state, lexicon);
}

std::vector<Implicant> infer_intent(const DecisionState& observed,
                                    const std::vector<Concept>& own_goals) {
  std::vector<Implicant> out;
  for (const Concept& goal : own_goals) {
    require_same_vocab(goal.vocab(), observed.vocab());
    for (const Implicant& imp : goal.implicants()) {
      if (imp.contains(observed.bits())) out.push_back(imp);
    }
  }
  std::sort(out.begin(), out.end(), implicant_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EmpathyReport empathise(const DecisionState& observed, const Lexicon& lexicon,
                        const std::vector<Concept>& own_goals) {
  require_same_vocab(observed.vocab(), lexicon.vocab());
  EmpathyReport report{observed, {}, {}, {}, {}};
  report.active_tokens = activation(observed, lexicon, Mode::observed);
  for (const std::string& token : report.active_tokens) {
    report.recalled[token] = recall(token, lexicon);
  }
  report.attributed_intent = infer_intent(observed, own_goals);
  Concept combined = Concept::all(observed.vocab());
  for (const Concept& goal : own_goals) combined = conjoin(combined, goal);
  report.inferred_want = abduct(combined, observed.situation());
  return report;
}

}  // namespace pss

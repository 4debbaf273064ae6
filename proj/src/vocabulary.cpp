#include "pss/vocabulary.hpp"

#include <algorithm>
#include <unordered_set>

namespace pss {

const char* err_name(Err code) {
  switch (code) {
    case Err::length_mismatch: return "length mismatch";
    case Err::vocabulary_mismatch: return "vocabulary mismatch";
    case Err::vocabulary_too_large: return "vocabulary too large";
    case Err::term_explosion: return "term explosion";
    case Err::empty_positives: return "empty positives";
    case Err::inconsistent: return "inconsistent";
    case Err::no_ethical_response: return "no ethical response";
    case Err::index_out_of_range: return "index out of range";
    case Err::empty_experiences: return "empty experiences";
    case Err::duplicate_token: return "duplicate token";
    case Err::unknown_token: return "unknown token";
    case Err::no_appropriate_sign: return "no appropriate sign";
    case Err::empty_corpus: return "empty corpus";
    case Err::parse_error: return "parse error";
    case Err::header_mismatch: return "header mismatch";
    case Err::duplicate_state: return "duplicate state";
    case Err::io_error: return "io error";
    case Err::invalid_vocabulary: return "invalid vocabulary";
    case Err::invariant_violation: return "invariant violation";
    case Err::unknown_scenario: return "unknown scenario";
  }
  return "error";
}

int exit_class(Err code) {
  switch (code) {
    case Err::no_ethical_response:
    case Err::empty_positives:
    case Err::no_appropriate_sign:
      return 3;
    case Err::vocabulary_too_large:
    case Err::term_explosion:
      return 4;
    default:
      return 2;
  }
}

Vocabulary::Vocabulary(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > kMaxBits) {
    fail(Err::vocabulary_too_large,
         "vocabulary has " + std::to_string(symbols_.size()) + " symbols, cap is " +
             std::to_string(kMaxBits));
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Symbol& s = symbols_[i];
    if (s.name.empty()) {
      fail(Err::invalid_vocabulary, "symbol " + std::to_string(i) + " has an empty name");
    }
    // names appear in 'name=bit' literals and whitespace-split headers
    for (char c : s.name) {
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_';
      if (!ok) {
        fail(Err::invalid_vocabulary, "symbol name '" + s.name + "' must match [A-Za-z0-9_]+");
      }
    }
    if (!seen.insert(s.name).second) {
      fail(Err::invalid_vocabulary, "duplicate symbol name '" + s.name + "'");
    }
    if (s.transmittable && s.channel != Channel::actuator) {
      fail(Err::invalid_vocabulary, "sensor '" + s.name + "' cannot be transmittable");
    }
    if (s.channel == Channel::sensor) {
      sensor_indices_.push_back(i);
    } else {
      actuator_indices_.push_back(i);
      if (s.transmittable) transmittable_indices_.push_back(i);
    }
  }
}

VocabPtr Vocabulary::split(const std::vector<std::string>& sensors,
                           const std::vector<std::string>& actuators) {
  std::vector<Symbol> symbols;
  symbols.reserve(sensors.size() + actuators.size());
  for (const auto& name : sensors) {
    symbols.push_back({name, Channel::sensor, false});
  }
  for (const auto& name : actuators) {
    if (!name.empty() && name.back() == '!') {
      symbols.push_back({name.substr(0, name.size() - 1), Channel::actuator, true});
    } else {
      symbols.push_back({name, Channel::actuator, false});
    }
  }
  return std::make_shared<const Vocabulary>(std::move(symbols));
}

const Symbol& Vocabulary::symbol(std::size_t index) const {
  if (index >= symbols_.size()) {
    fail(Err::index_out_of_range, "symbol index " + std::to_string(index));
  }
  return symbols_[index];
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Symbol& a = symbols_[i];
    const Symbol& b = other.symbols_[i];
    if (a.name != b.name || a.channel != b.channel || a.transmittable != b.transmittable) {
      return false;
    }
  }
  return true;
}

bool same_vocab(const VocabPtr& a, const VocabPtr& b) {
  if (a.get() == b.get()) return a != nullptr;
  return a && b && *a == *b;
}

void require_same_vocab(const VocabPtr& a, const VocabPtr& b) {
  if (!same_vocab(a, b)) {
    fail(Err::vocabulary_mismatch, "operands use different vocabularies");
  }
}

bool lex_less_bits(Bits a, Bits b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const Bits bit = Bits{1} << i;
    if ((a & bit) != (b & bit)) return (a & bit) == 0;
  }
  return false;
}

DecisionState::DecisionState(VocabPtr vocab, Bits bits) : vocab_(std::move(vocab)), bits_(bits) {
  if (!vocab_) fail(Err::invalid_vocabulary, "decision state without a vocabulary");
  if (vocab_->size() < 32 && (bits_ >> vocab_->size()) != 0) {
    fail(Err::index_out_of_range, "assignment has bits beyond the vocabulary");
  }
}

DecisionState DecisionState::from_assignment(VocabPtr vocab, std::string_view assignment) {
  if (!vocab) fail(Err::invalid_vocabulary, "decision state without a vocabulary");
  return DecisionState(vocab, assignment_bits(*vocab, assignment));
}

bool DecisionState::bit(std::size_t index) const {
  if (index >= vocab_->size()) {
    fail(Err::index_out_of_range, "bit index " + std::to_string(index));
  }
  return (bits_ >> index) & 1;
}

std::string DecisionState::assignment() const { return assignment_string(*vocab_, bits_); }

std::string DecisionState::project(Channel channel) const {
  return project_bits(*vocab_, bits_, channel);
}

bool DecisionState::operator==(const DecisionState& other) const {
  return same_vocab(vocab_, other.vocab_) && bits_ == other.bits_;
}

bool DecisionState::operator<(const DecisionState& other) const {
  return lex_less_bits(bits_, other.bits_, vocab_->size());
}

DecisionState compose(VocabPtr vocab, std::string_view situation, std::string_view response) {
  if (!vocab) fail(Err::invalid_vocabulary, "compose without a vocabulary");
  return DecisionState(vocab, compose_bits(*vocab, situation, response));
}

std::string project(const DecisionState& state, Channel channel) {
  return state.project(channel);
}

static Bits place_channel(const Vocabulary& vocab, const std::vector<std::size_t>& indices,
                          std::string_view bits, const char* what) {
  if (bits.size() != indices.size()) {
    fail(Err::length_mismatch, std::string(what) + " bits have length " +
                                   std::to_string(bits.size()) + ", expected " +
                                   std::to_string(indices.size()));
  }
  Bits out = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const char c = bits[j];
    if (c != '0' && c != '1') {
      fail(Err::parse_error, std::string(what) + " bits must be 0/1, got '" + c + "'");
    }
    if (c == '1') out |= Bits{1} << indices[j];
  }
  (void)vocab;
  return out;
}

Bits compose_bits(const Vocabulary& vocab, std::string_view situation, std::string_view response) {
  return place_channel(vocab, vocab.sensor_indices(), situation, "situation") |
         place_channel(vocab, vocab.actuator_indices(), response, "response");
}

std::string project_bits(const Vocabulary& vocab, Bits bits, Channel channel) {
  const auto& indices =
      channel == Channel::sensor ? vocab.sensor_indices() : vocab.actuator_indices();
  std::string out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back((bits >> i) & 1 ? '1' : '0');
  return out;
}

std::string assignment_string(const Vocabulary& vocab, Bits bits) {
  std::string out;
  out.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) out.push_back((bits >> i) & 1 ? '1' : '0');
  return out;
}

Bits assignment_bits(const Vocabulary& vocab, std::string_view assignment) {
  if (assignment.size() != vocab.size()) {
    fail(Err::length_mismatch, "assignment has length " + std::to_string(assignment.size()) +
                                   ", vocabulary has " + std::to_string(vocab.size()));
  }
  Bits out = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const char c = assignment[i];
    if (c != '0' && c != '1') {
      fail(Err::parse_error, std::string("assignment bits must be 0/1, got '") + c + "'");
    }
    if (c == '1') out |= Bits{1} << i;
  }
  return out;
}

}  // namespace pss

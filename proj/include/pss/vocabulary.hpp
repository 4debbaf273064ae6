#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pss/error.hpp"

namespace pss {

// A full assignment packed with symbol index i at bit i.
using Bits = std::uint32_t;

enum class Channel { sensor, actuator };

struct Symbol {
  std::string name;
  Channel channel = Channel::sensor;
  bool transmittable = false;  // sign-capable; actuator bits only
};

// The perceptual symbol system: an ordered set of named boolean symbols
// partitioned into sensor and actuator channels. Immutable once built.
class Vocabulary {
public:
  // Exact algorithms downstream are exponential in the bit count.
  static constexpr std::size_t kMaxBits = 24;

  explicit Vocabulary(std::vector<Symbol> symbols);

  // Sensors first, then actuators. An actuator name ending in '!' is marked
  // transmittable (the '!' is stripped).
  static std::shared_ptr<const Vocabulary> split(const std::vector<std::string>& sensors,
                                                 const std::vector<std::string>& actuators);

  std::size_t size() const { return symbols_.size(); }
  std::size_t sensor_count() const { return sensor_indices_.size(); }
  std::size_t actuator_count() const { return actuator_indices_.size(); }

  const Symbol& symbol(std::size_t index) const;
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<std::size_t>& sensor_indices() const { return sensor_indices_; }
  const std::vector<std::size_t>& actuator_indices() const { return actuator_indices_; }
  const std::vector<std::size_t>& transmittable_indices() const { return transmittable_indices_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Vocabulary& other) const;

private:
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> sensor_indices_;
  std::vector<std::size_t> actuator_indices_;
  std::vector<std::size_t> transmittable_indices_;
};

using VocabPtr = std::shared_ptr<const Vocabulary>;

bool same_vocab(const VocabPtr& a, const VocabPtr& b);
void require_same_vocab(const VocabPtr& a, const VocabPtr& b);

// Lexicographic order of two assignments over an n-bit vocabulary, i.e.
// compare bit 0 first. This is the tie-break order used everywhere.
bool lex_less_bits(Bits a, Bits b, std::size_t n);

// One total assignment over a vocabulary: a situation-response pair.
class DecisionState {
public:
  DecisionState(VocabPtr vocab, Bits bits);
  static DecisionState from_assignment(VocabPtr vocab, std::string_view assignment);

  const VocabPtr& vocab() const { return vocab_; }
  Bits bits() const { return bits_; }
  bool bit(std::size_t index) const;

  std::string assignment() const;
  std::string project(Channel channel) const;
  std::string situation() const { return project(Channel::sensor); }
  std::string response() const { return project(Channel::actuator); }

  bool operator==(const DecisionState& other) const;
  bool operator!=(const DecisionState& other) const { return !(*this == other); }
  bool operator<(const DecisionState& other) const;

private:
  VocabPtr vocab_;
  Bits bits_;
};

// Interleaves channel views into a full state; inverse of project.
DecisionState compose(VocabPtr vocab, std::string_view situation, std::string_view response);
std::string project(const DecisionState& state, Channel channel);

// Raw-bits variants used by the algebra's hot paths. No vocabulary checks.
Bits compose_bits(const Vocabulary& vocab, std::string_view situation, std::string_view response);
std::string project_bits(const Vocabulary& vocab, Bits bits, Channel channel);
std::string assignment_string(const Vocabulary& vocab, Bits bits);
Bits assignment_bits(const Vocabulary& vocab, std::string_view assignment);

}  // namespace pss

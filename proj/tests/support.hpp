#pragma once

// Shared helpers for the test binaries: seeded instance generators and
// brute-force oracles kept independent of the library's code paths.

#include <string>
#include <vector>

#include "pss/induction.hpp"
#include "pss/io.hpp"
#include "pss/rng.hpp"
#include "pss/semiosis.hpp"

namespace pss::testsupport {

inline std::string index_to_bits(std::size_t index, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((index >> (width - 1 - j)) & 1) out[j] = '1';
  }
  return out;
}

// Satisfying-state count by full enumeration; the check for the
// inclusion-exclusion counter.
inline std::uint64_t brute_count(const Concept& c) {
  const std::size_t n = c.vocab()->size();
  std::uint64_t count = 0;
  const Bits limit = Bits{1} << n;
  for (Bits v = 0; v < limit; ++v) {
    if (c.evaluate_bits(v)) ++count;
  }
  return count;
}

inline OstensiveDefinition random_ostensive_over(SplitMix64& rng, VocabPtr vocab,
                                                 bool closed_world,
                                                 std::size_t min_positives = 1) {
  OstensiveDefinition def;
  def.vocab = vocab;
  def.closed_world = closed_world;
  const Vocabulary& v = *vocab;
  const std::size_t situations = std::size_t{1} << v.sensor_count();
  const std::size_t responses = std::size_t{1} << v.actuator_count();
  for (std::size_t s = 0; s < situations; ++s) {
    if (rng.chance_percent(60)) def.covered_situations.insert(index_to_bits(s, v.sensor_count()));
  }
  if (def.covered_situations.empty()) {
    def.covered_situations.insert(
        index_to_bits(rng.below(situations), v.sensor_count()));
  }
  // widen the cover until it can hold the requested number of positives
  for (std::size_t s = 0;
       s < situations && def.covered_situations.size() * responses < min_positives; ++s) {
    def.covered_situations.insert(index_to_bits(s, v.sensor_count()));
  }
  for (const std::string& s : def.covered_situations) {
    for (std::size_t r = 0; r < responses; ++r) {
      const Bits state = compose_bits(v, s, index_to_bits(r, v.actuator_count()));
      if (closed_world) {
        if (rng.chance_percent(40)) def.positives.insert(state);
      } else {
        const std::uint64_t roll = rng.below(100);
        if (roll < 30) {
          def.positives.insert(state);
        } else if (roll < 60) {
          def.explicit_negatives.insert(state);
        }
      }
    }
  }
  std::vector<std::string> covered(def.covered_situations.begin(), def.covered_situations.end());
  while (def.positives.size() < min_positives) {
    const std::string& s = covered[rng.below(covered.size())];
    const Bits state =
        compose_bits(v, s, index_to_bits(rng.below(responses), v.actuator_count()));
    def.explicit_negatives.erase(state);
    def.positives.insert(state);
  }
  return def;
}

inline OstensiveDefinition random_ostensive(SplitMix64& rng, std::size_t sensors,
                                            std::size_t actuators, bool closed_world,
                                            std::size_t min_positives = 1) {
  return random_ostensive_over(rng, default_vocabulary(sensors, actuators), closed_world,
                               min_positives);
}

// Relabel one positive as negative, keeping the covered situations fixed.
inline OstensiveDefinition flip_one_positive(OstensiveDefinition def, SplitMix64& rng) {
  std::vector<Bits> positives(def.positives.begin(), def.positives.end());
  const Bits chosen = positives[rng.below(positives.size())];
  def.positives.erase(chosen);
  if (!def.closed_world) def.explicit_negatives.insert(chosen);
  return def;
}

inline Lexicon random_lexicon(SplitMix64& rng, VocabPtr vocab, std::size_t symbols) {
  Lexicon lexicon(vocab);
  for (std::size_t k = 0; k < symbols; ++k) {
    const auto def = random_ostensive_over(rng, vocab, rng.chance_percent(50));
    lexicon.learn("sym" + std::to_string(k), def);
  }
  return lexicon;
}

// Independent enumeration of every admissible cube: contains no negative and
// at least one positive, both decided by walking the cube's states.
inline std::vector<Implicant> all_admissible_cubes(const OstensiveDefinition& def) {
  const LabelledSpace space = materialize(def);
  const std::size_t n = def.vocab->size();
  std::vector<bool> positive(std::size_t{1} << n, false);
  std::vector<bool> negative(std::size_t{1} << n, false);
  for (Bits p : space.positives) positive[p] = true;
  for (Bits q : space.negatives) negative[q] = true;
  const Bits full = n == 0 ? 0 : (Bits{1} << n) - 1;

  std::vector<Implicant> out;
  std::vector<int> digits(n, 0);
  while (true) {
    Implicant cube;
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] == 0) continue;
      cube.mask |= Bits{1} << i;
      if (digits[i] == 2) cube.value |= Bits{1} << i;
    }
    bool has_positive = false;
    bool has_negative = false;
    const Bits free = full & ~cube.mask;
    Bits sub = free;
    while (true) {
      const Bits state = cube.value | sub;
      if (positive[state]) has_positive = true;
      if (negative[state]) has_negative = true;
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
    if (has_positive && !has_negative) out.push_back(cube);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++digits[i] < 3) break;
      digits[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace pss::testsupport

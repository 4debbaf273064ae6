#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "pss/vocabulary.hpp"

namespace pss {

// A cube: conjunction of literals over vocabulary indices. The empty literal
// set is the always-true cube.
struct Implicant {
  Bits mask = 0;   // indices carrying a literal
  Bits value = 0;  // polarities on mask positions; zero elsewhere

  static Implicant cube(std::initializer_list<std::pair<std::size_t, bool>> literals);

  bool is_true_cube() const { return mask == 0; }
  bool contains(Bits state) const { return (state & mask) == value; }
  std::size_t literal_count() const;
  std::vector<std::pair<std::size_t, bool>> literals() const;  // ascending index

  // True when other's states are a subset of this cube's states.
  bool subsumes(const Implicant& other) const {
    return (mask & ~other.mask) == 0 && ((other.value ^ value) & mask) == 0;
  }

  bool operator==(const Implicant& other) const = default;
};

// Canonical order: literal lists compared element-wise, index ascending,
// polarity 0 before 1, shorter prefix first.
bool implicant_less(const Implicant& a, const Implicant& b);

// Literal union of two cubes; nullopt when they contradict.
std::optional<Implicant> intersect(const Implicant& a, const Implicant& b);

// Dedupe, absorb subcubes, sort canonically. Idempotent; evaluation-preserving.
std::vector<Implicant> canonicalize(std::vector<Implicant> implicants);

enum class Weakness { weaker, stronger, equally_weak };

inline constexpr std::size_t kExtensionCap = 20;
inline constexpr std::uint64_t kTermBudget = std::uint64_t{1} << 22;

// A sentence: disjunction of implicants in canonical form. The empty
// disjunction is FALSE; the single true cube is the tautology.
class Concept {
public:
  Concept(VocabPtr vocab, std::vector<Implicant> implicants);

  static Concept none(VocabPtr vocab);  // FALSE: empty extension
  static Concept all(VocabPtr vocab);   // TRUE cube: full extension

  const VocabPtr& vocab() const { return vocab_; }
  const std::vector<Implicant>& implicants() const { return implicants_; }
  bool is_false() const { return implicants_.empty(); }
  bool is_true() const { return implicants_.size() == 1 && implicants_[0].is_true_cube(); }

  bool evaluate(const DecisionState& state) const;
  bool evaluate_bits(Bits bits) const;

  // All satisfying states in lexicographic order. Enumerates 2^n assignments.
  std::vector<DecisionState> extension(std::size_t cap = kExtensionCap) const;

  // |extension| by inclusion-exclusion over implicant intersections; works
  // above the enumeration cap. Contradictory subsets prune their subtree.
  std::uint64_t extension_count(std::uint64_t term_budget = kTermBudget) const;

  bool operator==(const Concept& other) const;
  bool operator!=(const Concept& other) const { return !(*this == other); }

private:
  VocabPtr vocab_;
  std::vector<Implicant> implicants_;
};

std::string implicant_to_string(const Implicant& implicant, const Vocabulary& vocab);

// Order by extension cardinality: strictly larger extension = weaker claim.
Weakness weaker(const Concept& a, const Concept& b, std::uint64_t term_budget = kTermBudget);

// Logical AND via pairwise implicant intersection, then canonical form.
Concept conjoin(const Concept& a, const Concept& b);

}  // namespace pss

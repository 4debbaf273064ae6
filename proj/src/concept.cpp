#include "pss/concept.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pss {

Implicant Implicant::cube(std::initializer_list<std::pair<std::size_t, bool>> literals) {
  Implicant out;
  for (const auto& [index, polarity] : literals) {
    const Bits bit = Bits{1} << index;
    if ((out.mask & bit) && ((out.value & bit) != 0) != polarity) {
      fail(Err::inconsistent, "contradictory literal on index " + std::to_string(index));
    }
    out.mask |= bit;
    if (polarity) out.value |= bit;
  }
  return out;
}

std::size_t Implicant::literal_count() const { return std::popcount(mask); }

std::vector<std::pair<std::size_t, bool>> Implicant::literals() const {
  std::vector<std::pair<std::size_t, bool>> out;
  out.reserve(literal_count());
  Bits m = mask;
  while (m) {
    const int i = std::countr_zero(m);
    out.emplace_back(static_cast<std::size_t>(i), (value >> i) & 1);
    m &= m - 1;
  }
  return out;
}

bool implicant_less(const Implicant& a, const Implicant& b) {
  Bits am = a.mask;
  Bits bm = b.mask;
  while (am || bm) {
    if (!am) return true;   // a is a proper prefix
    if (!bm) return false;
    const int ia = std::countr_zero(am);
    const int ib = std::countr_zero(bm);
    if (ia != ib) return ia < ib;
    const bool pa = (a.value >> ia) & 1;
    const bool pb = (b.value >> ib) & 1;
    if (pa != pb) return !pa;
    am &= am - 1;
    bm &= bm - 1;
  }
  return false;
}

std::optional<Implicant> intersect(const Implicant& a, const Implicant& b) {
  if ((a.value ^ b.value) & (a.mask & b.mask)) return std::nullopt;
  return Implicant{a.mask | b.mask, a.value | b.value};
}

std::vector<Implicant> canonicalize(std::vector<Implicant> implicants) {
  std::sort(implicants.begin(), implicants.end(), implicant_less);
  implicants.erase(std::unique(implicants.begin(), implicants.end()), implicants.end());
  std::vector<Implicant> kept;
  kept.reserve(implicants.size());
  for (std::size_t i = 0; i < implicants.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < implicants.size(); ++j) {
      if (i != j && implicants[j].subsumes(implicants[i])) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(implicants[i]);
  }
  return kept;
}

Concept::Concept(VocabPtr vocab, std::vector<Implicant> implicants)
    : vocab_(std::move(vocab)) {
  if (!vocab_) fail(Err::invalid_vocabulary, "concept without a vocabulary");
  const std::size_t n = vocab_->size();
  for (const Implicant& imp : implicants) {
    if (n < 32 && (imp.mask >> n) != 0) {
      fail(Err::index_out_of_range, "implicant literal beyond the vocabulary");
    }
    if (imp.value & ~imp.mask) {
      fail(Err::invariant_violation, "implicant polarity bit outside its mask");
    }
  }
  implicants_ = canonicalize(std::move(implicants));
}

Concept Concept::none(VocabPtr vocab) { return Concept(std::move(vocab), {}); }

Concept Concept::all(VocabPtr vocab) { return Concept(std::move(vocab), {Implicant{}}); }

bool Concept::evaluate(const DecisionState& state) const {
  require_same_vocab(vocab_, state.vocab());
  return evaluate_bits(state.bits());
}

bool Concept::evaluate_bits(Bits bits) const {
  for (const Implicant& imp : implicants_) {
    if (imp.contains(bits)) return true;
  }
  return false;
}

std::vector<DecisionState> Concept::extension(std::size_t cap) const {
  const std::size_t n = vocab_->size();
  if (n > cap) {
    fail(Err::vocabulary_too_large, "extension enumeration over " + std::to_string(n) +
                                        " bits exceeds cap " + std::to_string(cap));
  }
  std::vector<DecisionState> out;
  const Bits limit = Bits{1} << n;
  for (Bits v = 0; v < limit; ++v) {
    // count with index 0 as the most significant digit: lexicographic order
    Bits bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((v >> (n - 1 - i)) & 1) bits |= Bits{1} << i;
    }
    if (evaluate_bits(bits)) out.emplace_back(vocab_, bits);
  }
  return out;
}

std::uint64_t Concept::extension_count(std::uint64_t term_budget) const {
  const std::size_t n = vocab_->size();
  long long total = 0;
  std::uint64_t terms = 0;
  // DFS over subsets of implicants with a consistent intersection; the sign
  // alternates with subset size and empty intersections cut the subtree.
  auto recurse = [&](auto&& self, std::size_t start, const Implicant& inter, long long sign) -> void {
    for (std::size_t j = start; j < implicants_.size(); ++j) {
      const auto merged = intersect(inter, implicants_[j]);
      if (!merged) continue;
      if (++terms > term_budget) {
        fail(Err::term_explosion, "inclusion-exclusion exceeded " +
                                      std::to_string(term_budget) + " terms");
      }
      total += sign * (1LL << (n - merged->literal_count()));
      self(self, j + 1, *merged, -sign);
    }
  };
  recurse(recurse, 0, Implicant{}, 1);
  return static_cast<std::uint64_t>(total);
}

bool Concept::operator==(const Concept& other) const {
  return same_vocab(vocab_, other.vocab_) && implicants_ == other.implicants_;
}

std::string implicant_to_string(const Implicant& implicant, const Vocabulary& vocab) {
  if (implicant.is_true_cube()) return "TRUE";
  std::string out;
  for (const auto& [index, polarity] : implicant.literals()) {
    if (!out.empty()) out += " & ";
    out += vocab.symbol(index).name;
    out += '=';
    out += polarity ? '1' : '0';
  }
  return out;
}

Weakness weaker(const Concept& a, const Concept& b, std::uint64_t term_budget) {
  require_same_vocab(a.vocab(), b.vocab());
  const std::uint64_t ca = a.extension_count(term_budget);
  const std::uint64_t cb = b.extension_count(term_budget);
  if (ca > cb) return Weakness::weaker;
  if (ca < cb) return Weakness::stronger;
  return Weakness::equally_weak;
}

Concept conjoin(const Concept& a, const Concept& b) {
  require_same_vocab(a.vocab(), b.vocab());
  std::vector<Implicant> out;
  for (const Implicant& x : a.implicants()) {
    for (const Implicant& y : b.implicants()) {
      if (auto merged = intersect(x, y)) out.push_back(*merged);
    }
  }
  return Concept(a.vocab(), std::move(out));
}

}  // namespace pss

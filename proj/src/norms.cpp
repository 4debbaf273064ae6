#include "pss/norms.hpp"

#include <algorithm>

namespace pss {

void validate(const NormCorpus& corpus) {
  if (!corpus.vocab) fail(Err::invalid_vocabulary, "norm corpus without a vocabulary");
  if (corpus.labelers == 0) fail(Err::invariant_violation, "norm corpus needs at least one labeler");
  const std::size_t n = corpus.vocab->size();
  for (const auto& [state, votes] : corpus.votes) {
    if (n < 32 && (state >> n) != 0) {
      fail(Err::index_out_of_range, "vote state has bits beyond the vocabulary");
    }
    if (votes.size() != corpus.labelers) {
      fail(Err::invariant_violation, "vote string '" + votes + "' does not have " +
                                         std::to_string(corpus.labelers) + " entries");
    }
    for (char c : votes) {
      if (c != '+' && c != '-' && c != '.') {
        fail(Err::parse_error, std::string("vote characters must be +, - or ., got '") + c + "'");
      }
    }
  }
}

NormCorpus restrict_labelers(const NormCorpus& corpus, const std::vector<std::size_t>& keep) {
  validate(corpus);
  if (keep.empty()) fail(Err::invariant_violation, "labeler subset must not be empty");
  for (std::size_t i : keep) {
    if (i >= corpus.labelers) {
      fail(Err::index_out_of_range, "labeler index " + std::to_string(i) + " out of " +
                                        std::to_string(corpus.labelers));
    }
  }
  NormCorpus out;
  out.vocab = corpus.vocab;
  out.labelers = keep.size();
  for (const auto& [state, votes] : corpus.votes) {
    std::string subset;
    subset.reserve(keep.size());
    for (std::size_t i : keep) subset.push_back(votes[i]);
    out.votes.emplace(state, std::move(subset));
  }
  return out;
}

OstensiveDefinition aggregate_majority(const NormCorpus& corpus) {
  validate(corpus);
  if (corpus.votes.empty()) fail(Err::empty_corpus, "norm corpus has no voted states");
  OstensiveDefinition def;
  def.vocab = corpus.vocab;
  def.closed_world = false;
  const Vocabulary& v = *corpus.vocab;
  for (const auto& [state, votes] : corpus.votes) {
    const auto plus = std::count(votes.begin(), votes.end(), '+');
    const auto minus = std::count(votes.begin(), votes.end(), '-');
    if (plus > minus) {
      def.positives.insert(state);
      def.covered_situations.insert(project_bits(v, state, Channel::sensor));
    } else if (minus > plus) {
      def.explicit_negatives.insert(state);
      def.covered_situations.insert(project_bits(v, state, Channel::sensor));
    }
    // ties and all-abstain rows stay don't-care
  }
  return def;
}

Concept learn_ethics(const NormCorpus& corpus) { return induce(aggregate_majority(corpus)); }

}  // namespace pss

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pss/norms.hpp"
#include "pss/semiosis.hpp"

namespace pss {

// All corpus formats are line-oriented UTF-8 text with '#'-prefixed header
// lines, chosen to diff cleanly in golden tests. The first line is always
//   #vocab sensors=<n> actuators=<m>
// Symbols default to s0..s{n-1} / r0..r{m-1} with every actuator
// transmittable; a '#symbols' line overrides names, channel layout and
// transmittable flags. Empty bit fields are written as '.'.

VocabPtr default_vocabulary(std::size_t sensors, std::size_t actuators);

std::string concept_to_text(const Concept& c);
Concept concept_from_text(std::string_view text, bool strict = true,
                          const std::string& source = "<text>");

std::string ostensive_to_text(const OstensiveDefinition& def);
OstensiveDefinition ostensive_from_text(std::string_view text,
                                        std::optional<bool> closed_world_override = std::nullopt,
                                        const std::string& source = "<text>");

std::string norms_to_text(const NormCorpus& corpus);
NormCorpus norms_from_text(std::string_view text, const std::string& source = "<text>");

std::string objective_to_text(const ObjectiveFunction& objective);
ObjectiveFunction objective_from_text(std::string_view text,
                                      const std::string& source = "<text>");

std::string dialogues_to_text(const VocabPtr& vocab, const std::vector<DialogueRecord>& records);
std::pair<VocabPtr, std::vector<DialogueRecord>> dialogues_from_text(
    std::string_view text, const std::string& source = "<text>");

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

Concept load_concept(const std::filesystem::path& path, bool strict = true);
void save_concept(const Concept& c, const std::filesystem::path& path);

OstensiveDefinition load_ostensive(const std::filesystem::path& path,
                                   std::optional<bool> closed_world_override = std::nullopt);
void save_ostensive(const OstensiveDefinition& def, const std::filesystem::path& path);

NormCorpus load_norms(const std::filesystem::path& path);
void save_norms(const NormCorpus& corpus, const std::filesystem::path& path);

ObjectiveFunction load_objective(const std::filesystem::path& path);
void save_objective(const ObjectiveFunction& objective, const std::filesystem::path& path);

std::pair<VocabPtr, std::vector<DialogueRecord>> load_dialogues(
    const std::filesystem::path& path);
void save_dialogues(const VocabPtr& vocab, const std::vector<DialogueRecord>& records,
                    const std::filesystem::path& path);

// Lexicon directory layout: one <token>.cpt per symbol plus a
// memory/<token>.odc positives file; sign patterns are derived from memory.
Lexicon load_lexicon(const std::filesystem::path& dir, VocabPtr fallback_vocab = nullptr,
                     bool strict = true);
void save_triad(const SymbolTriad& triad, const std::filesystem::path& dir);
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& dir);

}  // namespace pss

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pss/norms.hpp"
#include "pss/semiosis.hpp"

namespace pss {

// A desk-scale environment: a seeded deterministic situation stream and an
// optional scripted co-agent whose states the agent observes.
struct Scenario {
  enum class Gen { cycle, random };

  std::string name;
  VocabPtr vocab;
  Gen gen = Gen::random;
  std::size_t episode_limit = 200;
  bool has_coagent = false;
};

std::vector<std::string> scenario_names();
Scenario make_scenario(std::string_view name);

std::string scenario_situation(const Scenario& scenario, std::uint64_t seed, std::size_t episode);
std::optional<DecisionState> scenario_coagent(const Scenario& scenario,
                                              std::string_view situation);

struct EpisodeRecord {
  std::size_t index = 0;
  std::string situation;
  std::optional<DecisionState> observed;
  std::vector<std::string> observed_tokens;
  std::optional<std::string> response;  // absent when the episode is a dilemma
  std::optional<Explanation> why;
  std::vector<std::string> enacted_tokens;
  bool dilemma = false;
};

struct Transcript {
  std::string scenario;
  VocabPtr vocab;
  std::uint64_t seed = 0;
  std::vector<EpisodeRecord> episodes;
  std::size_t dilemmas = 0;
};

// Per episode: generate the situation, record the co-agent observation and
// its activations (observed), decide, record own activations (enacted).
// Dilemmas are recorded and the run continues; no fallback action is taken.
Transcript run_scenario(const Scenario& scenario, const std::vector<Concept>& goals,
                        const Lexicon& lexicon, std::uint64_t seed);

std::string render_explanation(const Explanation& explanation, const Vocabulary& vocab,
                               const std::vector<std::string>& goal_labels,
                               bool include_rejected);
std::string render_transcript(const Transcript& transcript);

// The toy machine: sensors are the opcode bits o1 o0 and the accumulator a,
// the actuator is the next accumulator ap. Opcodes: 00 keep, 01 set,
// 10 clear, 11 invert. The closed-world reading of the full table induces a
// concept whose extension is exactly the table and which abducts exactly one
// response per situation.
struct IsaRow {
  std::string situation;
  std::string response;
};

struct IsaReport {
  VocabPtr vocab;
  Concept induced;
  std::vector<IsaRow> table;
  std::vector<std::pair<std::string, std::vector<std::string>>> abductions;
  bool extension_matches = false;
  bool unique_abduction = false;
  bool ok() const { return extension_matches && unique_abduction; }
};

IsaReport isa_demo();
std::string render_isa_report(const IsaReport& report);

// The assist fixture: fixed vocabulary (other_hurt, request | comfort, harm,
// speak), a lexicon bootstrapped from a pinned dialogue corpus, a task goal
// (speak when asked, comfort the hurt) and a majority-ethics concept learned
// from a pinned three-labeler norm corpus.
struct AssistFixture {
  Scenario scenario;
  Lexicon lexicon;
  Concept task_goal;
  Concept ethics;
  NormCorpus norms;

  std::vector<Concept> goals() const { return {task_goal, ethics}; }
  std::vector<Concept> contradictory_goals() const;
};

AssistFixture make_assist_fixture();

// Pinned corpus texts shipped verbatim under fixtures/.
std::string assist_dialogue_text();
std::string assist_norms_text();

}  // namespace pss

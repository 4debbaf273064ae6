#include "pss/scenario.hpp"

#include <algorithm>

#include "pss/io.hpp"
#include "pss/rng.hpp"

namespace pss {

namespace {

std::string index_to_bits(std::size_t index, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((index >> (width - 1 - j)) & 1) out[j] = '1';
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return "-";
  std::string out;
  for (const std::string& token : tokens) {
    if (!out.empty()) out += ",";
    out += token;
  }
  return out;
}

VocabPtr assist_vocabulary() {
  return Vocabulary::split({"other_hurt", "request"}, {"comfort", "harm", "speak!"});
}

NormCorpus assist_norm_corpus() {
  // Three labelers agree that harm is unethical and everything else is fine,
  // over every situation-response pair.
  NormCorpus corpus;
  corpus.vocab = assist_vocabulary();
  corpus.labelers = 3;
  const Vocabulary& v = *corpus.vocab;
  const auto harm = v.index_of("harm");
  const Bits all = Bits{1} << v.size();
  for (Bits state = 0; state < all; ++state) {
    const bool harmful = (state >> *harm) & 1;
    corpus.votes.emplace(state, harmful ? "---" : "+++");
  }
  return corpus;
}

Concept assist_task_goal(const VocabPtr& vocab) {
  // (request=1 -> speak=1) and (other_hurt=1 -> comfort=1), as a disjunction
  // of cubes.
  const Vocabulary& v = *vocab;
  const std::size_t oh = *v.index_of("other_hurt");
  const std::size_t rq = *v.index_of("request");
  const std::size_t cf = *v.index_of("comfort");
  const std::size_t sp = *v.index_of("speak");
  return Concept(vocab, {
                            Implicant::cube({{oh, false}, {rq, false}}),
                            Implicant::cube({{oh, false}, {sp, true}}),
                            Implicant::cube({{rq, false}, {cf, true}}),
                            Implicant::cube({{cf, true}, {sp, true}}),
                        });
}

}  // namespace

std::vector<std::string> scenario_names() { return {"assist", "isa", "toy3"}; }

Scenario make_scenario(std::string_view name) {
  Scenario scenario;
  scenario.name = std::string(name);
  if (name == "toy3") {
    scenario.vocab = default_vocabulary(2, 1);
    scenario.gen = Scenario::Gen::cycle;
    scenario.episode_limit = 200;
  } else if (name == "assist") {
    scenario.vocab = assist_vocabulary();
    scenario.gen = Scenario::Gen::random;
    scenario.episode_limit = 200;
    scenario.has_coagent = true;
  } else if (name == "isa") {
    scenario.vocab = Vocabulary::split({"o1", "o0", "a"}, {"ap"});
    scenario.gen = Scenario::Gen::cycle;
    scenario.episode_limit = 8;
  } else {
    fail(Err::unknown_scenario, "no scenario named '" + std::string(name) + "'");
  }
  return scenario;
}

std::string scenario_situation(const Scenario& scenario, std::uint64_t seed,
                               std::size_t episode) {
  const std::size_t width = scenario.vocab->sensor_count();
  const std::size_t count = std::size_t{1} << width;
  std::size_t index = 0;
  if (scenario.gen == Scenario::Gen::cycle) {
    index = episode % count;
  } else {
    index = static_cast<std::size_t>(mix64(seed, episode) % count);
  }
  return index_to_bits(index, width);
}

std::optional<DecisionState> scenario_coagent(const Scenario& scenario,
                                              std::string_view situation) {
  if (!scenario.has_coagent) return std::nullopt;
  // assist co-agent: comforts the hurt, never harms, speaks when asked.
  const char other_hurt = situation.at(0);
  const char request = situation.at(1);
  std::string response = {other_hurt, '0', request};
  return compose(scenario.vocab, situation, response);
}

Transcript run_scenario(const Scenario& scenario, const std::vector<Concept>& goals,
                        const Lexicon& lexicon, std::uint64_t seed) {
  require_same_vocab(scenario.vocab, lexicon.vocab());
  for (const Concept& goal : goals) require_same_vocab(scenario.vocab, goal.vocab());
  Transcript transcript;
  transcript.scenario = scenario.name;
  transcript.vocab = scenario.vocab;
  transcript.seed = seed;
  for (std::size_t episode = 0; episode < scenario.episode_limit; ++episode) {
    EpisodeRecord record;
    record.index = episode;
    record.situation = scenario_situation(scenario, seed, episode);
    if (auto observed = scenario_coagent(scenario, record.situation)) {
      record.observed = observed;
      record.observed_tokens = activation(*observed, lexicon, Mode::observed);
    }
    try {
      Decision decision = decide(goals, record.situation);
      record.response = decision.response;
      record.why = std::move(decision.why);
      const DecisionState enacted = compose(scenario.vocab, record.situation, *record.response);
      record.enacted_tokens = activation(enacted, lexicon, Mode::enacted);
    } catch (const Error& e) {
      if (e.code() != Err::no_ethical_response) throw;
      record.dilemma = true;
      ++transcript.dilemmas;
    }
    transcript.episodes.push_back(std::move(record));
  }
  return transcript;
}

std::string render_explanation(const Explanation& explanation, const Vocabulary& vocab,
                               const std::vector<std::string>& goal_labels,
                               bool include_rejected) {
  std::string out = "chosen " + (explanation.situation.empty() ? "." : explanation.situation) +
                    " " + (explanation.response.empty() ? "." : explanation.response) + "\n";
  for (std::size_t g = 0; g < explanation.satisfied_per_goal.size(); ++g) {
    const std::string label =
        g < goal_labels.size() ? goal_labels[g] : "goal " + std::to_string(g + 1);
    for (const Implicant& imp : explanation.satisfied_per_goal[g]) {
      out += label + " because: " + implicant_to_string(imp, vocab) + "\n";
    }
  }
  if (include_rejected) {
    for (const auto& [response, goal] : explanation.rejected) {
      const std::string label =
          goal < goal_labels.size() ? goal_labels[goal] : "goal " + std::to_string(goal + 1);
      out += "rejected " + (response.empty() ? "." : response) + " violates " + label + "\n";
    }
  }
  return out;
}

std::string render_transcript(const Transcript& transcript) {
  std::string out = "scenario " + transcript.scenario + " seed " +
                    std::to_string(transcript.seed) + " episodes " +
                    std::to_string(transcript.episodes.size()) + "\n";
  for (const EpisodeRecord& record : transcript.episodes) {
    out += "episode " + std::to_string(record.index) + " situation " +
           (record.situation.empty() ? "." : record.situation) + "\n";
    if (record.observed) {
      out += "observed " + (record.observed->situation().empty() ? "." : record.observed->situation()) +
             " " + (record.observed->response().empty() ? "." : record.observed->response()) +
             " tokens " + join_tokens(record.observed_tokens) + "\n";
    }
    if (record.dilemma) {
      out += "dilemma\n";
      continue;
    }
    out += "decision " + (record.response->empty() ? "." : *record.response) + "\n";
    if (record.why) {
      for (std::size_t g = 0; g < record.why->satisfied_per_goal.size(); ++g) {
        for (const Implicant& imp : record.why->satisfied_per_goal[g]) {
          out += "goal " + std::to_string(g + 1) +
                 " because: " + implicant_to_string(imp, *transcript.vocab) + "\n";
        }
      }
    }
    out += "enacted tokens " + join_tokens(record.enacted_tokens) + "\n";
  }
  out += "dilemmas " + std::to_string(transcript.dilemmas) + "\n";
  return out;
}

IsaReport isa_demo() {
  const VocabPtr vocab = Vocabulary::split({"o1", "o0", "a"}, {"ap"});
  IsaReport report{vocab, Concept::none(vocab), {}, {}, false, false};
  const Vocabulary& v = *vocab;

  OstensiveDefinition table;
  table.vocab = vocab;
  table.closed_world = true;
  for (std::size_t index = 0; index < 8; ++index) {
    const std::string situation = index_to_bits(index, 3);
    const bool o1 = situation[0] == '1';
    const bool o0 = situation[1] == '1';
    const bool acc = situation[2] == '1';
    bool next = acc;          // 00: keep
    if (!o1 && o0) next = true;   // 01: set
    if (o1 && !o0) next = false;  // 10: clear
    if (o1 && o0) next = !acc;    // 11: invert
    const std::string response(1, next ? '1' : '0');
    table.covered_situations.insert(situation);
    table.positives.insert(compose_bits(v, situation, response));
    report.table.push_back({situation, response});
  }

  report.induced = induce(table);

  std::set<Bits> expected;
  for (Bits p : table.positives) expected.insert(p);
  std::set<Bits> actual;
  for (const DecisionState& state : report.induced.extension()) actual.insert(state.bits());
  report.extension_matches = expected == actual;

  report.unique_abduction = true;
  for (const IsaRow& row : report.table) {
    const auto responses = abduct(report.induced, row.situation);
    report.abductions.emplace_back(row.situation, responses);
    if (responses.size() != 1 || responses[0] != row.response) report.unique_abduction = false;
  }
  return report;
}

std::string render_isa_report(const IsaReport& report) {
  const Vocabulary& v = *report.vocab;
  std::string out = "vocab sensors=";
  bool first = true;
  for (std::size_t i : v.sensor_indices()) {
    if (!first) out += ",";
    out += v.symbol(i).name;
    first = false;
  }
  out += " actuators=";
  first = true;
  for (std::size_t i : v.actuator_indices()) {
    if (!first) out += ",";
    out += v.symbol(i).name;
    first = false;
  }
  out += "\ninstruction table\n";
  for (const IsaRow& row : report.table) {
    out += "  " + row.situation + " -> " + row.response + "\n";
  }
  out += "concept\n";
  for (const Implicant& imp : report.induced.implicants()) {
    out += "  " + implicant_to_string(imp, v) + "\n";
  }
  out += "abductions\n";
  for (const auto& [situation, responses] : report.abductions) {
    out += "  " + situation + " ->";
    for (const std::string& r : responses) out += " " + r;
    out += "\n";
  }
  out += std::string("extension matches table: ") + (report.extension_matches ? "yes" : "no") + "\n";
  out += std::string("unique abduction per situation: ") + (report.unique_abduction ? "yes" : "no") +
         "\n";
  return out;
}

std::string assist_dialogue_text() {
  return "#vocab sensors=2 actuators=3\n"
         "#symbols s:other_hurt s:request a:comfort a:harm a:speak!\n"
         "10 000 tokens=hurt\n"
         "11 100 tokens=help,hurt\n"
         "00 100 tokens=help\n"
         "01 001 tokens=-\n"
         "00 000 tokens=-\n"
         "10 100 tokens=help,hurt\n"
         "11 001 tokens=hurt\n"
         "01 100 tokens=help\n"
         "01 000 tokens=-\n"
         "11 000 tokens=hurt\n";
}

std::string assist_norms_text() { return norms_to_text(assist_norm_corpus()); }

std::vector<Concept> AssistFixture::contradictory_goals() const {
  const Vocabulary& v = *scenario.vocab;
  const std::size_t harm = *v.index_of("harm");
  return {Concept(scenario.vocab, {Implicant::cube({{harm, true}})}), ethics};
}

AssistFixture make_assist_fixture() {
  Scenario scenario = make_scenario("assist");
  Lexicon lexicon(scenario.vocab);
  const auto [vocab, records] = dialogues_from_text(assist_dialogue_text(), "<assist.dlg>");
  require_same_vocab(vocab, scenario.vocab);
  BootstrapResult boot = bootstrap(records, lexicon);
  for (SymbolTriad& triad : boot.learned) lexicon.insert(std::move(triad));
  NormCorpus norms = assist_norm_corpus();
  Concept ethics = learn_ethics(norms);
  Concept task = assist_task_goal(scenario.vocab);
  return AssistFixture{std::move(scenario), std::move(lexicon), std::move(task),
                       std::move(ethics), std::move(norms)};
}

}  // namespace pss

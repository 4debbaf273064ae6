// Command-line front end: learn concepts from corpora, abduct and decide,
// interpret and bootstrap lexicons, aggregate norms, run the demos. Every
// command is a pure function of its inputs, flags and seed.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pss/io.hpp"
#include "pss/scenario.hpp"

namespace {

using namespace pss;

std::optional<bool> mode_override(bool open_world) {
  if (open_world) return false;
  return std::nullopt;
}

int run_learn(const std::string& corpus, const std::string& out, bool open_world) {
  const OstensiveDefinition def = load_ostensive(corpus, mode_override(open_world));
  const Concept c = induce(def);
  save_concept(c, out);
  std::cout << concept_to_text(c);
  return 0;
}

int run_abduct(const std::string& concept_path, const std::string& situation, bool lenient) {
  const Concept c = load_concept(concept_path, !lenient);
  for (const std::string& response : abduct(c, situation)) {
    std::cout << (response.empty() ? "." : response) << "\n";
  }
  return 0;
}

int run_decide(const std::vector<std::string>& goal_paths, const std::string& ethics_path,
               const std::string& situation, bool explain, bool lenient) {
  std::vector<Concept> goals;
  std::vector<std::string> labels;
  for (const std::string& path : goal_paths) {
    goals.push_back(load_concept(path, !lenient));
    labels.push_back("goal " + std::to_string(goals.size()));
  }
  goals.push_back(load_concept(ethics_path, !lenient));
  labels.push_back("ethics");
  const Decision decision = decide(goals, situation);
  if (explain) {
    std::cout << render_explanation(decision.why, *goals.front().vocab(), labels, true);
  } else {
    std::cout << "chosen " << (situation.empty() ? "." : situation) << " "
              << (decision.response.empty() ? "." : decision.response) << "\n";
  }
  return 0;
}

int run_interpret(const std::string& lexicon_dir, const std::string& state_bits, bool lenient) {
  const Lexicon lexicon = load_lexicon(lexicon_dir, nullptr, !lenient);
  const DecisionState state = DecisionState::from_assignment(lexicon.vocab(), state_bits);
  for (const std::string& token : interpret(state, lexicon)) {
    std::cout << token << "\n";
  }
  return 0;
}

int run_bootstrap(const std::string& lexicon_dir, const std::string& dialogues_path) {
  const auto [vocab, records] = load_dialogues(dialogues_path);
  const Lexicon lexicon = load_lexicon(lexicon_dir, vocab);
  const BootstrapResult result = bootstrap(records, lexicon);
  for (const SymbolTriad& triad : result.learned) {
    save_triad(triad, lexicon_dir);
    std::cout << "learned " << triad.token << "\n";
  }
  for (const auto& [token, reason] : result.unlearnable) {
    std::cout << "unlearnable " << token << ": " << reason << "\n";
  }
  return 0;
}

int run_norms(const std::string& corpus_path, const std::string& out,
              const std::vector<std::size_t>& labelers) {
  NormCorpus corpus = load_norms(corpus_path);
  if (!labelers.empty()) corpus = restrict_labelers(corpus, labelers);
  const Concept c = learn_ethics(corpus);
  save_concept(c, out);
  std::cout << concept_to_text(c);
  return 0;
}

int run_pipeline(const std::string& objective_path, const std::string& scenario_name,
                 std::size_t budget, std::uint64_t seed, const std::string& out) {
  const ObjectiveFunction objective = load_objective(objective_path);
  const Scenario scenario = make_scenario(scenario_name);
  const Concept c = explore_and_learn(objective, scenario, budget, seed);
  save_concept(c, out);
  std::cout << concept_to_text(c);
  return 0;
}

int run_oracle_check(const std::string& corpus_path, bool open_world) {
  const OstensiveDefinition def = load_ostensive(corpus_path, mode_override(open_world));
  const Concept learned = induce(def);
  const Concept oracle = oracle_induce(def);
  if (learned == oracle) {
    std::cout << "induce matches oracle: " << learned.implicants().size()
              << " implicants, extension " << learned.extension_count() << "\n";
    return 0;
  }
  std::cout << "MISMATCH\ninduce:\n" << concept_to_text(learned) << "oracle:\n"
            << concept_to_text(oracle);
  return 1;
}

int run_demo(const std::string& scenario_name, std::uint64_t seed) {
  if (scenario_name == "isa") {
    const IsaReport report = isa_demo();
    std::cout << render_isa_report(report);
    return report.ok() ? 0 : 1;
  }
  if (scenario_name == "assist") {
    const AssistFixture fixture = make_assist_fixture();
    const Transcript transcript =
        run_scenario(fixture.scenario, fixture.goals(), fixture.lexicon, seed);
    std::cout << render_transcript(transcript);
    return 0;
  }
  fail(Err::unknown_scenario, "demo supports 'isa' and 'assist', not '" + scenario_name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perceptual symbol system agent"};
  app.require_subcommand(1);
  int status = 0;

  std::string corpus, out, concept_path, situation, lexicon_dir, state_bits, dialogues_path;
  std::string ethics_path, objective_path, scenario_name;
  std::vector<std::string> goal_paths;
  std::vector<std::size_t> labelers;
  bool open_world = false;
  bool lenient = false;
  bool explain = false;
  std::size_t budget = 0;
  std::uint64_t seed = 0;

  auto* learn = app.add_subcommand("learn", "induce a concept from an ostensive corpus");
  learn->add_option("--corpus", corpus)->required();
  learn->add_option("--out", out)->required();
  learn->add_flag("--open-world", open_world, "treat unlisted responses as don't-care");
  learn->callback([&]() { status = run_learn(corpus, out, open_world); });

  auto* abduct_cmd = app.add_subcommand("abduct", "list the responses a concept admits");
  abduct_cmd->add_option("--concept", concept_path)->required();
  abduct_cmd->add_option("--situation", situation)->required();
  abduct_cmd->add_flag("--lenient", lenient, "re-canonicalize non-canonical concept files");
  abduct_cmd->callback([&]() { status = run_abduct(concept_path, situation, lenient); });

  auto* decide_cmd = app.add_subcommand("decide", "choose a response under goals and ethics");
  decide_cmd->add_option("--goal", goal_paths, "goal concept file (repeatable)");
  decide_cmd->add_option("--ethics", ethics_path)->required();
  decide_cmd->add_option("--situation", situation)->required();
  decide_cmd->add_flag("--explain", explain, "print satisfied implicants and rejections");
  decide_cmd->add_flag("--lenient", lenient);
  decide_cmd->callback(
      [&]() { status = run_decide(goal_paths, ethics_path, situation, explain, lenient); });

  auto* interpret_cmd = app.add_subcommand("interpret", "list the symbols active on a state");
  interpret_cmd->add_option("--lexicon", lexicon_dir)->required();
  interpret_cmd->add_option("--state", state_bits)->required();
  interpret_cmd->add_flag("--lenient", lenient);
  interpret_cmd->callback([&]() { status = run_interpret(lexicon_dir, state_bits, lenient); });

  auto* bootstrap_cmd =
      app.add_subcommand("bootstrap", "learn unknown tokens from a dialogue corpus");
  bootstrap_cmd->add_option("--lexicon", lexicon_dir)->required();
  bootstrap_cmd->add_option("--dialogues", dialogues_path)->required();
  bootstrap_cmd->callback([&]() { status = run_bootstrap(lexicon_dir, dialogues_path); });

  auto* norms_cmd = app.add_subcommand("norms", "aggregate labeler votes into an ethics concept");
  norms_cmd->add_option("--corpus", corpus)->required();
  norms_cmd->add_option("--out", out)->required();
  norms_cmd->add_option("--labelers", labelers, "labeler subset, e.g. 0,2")->delimiter(',');
  norms_cmd->callback([&]() { status = run_norms(corpus, out, labelers); });

  auto* pipeline_cmd =
      app.add_subcommand("pipeline", "objective -> ostensive -> concept via exploration");
  pipeline_cmd->add_option("--objective", objective_path)->required();
  pipeline_cmd->add_option("--scenario", scenario_name)->required();
  pipeline_cmd->add_option("--budget", budget)->required();
  pipeline_cmd->add_option("--seed", seed)->required();
  pipeline_cmd->add_option("--out", out)->required();
  pipeline_cmd->callback(
      [&]() { status = run_pipeline(objective_path, scenario_name, budget, seed, out); });

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare induce against the oracle");
  oracle_cmd->add_option("--corpus", corpus)->required();
  oracle_cmd->add_flag("--open-world", open_world);
  oracle_cmd->callback([&]() { status = run_oracle_check(corpus, open_world); });

  auto* demo_cmd = app.add_subcommand("demo", "run the isa or assist demonstration");
  demo_cmd->add_option("--scenario", scenario_name)->required();
  demo_cmd->add_option("--seed", seed);
  demo_cmd->callback([&]() { status = run_demo(scenario_name, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pss::exit_class(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

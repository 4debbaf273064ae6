#include "doctest.h"

#include <filesystem>

#include "pss/io.hpp"
#include "support.hpp"

using namespace pss;

TEST_CASE("a minimal ostensive corpus parses") {
  const auto def = ostensive_from_text(
      "#vocab sensors=2 actuators=1\n"
      "00 1 +\n");
  CHECK(def.closed_world);
  CHECK(def.positives == std::set<Bits>{compose_bits(*def.vocab, "00", "1")});
  CHECK(def.covered_situations == std::set<std::string>{"00"});
}

TEST_CASE("parse errors name the offending line") {
  try {
    ostensive_from_text(
        "#vocab sensors=2 actuators=1\n"
        "000 1 +\n",
        std::nullopt, "corpus.odc");
    FAIL("expected a parse failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("corpus.odc:2") != std::string::npos);
    CHECK(exit_class(e.code()) == 2);
  }
}

TEST_CASE("concept files round-trip byte-identically") {
  const auto v = default_vocabulary(2, 1);
  const Concept c(v, {Implicant::cube({{2, true}})});
  const std::string text = concept_to_text(c);
  CHECK(text == "#vocab sensors=2 actuators=1\nr0=1\n");
  CHECK(concept_from_text(text) == c);
  CHECK(concept_to_text(concept_from_text(text)) == text);

  CHECK(concept_to_text(Concept::none(v)) == "#vocab sensors=2 actuators=1\n");
  CHECK(concept_to_text(Concept::all(v)) == "#vocab sensors=2 actuators=1\nTRUE\n");
  CHECK(concept_from_text("#vocab sensors=2 actuators=1\n") == Concept::none(v));
  CHECK(concept_from_text("#vocab sensors=2 actuators=1\nTRUE\n") == Concept::all(v));
}

TEST_CASE("named vocabularies survive the #symbols header") {
  const auto v = Vocabulary::split({"other_hurt", "request"}, {"comfort", "harm", "speak!"});
  const Concept c(v, {Implicant::cube({{3, false}})});
  const std::string text = concept_to_text(c);
  CHECK(text.find("#symbols s:other_hurt s:request a:comfort a:harm a:speak!\n") !=
        std::string::npos);
  const Concept back = concept_from_text(text);
  CHECK(back == c);
  CHECK(same_vocab(back.vocab(), v));

  // interleaved channel layouts also round-trip
  std::vector<Symbol> symbols{{"a", Channel::sensor, false},
                              {"b", Channel::actuator, true},
                              {"c", Channel::sensor, false}};
  const auto mixed = std::make_shared<const Vocabulary>(symbols);
  const Concept mc(mixed, {Implicant::cube({{1, true}})});
  CHECK(concept_from_text(concept_to_text(mc)) == mc);
}

TEST_CASE("strict concept parsing rejects non-canonical bodies") {
  const std::string absorbed =
      "#vocab sensors=2 actuators=1\n"
      "r0=1\n"
      "s0=0 & r0=1\n";
  CHECK_THROWS_AS(concept_from_text(absorbed, true), Error);
  const Concept lenient = concept_from_text(absorbed, false);
  CHECK(lenient == concept_from_text("#vocab sensors=2 actuators=1\nr0=1\n"));

  const std::string unsorted =
      "#vocab sensors=2 actuators=1\n"
      "r0=1 & s0=0\n";
  CHECK_THROWS_AS(concept_from_text(unsorted, true), Error);
  CHECK(concept_from_text(unsorted, false) ==
        concept_from_text("#vocab sensors=2 actuators=1\ns0=0 & r0=1\n"));

  const std::string contradictory =
      "#vocab sensors=2 actuators=1\n"
      "s0=0 & s0=1\n";
  CHECK_THROWS_AS(concept_from_text(contradictory, true), Error);
  CHECK_THROWS_AS(concept_from_text(contradictory, false), Error);

  CHECK_THROWS_AS(concept_from_text("#vocab sensors=2 actuators=1\nzz=1\n"), Error);
}

TEST_CASE("ostensive corpora keep modes, covers and labels") {
  const std::string text =
      "#vocab sensors=3 actuators=0\n"
      "#mode explicit-negatives\n"
      "000 . +\n"
      "011 . +\n"
      "111 . -\n";
  const auto def = ostensive_from_text(text);
  CHECK_FALSE(def.closed_world);
  CHECK(def.positives.size() == 2);
  CHECK(def.explicit_negatives.size() == 1);
  CHECK(ostensive_to_text(def) == text);

  // a cover line adds a situation with no examples
  const auto covered = ostensive_from_text(
      "#vocab sensors=1 actuators=1\n"
      "#cover 1\n"
      "0 1 +\n");
  CHECK(covered.covered_situations == std::set<std::string>{"0", "1"});
  CHECK(ostensive_to_text(covered).find("#cover 1\n") != std::string::npos);

  // explicit negatives are illegal under the closed world
  CHECK_THROWS_AS(ostensive_from_text("#vocab sensors=1 actuators=1\n0 1 -\n"), Error);

  // conflicting duplicate labels
  try {
    ostensive_from_text(
        "#vocab sensors=1 actuators=1\n"
        "#mode explicit-negatives\n"
        "0 1 +\n"
        "0 1 -\n");
    FAIL("expected duplicate_state");
  } catch (const Error& e) {
    CHECK(e.code() == Err::duplicate_state);
  }

  // the override only applies when the file is silent
  const auto forced = ostensive_from_text("#vocab sensors=1 actuators=1\n0 1 +\n", false);
  CHECK_FALSE(forced.closed_world);
  CHECK_THROWS_AS(ostensive_from_text(text, true), Error);
}

TEST_CASE("norm corpora round-trip") {
  const std::string text =
      "#vocab sensors=1 actuators=1\n"
      "#labelers 3\n"
      "0 0 +++\n"
      "0 1 .--\n"
      "1 0 ++-\n";
  const NormCorpus corpus = norms_from_text(text);
  CHECK(corpus.labelers == 3);
  CHECK(corpus.votes.size() == 3);
  CHECK(norms_to_text(corpus) == text);

  CHECK_THROWS_AS(norms_from_text("#vocab sensors=1 actuators=1\n0 0 ++\n"), Error);
  CHECK_THROWS_AS(norms_from_text("#vocab sensors=1 actuators=1\n#labelers 2\n0 0 +\n"), Error);
}

TEST_CASE("objective files round-trip") {
  const std::string text =
      "#vocab sensors=2 actuators=1\n"
      "w r0 1\n"
      "bias 0\n"
      "theta 1\n";
  const ObjectiveFunction f = objective_from_text(text);
  CHECK(f.weights == std::vector<long long>{0, 0, 1});
  CHECK(f.theta == 1);
  CHECK(objective_to_text(f) == text);

  CHECK_THROWS_AS(objective_from_text("#vocab sensors=1 actuators=0\nw nope 1\n"), Error);
  CHECK_THROWS_AS(
      objective_from_text("#vocab sensors=1 actuators=0\nw s0 1\nw s0 2\n"), Error);
  const ObjectiveFunction defaults = objective_from_text("#vocab sensors=1 actuators=0\n");
  CHECK(defaults.bias == 0);
  CHECK(defaults.theta == 0);
}

TEST_CASE("dialogue corpora round-trip in record order") {
  const std::string text =
      "#vocab sensors=1 actuators=1\n"
      "1 1 tokens=grasp,wave\n"
      "0 0 tokens=-\n";
  const auto [vocab, records] = dialogues_from_text(text);
  REQUIRE(records.size() == 2);
  CHECK(records[0].tokens == std::set<std::string>{"grasp", "wave"});
  CHECK(records[1].tokens.empty());
  CHECK(dialogues_to_text(vocab, records) == text);

  CHECK_THROWS_AS(dialogues_from_text("#vocab sensors=1 actuators=1\n1 1 tokens=a b\n"), Error);
}

TEST_CASE("header problems are rejected") {
  CHECK_THROWS_AS(concept_from_text(""), Error);
  CHECK_THROWS_AS(concept_from_text("r0=1\n"), Error);
  CHECK_THROWS_AS(concept_from_text("TRUE\n"), Error);  // body without a header
  CHECK_THROWS_AS(concept_from_text("#vocab sensors=x actuators=1\n"), Error);
  CHECK_THROWS_AS(concept_from_text("#vocab sensors=1 actuators=1\n#whatever\n"), Error);
  CHECK_THROWS_AS(
      concept_from_text("#vocab sensors=2 actuators=0\n#symbols s:a\n"), Error);
  // header line after the body
  CHECK_THROWS_AS(ostensive_from_text("#vocab sensors=1 actuators=1\n0 1 +\n#cover 1\n"), Error);
  // '# ' comments are allowed
  CHECK_NOTHROW(concept_from_text("#vocab sensors=1 actuators=1\n# a comment\nr0=1\n"));
}

TEST_CASE("files round-trip through the filesystem") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pss_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const auto v = default_vocabulary(2, 1);
  const Concept c(v, {Implicant::cube({{0, false}, {2, true}})});
  save_concept(c, dir / "c.cpt");
  CHECK(load_concept(dir / "c.cpt") == c);
  CHECK_THROWS_AS(load_concept(dir / "missing.cpt"), Error);

  fs::remove_all(dir);
}

TEST_CASE("lexicon directories round-trip triads") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pss_lex_test";
  fs::remove_all(dir);

  const auto v = Vocabulary::split({"hurt_obs"}, {"comfort!"});
  Lexicon lex(v);
  OstensiveDefinition def;
  def.vocab = v;
  def.closed_world = true;
  def.covered_situations = {"0", "1"};
  def.positives = {compose_bits(*v, "1", "0"), compose_bits(*v, "1", "1")};
  lex.learn("hurt", def);
  save_lexicon(lex, dir);

  const Lexicon loaded = load_lexicon(dir);
  REQUIRE(loaded.contains("hurt"));
  const SymbolTriad& a = lex.at("hurt");
  const SymbolTriad& b = loaded.at("hurt");
  CHECK(a.interpretant == b.interpretant);
  CHECK(a.sign_patterns == b.sign_patterns);
  CHECK(a.referent_memory == b.referent_memory);

  // loading an empty directory needs a fallback vocabulary
  const fs::path empty = dir / "nothing";
  CHECK_THROWS_AS(load_lexicon(empty), Error);
  CHECK(load_lexicon(empty, v).triads().empty());

  fs::remove_all(dir);
}

#include "doctest.h"

#include <algorithm>

#include "pss/io.hpp"
#include "pss/semiosis.hpp"
#include "support.hpp"

using namespace pss;

namespace {

// sensors: hurt_obs | actuators: comfort (transmittable)
VocabPtr hurt_vocab() { return Vocabulary::split({"hurt_obs"}, {"comfort!"}); }

OstensiveDefinition hurt_corpus(const VocabPtr& v) {
  OstensiveDefinition def;
  def.vocab = v;
  def.closed_world = true;
  def.covered_situations = {"0", "1"};
  def.positives = {compose_bits(*v, "1", "0"), compose_bits(*v, "1", "1")};
  return def;
}

}  // namespace

TEST_CASE("learn_symbol grounds a token in an ostensive definition") {
  const auto v = hurt_vocab();
  const SymbolTriad hurt = learn_symbol("hurt", hurt_corpus(v));
  CHECK(hurt.interpretant == Concept(v, {Implicant::cube({{0, true}})}));
  CHECK(hurt.referent_memory.size() == 2);
  for (const DecisionState& d : hurt.referent_memory) CHECK(hurt.interpretant.evaluate(d));
  // only the comfort=1 positive yields a non-zero transmittable pattern
  CHECK(hurt.sign_patterns == std::set<std::string>{"1"});

  // a single positive gives a one-state memory
  OstensiveDefinition single;
  single.vocab = v;
  single.closed_world = false;
  single.covered_situations = {"1"};
  single.positives = {compose_bits(*v, "1", "1")};
  CHECK(learn_symbol("once", single).referent_memory.size() == 1);

  // all transmittable bits zero -> understood but not yet transmittable
  OstensiveDefinition silent;
  silent.vocab = v;
  silent.closed_world = false;
  silent.covered_situations = {"1"};
  silent.positives = {compose_bits(*v, "1", "0")};
  CHECK(learn_symbol("quiet", silent).sign_patterns.empty());

  CHECK_THROWS_AS(learn_symbol("bad token", hurt_corpus(v)), Error);
}

TEST_CASE("lexicon rejects duplicate tokens") {
  const auto v = hurt_vocab();
  Lexicon lex(v);
  lex.learn("hurt", hurt_corpus(v));
  try {
    lex.learn("hurt", hurt_corpus(v));
    FAIL("expected duplicate_token");
  } catch (const Error& e) {
    CHECK(e.code() == Err::duplicate_token);
  }
  CHECK_THROWS_AS(lex.at("missing"), Error);
}

TEST_CASE("interpret collects every active interpretant") {
  const auto v = hurt_vocab();
  Lexicon lex(v);
  lex.learn("hurt", hurt_corpus(v));

  CHECK(interpret(DecisionState::from_assignment(v, "10"), lex) ==
        std::vector<std::string>{"hurt"});
  CHECK(interpret(DecisionState::from_assignment(v, "01"), lex).empty());

  Lexicon empty(v);
  CHECK(interpret(DecisionState::from_assignment(v, "10"), empty).empty());

  // ambiguity is preserved, not resolved
  OstensiveDefinition comfort_def;
  comfort_def.vocab = v;
  comfort_def.closed_world = false;
  comfort_def.covered_situations = {"0", "1"};
  comfort_def.positives = {compose_bits(*v, "0", "1"), compose_bits(*v, "1", "1")};
  comfort_def.explicit_negatives = {compose_bits(*v, "0", "0")};
  lex.learn("comforted", comfort_def);
  const auto both = interpret(DecisionState::from_assignment(v, "11"), lex);
  CHECK(both == std::vector<std::string>{"comforted", "hurt"});
}

TEST_CASE("convey picks the first on-pattern satisfying response") {
  const auto v = hurt_vocab();
  Lexicon lex(v);
  lex.learn("hurt", hurt_corpus(v));

  // interpretant holds for both responses in situation 1, but only the
  // comfort=1 pattern is a known sign
  CHECK(convey("hurt", "1", lex) == "1");

  CHECK_THROWS_AS(convey("nope", "1", lex), Error);
  try {
    convey("hurt", "0", lex);  // interpretant false everywhere in situation 0
    FAIL("expected no_appropriate_sign");
  } catch (const Error& e) {
    CHECK(e.code() == Err::no_appropriate_sign);
    CHECK(exit_class(e.code()) == 3);
  }
}

TEST_CASE("conveyed signs interpret back to their token") {
  SplitMix64 rng(77);
  const auto v = Vocabulary::split({"s0", "s1"}, {"r0!", "r1"});
  for (int iter = 0; iter < 30; ++iter) {
    Lexicon lex(v);
    for (int k = 0; k < 3; ++k) {
      const auto def = testsupport::random_ostensive_over(rng, v, rng.chance_percent(50));
      lex.learn("tok" + std::to_string(k), def);
    }
    for (const auto& [token, triad] : lex.triads()) {
      for (std::size_t s = 0; s < 4; ++s) {
        const std::string sbits = testsupport::index_to_bits(s, 2);
        try {
          const std::string r = convey(token, sbits, lex);
          const auto tokens = interpret(compose(v, sbits, r), lex);
          CHECK(std::find(tokens.begin(), tokens.end(), token) != tokens.end());
        } catch (const Error& e) {
          CHECK(e.code() == Err::no_appropriate_sign);
        }
      }
    }
  }
}

TEST_CASE("recall returns the referent memory and commit grows it") {
  const auto v = hurt_vocab();
  Lexicon lex(v);
  lex.learn("hurt", hurt_corpus(v));

  const auto memory = recall("hurt", lex);
  CHECK(memory.size() == 2);
  CHECK(memory[0].assignment() == "10");
  CHECK(memory[1].assignment() == "11");
  CHECK_THROWS_AS(recall("missing", lex), Error);

  SymbolTriad fresh = learn_symbol("h2", hurt_corpus(v));
  fresh.referent_memory.clear();
  fresh.sign_patterns.clear();
  fresh.commit(DecisionState::from_assignment(v, "11"));
  CHECK(fresh.referent_memory.size() == 1);
  CHECK(fresh.sign_patterns == std::set<std::string>{"1"});
  fresh.commit(DecisionState::from_assignment(v, "11"));  // idempotent
  CHECK(fresh.referent_memory.size() == 1);
  CHECK_THROWS_AS(fresh.commit(DecisionState::from_assignment(v, "00")), Error);
}

TEST_CASE("bootstrap learns unknown tokens from dialogue") {
  // sensors: ctx | actuators: grip (transmittable)
  const auto v = Vocabulary::split({"ctx"}, {"grip!"});
  Lexicon lex(v);
  std::vector<DialogueRecord> dialogues{
      {compose(v, "0", "1"), {"grasp"}},
      {compose(v, "1", "1"), {"grasp"}},
      {compose(v, "0", "0"), {}},
      {compose(v, "1", "0"), {}},
  };
  const BootstrapResult result = bootstrap(dialogues, lex);
  CHECK(result.unlearnable.empty());
  REQUIRE(result.learned.size() == 1);
  CHECK(result.learned[0].token == "grasp");
  CHECK(result.learned[0].interpretant == Concept(v, {Implicant::cube({{1, true}})}));
  CHECK(result.learned[0].referent_memory.size() == 2);
}

TEST_CASE("bootstrap drops noisy records and reports unlearnable tokens") {
  const auto v = Vocabulary::split({"ctx"}, {"grip!"});
  Lexicon lex(v);
  OstensiveDefinition grip_def;
  grip_def.vocab = v;
  grip_def.closed_world = false;
  grip_def.covered_situations = {"0", "1"};
  grip_def.positives = {compose_bits(*v, "0", "1"), compose_bits(*v, "1", "1")};
  grip_def.explicit_negatives = {compose_bits(*v, "0", "0")};
  lex.learn("grasp", grip_def);

  // the only record mentioning "wave" also misuses "grasp", so it is noise
  std::vector<DialogueRecord> dialogues{
      {compose(v, "0", "0"), {"grasp", "wave"}},
      {compose(v, "1", "1"), {"grasp"}},
  };
  const BootstrapResult result = bootstrap(dialogues, lex);
  CHECK(result.learned.empty());
  REQUIRE(result.unlearnable.size() == 1);
  CHECK(result.unlearnable[0].first == "wave");

  // a corpus with no unknown tokens violates the precondition
  std::vector<DialogueRecord> known_only{{compose(v, "1", "1"), {"grasp"}}};
  CHECK_THROWS_AS(bootstrap(known_only, lex), Error);
}

TEST_CASE("bootstrap equals learning from the label-equivalent ostensive corpus") {
  SplitMix64 rng(55);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t sensors = 1 + rng.below(3);
    const std::size_t actuators = 1 + rng.below(2);
    const auto v = default_vocabulary(sensors, actuators);
    const std::size_t states = std::size_t{1} << v->size();

    std::vector<Bits> sampled;
    for (Bits b = 0; b < states; ++b) {
      if (rng.chance_percent(55)) sampled.push_back(b);
    }
    if (sampled.empty()) sampled.push_back(static_cast<Bits>(rng.below(states)));

    std::vector<DialogueRecord> dialogues;
    OstensiveDefinition equivalent;
    equivalent.vocab = v;
    equivalent.closed_world = false;
    bool any_positive = false;
    for (Bits b : sampled) {
      DecisionState state(v, b);
      const bool annotated = rng.chance_percent(50);
      dialogues.push_back({state, annotated ? std::set<std::string>{"it"}
                                            : std::set<std::string>{}});
      equivalent.covered_situations.insert(state.situation());
      if (annotated) {
        equivalent.positives.insert(b);
        any_positive = true;
      } else {
        equivalent.explicit_negatives.insert(b);
      }
    }
    if (!any_positive) {
      dialogues[0].tokens = {"it"};
      equivalent.explicit_negatives.erase(sampled[0]);
      equivalent.positives.insert(sampled[0]);
    }

    Lexicon empty(v);
    const BootstrapResult result = bootstrap(dialogues, empty);
    REQUIRE(result.learned.size() == 1);
    const SymbolTriad direct = learn_symbol("it", equivalent);
    CHECK(result.learned[0].interpretant == direct.interpretant);
    CHECK(result.learned[0].referent_memory == direct.referent_memory);
    CHECK(result.learned[0].sign_patterns == direct.sign_patterns);
  }
}

TEST_CASE("activation is identical for enacted and observed states") {
  SplitMix64 rng(60);
  const auto v = default_vocabulary(3, 3);
  const Lexicon lex = testsupport::random_lexicon(rng, v, 4);
  for (Bits b = 0; b < (Bits{1} << 6); ++b) {
    const DecisionState d(v, b);
    CHECK(activation(d, lex, Mode::enacted) == activation(d, lex, Mode::observed));
  }
  CHECK(activation(DecisionState(v, 0), Lexicon(v), Mode::enacted).empty());
}

TEST_CASE("two lexicons from the same corpora interpret states identically") {
  SplitMix64 rng_a(123);
  SplitMix64 rng_b(123);
  const auto v = default_vocabulary(2, 2);
  const Lexicon a = testsupport::random_lexicon(rng_a, v, 3);
  const Lexicon b = testsupport::random_lexicon(rng_b, v, 3);
  for (Bits bits = 0; bits < (Bits{1} << 4); ++bits) {
    const DecisionState d(v, bits);
    CHECK(interpret(d, a) == interpret(d, b));
  }
}

TEST_CASE("infer_intent keeps the satisfied implicants of the observer's goals") {
  const auto v = hurt_vocab();
  const Concept goal(v, {Implicant::cube({{0, false}}),
                         Implicant::cube({{0, true}, {1, true}})});

  const auto seen = infer_intent(DecisionState::from_assignment(v, "11"), {goal});
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == Implicant::cube({{0, true}, {1, true}}));

  CHECK(infer_intent(DecisionState::from_assignment(v, "10"), {goal}).empty());

  const auto vacuous = infer_intent(DecisionState::from_assignment(v, "10"),
                                    {Concept::all(v)});
  REQUIRE(vacuous.size() == 1);
  CHECK(vacuous[0].is_true_cube());
}

TEST_CASE("empathise recalls referents and infers the observer's own want") {
  const auto v = hurt_vocab();
  Lexicon lex(v);
  lex.learn("hurt", hurt_corpus(v));
  const Concept goal(v, {Implicant::cube({{0, false}}),
                         Implicant::cube({{0, true}, {1, true}})});

  const auto report = empathise(DecisionState::from_assignment(v, "10"), lex, {goal});
  CHECK(report.active_tokens == std::vector<std::string>{"hurt"});
  REQUIRE(report.recalled.count("hurt"));
  CHECK(report.recalled.at("hurt").size() == 2);
  CHECK(report.attributed_intent.empty());  // hurt with no comfort matches no implicant
  CHECK(report.inferred_want == std::vector<std::string>{"1"});  // it would seek comfort

  // empty lexicon, vacuous goal: everything is wanted, nothing recalled
  Lexicon empty(v);
  const auto bare = empathise(DecisionState::from_assignment(v, "00"), empty,
                              {Concept::all(v)});
  CHECK(bare.active_tokens.empty());
  CHECK(bare.recalled.empty());
  REQUIRE(bare.attributed_intent.size() == 1);
  CHECK(bare.attributed_intent[0].is_true_cube());
  CHECK(bare.inferred_want == std::vector<std::string>{"0", "1"});

  // observing a state identical to a stored memory recalls that memory
  const auto again = empathise(DecisionState::from_assignment(v, "11"), lex, {goal});
  bool found = false;
  for (const DecisionState& d : again.recalled.at("hurt")) {
    if (d.assignment() == "11") found = true;
  }
  CHECK(found);
}

TEST_CASE("referent memories always satisfy their interpretant") {
  SplitMix64 rng(81);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t sensors = 1 + rng.below(3);
    const std::size_t actuators = 1 + rng.below(3);
    const auto v = default_vocabulary(sensors, actuators);
    const Lexicon lex = testsupport::random_lexicon(rng, v, 3);
    for (const auto& [token, triad] : lex.triads()) {
      for (const DecisionState& d : triad.referent_memory) {
        CHECK(triad.interpretant.evaluate(d));
      }
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "logic_oracles.hpp"
#include "si/errors.hpp"
#include "si/logic/parse.hpp"
#include "si/logic/prover.hpp"
#include "si/logic/render.hpp"
#include "si/util/rng.hpp"

using namespace si;
using namespace si::logic;

namespace {

Literal lit(bool pos, const std::string& pred, const Term& subj,
            std::optional<Term> obj = std::nullopt) {
  return Literal{pos, pred, subj, std::move(obj)};
}

Literal parse_literal(const std::string& text) {
  Form f = parse_sentence(text);
  REQUIRE(std::holds_alternative<Literal>(f));
  return std::get<Literal>(f);
}

Rule parse_rule(const std::string& text) {
  Form f = parse_sentence(text);
  REQUIRE(std::holds_alternative<Rule>(f));
  return std::get<Rule>(f);
}

}  // namespace

TEST_CASE("parse: simple facts") {
  Literal l = parse_literal("Bob is cold.");
  CHECK(l == lit(true, "cold", entity("bob")));

  l = parse_literal("the cow does not like the squirrel.");
  CHECK(l == lit(false, "like", entity("cow", true), entity("squirrel", true)));

  l = parse_literal("Erin is not furry.");
  CHECK(l == lit(false, "furry", entity("erin")));

  l = parse_literal("the bald eagle eats the lion.");
  CHECK(l == lit(true, "eat", entity("bald_eagle", true), entity("lion", true)));

  l = parse_literal("emily is a cat");
  CHECK(l == lit(true, "cat", entity("emily")));

  l = parse_literal("emily is afraid of wolves");
  CHECK(l == lit(true, "afraid", entity("emily"), entity("wolves")));

  l = parse_literal("the milk is in the office.");
  CHECK(l == lit(true, "in", entity("milk", true), entity("office", true)));
}

TEST_CASE("parse: rules") {
  Rule r = parse_rule("If something is white and big then it is not kind.");
  REQUIRE(r.conditions.size() == 2);
  CHECK(r.conditions[0] == lit(true, "white", var()));
  CHECK(r.conditions[1] == lit(true, "big", var()));
  CHECK(r.conclusion == lit(false, "kind", var()));
  CHECK(r.style == VarStyle::something);

  r = parse_rule("Nice people are quiet.");
  CHECK(r.surface == RuleSurface::bare_plural);
  CHECK(r.conditions == std::vector<Literal>{lit(true, "nice", var())});
  CHECK(r.conclusion == lit(true, "quiet", var()));
  CHECK(r.style == VarStyle::someone);

  r = parse_rule("All blue things are not cold.");
  CHECK(r.surface == RuleSurface::all_block);
  CHECK(r.conclusion == lit(false, "cold", var()));

  r = parse_rule("All cold, smart things are not furry.");
  REQUIRE(r.conditions.size() == 2);
  CHECK(r.conditions[1].predicate == "smart");

  r = parse_rule("Young, cold things are not furry.");
  CHECK(r.surface == RuleSurface::bare_plural);
  REQUIRE(r.conditions.size() == 2);

  r = parse_rule("If someone is nice then they eat the dog.");
  CHECK(r.conditions == std::vector<Literal>{lit(true, "nice", var())});
  CHECK(r.conclusion == lit(true, "eat", var(), entity("dog", true)));
  CHECK(r.style == VarStyle::someone);

  r = parse_rule("If something likes the squirrel and it is not young then it chases the lion.");
  REQUIRE(r.conditions.size() == 2);
  CHECK(r.conditions[0] == lit(true, "like", var(), entity("squirrel", true)));
  CHECK(r.conditions[1] == lit(false, "young", var()));
  CHECK(r.conclusion == lit(true, "chase", var(), entity("lion", true)));

  r = parse_rule("If something chases the squirrel then the squirrel is big.");
  CHECK(r.conclusion == lit(true, "big", entity("squirrel", true)));

  r = parse_rule("If Gary is white then Gary is not furry.");
  CHECK(r.is_ground());

  r = parse_rule("If something eats the bear and they do not chase the cow then the cow is young.");
  REQUIRE(r.conditions.size() == 2);
  CHECK(r.conditions[1] == lit(false, "chase", var(), entity("cow", true)));

  r = parse_rule("If someone sees the lion and the lion chases the dog then the lion is nice.");
  REQUIRE(r.conditions.size() == 2);
  CHECK(r.conditions[1].subject == entity("lion", true));

  r = parse_rule("cats are afraid of wolves");
  CHECK(r.surface == RuleSurface::species_fear);
  CHECK(r.conditions == std::vector<Literal>{lit(true, "cat", var())});
  CHECK(r.conclusion == lit(true, "afraid", var(), entity("wolves")));

  r = parse_rule("lions are often white");
  CHECK(r.surface == RuleSurface::species_often);
  CHECK(r.conclusion == lit(true, "white", var()));
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(parse_sentence(""), UnparsableSentence);
  CHECK_THROWS_AS(parse_sentence("   "), UnparsableSentence);
  CHECK_THROWS_AS(parse_sentence("at t=0 sandra went to the office"), UnparsableSentence);
  CHECK_THROWS_AS(parse_sentence("If something is quiet."), UnparsableSentence);
  CHECK_THROWS_AS(parse_sentence("colorless green ideas sleep furiously"), UnparsableSentence);
  // pronoun without an introducing marker
  CHECK_THROWS_AS(parse_sentence("If the cow is big then it is red."), UnparsableSentence);
  // marker first introduced in the conclusion
  CHECK_THROWS_AS(parse_sentence("If the cow is big then something is red."), UnparsableSentence);
}

TEST_CASE("render: examples") {
  CHECK(render(lit(true, "cold", entity("bob"))) == "Bob is cold.");
  CHECK(render(lit(false, "kind", entity("squirrel", true))) == "The squirrel is not kind.");
  CHECK(render(lit(false, "like", entity("cow", true), entity("squirrel", true))) ==
        "The cow does not like the squirrel.");

  Rule r;
  r.conditions = {lit(true, "nice", var())};
  r.conclusion = lit(true, "quiet", var());
  r.surface = RuleSurface::if_then;
  r.style = VarStyle::someone;
  CHECK(render(r) == "If someone is nice then they are quiet.");

  r.style = VarStyle::something;
  CHECK(render(r) == "If something is nice then it is quiet.");

  r.conditions = {lit(true, "white", var()), lit(true, "big", var())};
  r.conclusion = lit(false, "kind", var());
  CHECK(render(r) == "If something is white and big then it is not kind.");

  r.surface = RuleSurface::all_block;
  r.conditions = {lit(true, "quiet", var())};
  r.conclusion = lit(true, "cold", var());
  CHECK(render(r) == "All quiet things are cold.");

  r.surface = RuleSurface::bare_plural;
  r.style = VarStyle::someone;
  r.conditions = {lit(true, "red", var()), lit(true, "big", var())};
  r.conclusion = lit(true, "nice", var());
  CHECK(render(r) == "Red, big people are nice.");

  r.surface = RuleSurface::species_fear;
  r.style = VarStyle::something;
  r.conditions = {lit(true, "cat", var())};
  r.conclusion = lit(true, "afraid", var(), entity("wolves"));
  CHECK(render(r) == "Cats are afraid of wolves.");

  r.surface = RuleSurface::species_often;
  r.conditions = {lit(true, "lion", var())};
  r.conclusion = lit(true, "white", var());
  CHECK(render(r) == "Lions are often white.");

  CHECK(render_statement(lit(false, "furry", entity("erin"))) == "Erin is not furry");
}

TEST_CASE("round trip: paper sentence inventory") {
  const std::vector<std::string> sentences = {
      "Bob is cold.",
      "Erin is not white.",
      "Gary is not smart.",
      "The bear is round.",
      "The cow does not like the squirrel.",
      "The bald eagle eats the lion.",
      "The squirrel likes the bald eagle.",
      "Big things are cold.",
      "Round things are big.",
      "Nice people are quiet.",
      "Red things are kind.",
      "Young people are nice.",
      "All blue things are not cold.",
      "All quiet things are cold.",
      "All white people are smart.",
      "All kind things are round.",
      "All cold, smart things are not furry.",
      "Young, cold things are not furry.",
      "Round, red people are white.",
      "If something is quiet and blue then it is not cold.",
      "If something is big and rough then it is round.",
      "If something is cold and not rough then it is blue.",
      "If something is quiet and not furry then it is not blue.",
      "If something is white and smart then it is furry.",
      "If Gary is white then Gary is not furry.",
      "If Erin is young then Erin is furry.",
      "If Gary is not young then Gary is smart.",
      "If Erin is cold then Erin is young.",
      "If someone is red then they are nice.",
      "If someone is kind and red then they are white.",
      "If someone is nice then they are kind.",
      "If someone chases the cow then they eat the cow.",
      "If someone is big then they chase the cow.",
      "If someone needs the bald eagle then the bald eagle is big.",
      "If the bear is nice and the bear needs the cow then the bear eats the lion.",
      "If someone needs the lion and they eat the bald eagle then they are blue.",
      "If someone eats the bear and they do not chase the cow then the cow is young.",
      "If something likes the squirrel and it is not young then it chases the lion.",
      "If something likes the squirrel then it is rough.",
      "If something eats the lion then it is young.",
      "If something likes the rabbit then it chases the rabbit.",
      "All rough things are nice.",
      "The rabbit is young.",
      "The lion likes the squirrel.",
      "If someone is cold then they eat the lion.",
      "If someone is blue and they chase the dog then the dog chases the lion.",
      "If someone eats the dog then the dog is young.",
      "If someone is nice then they eat the dog.",
      "If the lion sees the dog and the dog sees the lion then the dog is nice.",
      "The lion sees the dog.",
      "If something chases the squirrel then the squirrel is big.",
      "If something is big then it is not kind.",
      "The cow chases the squirrel.",
      "Rough things are white.",
      "If Erin is smart and Erin is rough then Erin is white.",
      "If something is round then it is rough.",
      "All quiet people are young.",
      "If something eats the bald eagle then it eats the squirrel.",
      "If something eats the squirrel then the squirrel does not eat the bald eagle.",
      "If the bald eagle is not red then the bald eagle likes the squirrel.",
      "If something likes the bald eagle then the bald eagle is young.",
      "The squirrel visits the bald eagle.",
  };
  for (const auto& s : sentences) {
    CAPTURE(s);
    Form f = parse_sentence(s);
    CHECK(render(f) == s);
  }
}

TEST_CASE("round trip: random forms") {
  Rng rng(2024);
  for (int iter = 0; iter < 400; ++iter) {
    auto th = si::testing::random_theory(rng);
    for (const auto& text : th.texts) {
      CAPTURE(text);
      Form f = parse_sentence(text);
      CHECK(render(f) == text);
      CHECK(parse_sentence(render(f)) == f);
    }
  }
}

TEST_CASE("negate") {
  Literal l = lit(true, "nice", entity("bob"));
  CHECK(negate(l) == lit(false, "nice", entity("bob")));
  Literal e = lit(false, "eat", entity("squirrel", true), entity("bald_eagle", true));
  CHECK(negate(e) == lit(true, "eat", entity("squirrel", true), entity("bald_eagle", true)));
  CHECK(negate(negate(e)) == e);
  Literal v = lit(true, "nice", var());
  CHECK_THROWS_AS(negate(v), NonGroundLiteral);
}

TEST_CASE("single_step_entail: examples") {
  Rule r = parse_rule("If someone is nice then they eat the dog.");
  Literal fact = parse_literal("The dog is nice.");
  Literal out = single_step_entail(r, {fact});
  CHECK(render(out) == "The dog eats the dog.");

  r = parse_rule("Nice people are quiet.");
  fact = parse_literal("Dave is nice.");
  CHECK(render(single_step_entail(r, {fact})) == "Dave is quiet.");

  r = parse_rule("If something is white and big then it is not kind.");
  Literal f1 = parse_literal("Anne is white.");
  Literal f2 = parse_literal("Anne is big.");
  CHECK(render(single_step_entail(r, {f1, f2})) == "Anne is not kind.");

  // inconsistent binding across the two conditions
  Literal f3 = parse_literal("Bob is big.");
  CHECK_THROWS_AS(single_step_entail(r, {f1, f3}), NoMatch);

  r = parse_rule("If someone chases the cow then they eat the cow.");
  Literal cat = parse_literal("The cat sees the mouse.");
  CHECK_THROWS_AS(single_step_entail(r, {cat}), NoMatch);
  CHECK_THROWS_AS(single_step_entail(r, {}), ArityMismatch);

  r = parse_rule("cats are afraid of wolves");
  fact = parse_literal("emily is a cat");
  CHECK(single_step_entail(r, {fact}) == lit(true, "afraid", entity("emily"), entity("wolves")));
}

TEST_CASE("closure: chained derivation depths") {
  Theory th = Theory::from_texts({
      "If someone is red then they are nice.",
      "If someone is nice then they are kind.",
      "If someone is kind and red then they are white.",
      "Fiona is red.",
  });
  ClosureResult cl = closure(th);
  auto depth_of = [&](const Literal& l) {
    auto idx = cl.find(l);
    REQUIRE(idx.has_value());
    return cl.facts()[*idx].depth;
  };
  CHECK(depth_of(lit(true, "red", entity("fiona"))) == 0);
  CHECK(depth_of(lit(true, "nice", entity("fiona"))) == 1);
  CHECK(depth_of(lit(true, "kind", entity("fiona"))) == 2);
  CHECK(depth_of(lit(true, "white", entity("fiona"))) == 3);

  SUBCASE("max_depth 0 keeps only the stated facts") {
    ClosureResult cl0 = closure(th, 0);
    CHECK(cl0.facts().size() == 1);
    CHECK(cl0.facts()[0].literal == lit(true, "red", entity("fiona")));
  }
}

TEST_CASE("closure: empty theory and monotonicity") {
  Theory empty = Theory::from_texts({});
  CHECK(closure(empty).facts().empty());

  Rng rng(77);
  for (int iter = 0; iter < 60; ++iter) {
    auto random = si::testing::random_theory(rng);
    Theory base = Theory::from_texts(random.texts);
    auto extended_texts = random.texts;
    extended_texts.push_back(render(random.probes[0]));
    Theory extended = Theory::from_texts(extended_texts);
    ClosureResult small = closure(base, 64);
    ClosureResult big = closure(extended, 64);
    for (const auto& f : small.facts()) {
      CAPTURE(render(f.literal));
      CHECK(big.contains(f.literal));
    }
  }
}

TEST_CASE("closure: equals brute-force saturation on random theories") {
  Rng rng(123);
  for (int iter = 0; iter < 200; ++iter) {
    auto random = si::testing::random_theory(rng);
    Theory th = Theory::from_texts(random.texts);
    auto brute = si::testing::brute_force_saturate(th);
    ClosureResult cl = closure(th, 256);
    std::set<Literal> mine;
    for (const auto& f : cl.facts()) mine.insert(f.literal);
    CHECK(mine == brute);
  }
}

TEST_CASE("closure: negative conditions need explicit negative literals") {
  // Open world: "not rough" is not satisfied by silence.
  Theory th = Theory::from_texts({
      "If something is cold and not rough then it is blue.",
      "Bob is cold.",
  });
  CHECK_FALSE(closure(th).contains(lit(true, "blue", entity("bob"))));

  Theory th2 = Theory::from_texts({
      "If something is cold and not rough then it is blue.",
      "Bob is cold.",
      "Bob is not rough.",
  });
  CHECK(closure(th2).contains(lit(true, "blue", entity("bob"))));
}

TEST_CASE("prove: examples") {
  Theory th = Theory::from_texts({
      "If someone is red then they are nice.",
      "If someone is nice then they are kind.",
      "If someone is kind and red then they are white.",
      "Fiona is red.",
  });

  SUBCASE("negative statement disproved by deriving the positive") {
    ProveResult r = prove(th, lit(false, "white", entity("fiona")));
    CHECK(r.label == Label::False);
    REQUIRE(r.proof.has_value());
    REQUIRE(r.proof->steps.size() == 3);
    CHECK(r.proof->steps[0].conclusion_text == "Fiona is nice.");
    CHECK(r.proof->steps[1].conclusion_text == "Fiona is kind.");
    CHECK(r.proof->steps[2].conclusion_text == "Fiona is white.");
    CHECK(r.proof->depth() == 3);
    CHECK(r.proof->steps[0].premise_labels == std::vector<std::string>{"sent 1", "sent 4"});
    CHECK(r.proof->steps[1].premise_labels == std::vector<std::string>{"sent 2", "sent 5"});
    CHECK(r.proof->steps[2].premise_labels == std::vector<std::string>{"sent 3", "sent 6", "sent 4"});
  }

  SUBCASE("stated fact proves at depth 0 with an empty proof") {
    ProveResult r = prove(th, lit(true, "red", entity("fiona")));
    CHECK(r.label == Label::True);
    REQUIRE(r.proof.has_value());
    CHECK(r.proof->steps.empty());
    CHECK(r.proof->depth() == 0);
  }

  SUBCASE("entity never mentioned is Unknown") {
    ProveResult r = prove(th, lit(true, "white", entity("zeke")));
    CHECK(r.label == Label::Unknown);
    CHECK_FALSE(r.proof.has_value());
    auto brute = si::testing::brute_force_saturate(th);
    CHECK(si::testing::brute_force_label(brute, lit(true, "white", entity("zeke"))) ==
          Label::Unknown);
  }

  SUBCASE("contradictory theory is reported") {
    Theory bad = Theory::from_texts({
        "If someone is red then they are nice.",
        "If someone is red then they are not nice.",
        "Fiona is red.",
    });
    CHECK_THROWS_AS(prove(bad, lit(true, "nice", entity("fiona"))), ContradictoryTheory);
  }
}

TEST_CASE("prove: agrees with brute force on random theories") {
  Rng rng(5150);
  int contradictions = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto random = si::testing::random_theory(rng);
    Theory th = Theory::from_texts(random.texts);
    auto brute = si::testing::brute_force_saturate(th);
    for (const auto& probe : random.probes) {
      bool contra = false;
      Label expected = si::testing::brute_force_label(brute, probe, &contra);
      if (contra) {
        ++contradictions;
        CHECK_THROWS_AS(prove(th, probe, 256), ContradictoryTheory);
        continue;
      }
      ProveResult r = prove(th, probe, 256);
      CAPTURE(render(probe));
      CHECK(r.label == expected);
    }
  }
  // the generator should produce some contradictions so this path is exercised
  CHECK(contradictions > 0);
}

TEST_CASE("prove: proofs replay through single_step_entail and are minimal") {
  Rng rng(31337);
  int proofs_checked = 0;
  for (int iter = 0; iter < 150; ++iter) {
    auto random = si::testing::random_theory(rng);
    Theory th = Theory::from_texts(random.texts);
    ClosureResult cl = closure(th, 256);
    for (const auto& probe : random.probes) {
      ProveResult r;
      try {
        r = prove(th, probe, 256);
      } catch (const ContradictoryTheory&) {
        continue;
      }
      if (r.label == Label::Unknown) continue;
      Literal target = r.label == Label::True ? probe : negate(probe);
      // replay: every step must be entailed by its premises
      std::map<std::string, Form> by_label;
      for (const auto& s : th.sentences()) by_label[s.label] = s.form;
      int ext = th.context_size();
      for (const auto& step : r.proof->steps) {
        REQUIRE(by_label.count(step.premise_labels[0]) == 1);
        Rule rule = std::get<Rule>(by_label.at(step.premise_labels[0]));
        std::vector<Literal> facts;
        for (size_t i = 1; i < step.premise_labels.size(); ++i)
          facts.push_back(std::get<Literal>(by_label.at(step.premise_labels[i])));
        Literal concl = single_step_entail(rule, facts);
        CHECK(concl == step.conclusion);
        by_label["sent " + std::to_string(++ext)] = concl;
        ++proofs_checked;
      }
      if (!r.proof->steps.empty()) {
        CHECK(r.proof->steps.back().conclusion == target);
        auto idx = cl.find(target);
        REQUIRE(idx.has_value());
        CHECK(r.proof->depth() == cl.facts()[*idx].depth);
      }
    }
  }
  CHECK(proofs_checked > 100);
}

TEST_CASE("next_proofwriter_step walks the gold chain") {
  std::vector<std::string> texts = {
      "If someone is red then they are nice.",
      "If someone is nice then they are kind.",
      "If someone is kind and red then they are white.",
      "Fiona is red.",
  };
  Literal statement = lit(false, "white", entity("fiona"));
  auto step1 = next_proofwriter_step(Theory::from_texts(texts), statement);
  REQUIRE(step1.has_value());
  CHECK(step1->rule_context_index == 0);
  CHECK(step1->fact_context_indices == std::vector<int>{3});
  CHECK(step1->conclusion_text == "Fiona is nice.");

  texts.push_back(step1->conclusion_text);
  auto step2 = next_proofwriter_step(Theory::from_texts(texts), statement);
  REQUIRE(step2.has_value());
  CHECK(step2->rule_context_index == 1);
  CHECK(step2->conclusion_text == "Fiona is kind.");

  texts.push_back(step2->conclusion_text);
  auto step3 = next_proofwriter_step(Theory::from_texts(texts), statement);
  REQUIRE(step3.has_value());
  CHECK(step3->rule_context_index == 2);
  CHECK(step3->conclusion_text == "Fiona is white.");

  texts.push_back(step3->conclusion_text);
  auto done = next_proofwriter_step(Theory::from_texts(texts), statement);
  REQUIRE(done.has_value());
  CHECK(done->restatement);
  CHECK(done->conclusion_text == "Fiona is white.");

  auto unknown = next_proofwriter_step(Theory::from_texts({"Bob is cold."}),
                                       lit(true, "white", entity("zeke")));
  CHECK_FALSE(unknown.has_value());
}

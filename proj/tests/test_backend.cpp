#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "si/backend/oracle.hpp"
#include "si/backend/replay.hpp"
#include "si/engine/engine.hpp"
#include "si/errors.hpp"
#include "si/prompting/template.hpp"
#include "si/taskgen/generate.hpp"
#include "si/util/text.hpp"

using namespace si;
using namespace si::backend;

namespace {

// The babi-15 worked example used throughout the trace listings.
const std::vector<std::string> kFearContext = {
    "wolves are afraid of mice", "sheep are afraid of mice", "winona is a sheep",
    "mice are afraid of cats",   "cats are afraid of wolves", "jessica is a mouse",
    "emily is a cat",            "gertrude is a wolf"};

prompting::TemplateSet babi15_templates() {
  return prompting::load_templates(prompting::default_prompts_dir(), "babi15");
}

}  // namespace

TEST_CASE("replay: fixture echo, token counts and misses") {
  ReplayBackend b;
  b.add_score("p", "a", {-1.5});
  b.add_score("p", " two words", {-0.25, -0.25});
  b.add_generation("g", " hello there.");

  auto r = b.score({"p", "a"});
  CHECK(r.logprob == doctest::Approx(-1.5));
  CHECK(r.token_count == 1);
  r = b.score({"p", " two words"});
  CHECK(r.logprob == doctest::Approx(-0.5));
  CHECK(r.token_count == 2);
  CHECK(b.generate({"g", 16, {}}) == " hello there.");

  CHECK_THROWS_AS(b.score({"p", "unseen"}), FixtureMiss);
  CHECK_THROWS_AS(b.generate({"unseen", 16, {}}), FixtureMiss);
  // token logprobs must align with whitespace tokens
  CHECK_THROWS_AS(b.add_score("p", "two words", {-1.0}), Error);
}

TEST_CASE("replay: json round trip") {
  ReplayBackend b;
  b.add_score("p", "a", {-1.0});
  b.add_generation("g", "text");
  auto j = b.to_json();
  ReplayBackend c = ReplayBackend::from_json(j);
  CHECK(c.score({"p", "a"}).logprob == doctest::Approx(-1.0));
  CHECK(c.generate({"g", 8, {}}) == "text");
  CHECK(c.to_json() == j);
}

TEST_CASE("oracle: scores the gold next selection element") {
  auto tmpls = babi15_templates();
  OracleBackend oracle("babi15");
  std::string question = "what is emily afraid of?";
  std::string prefix =
      prompting::build_selection(tmpls.selection, 5, kFearContext, question, "", "");

  // head slot: the instance fact wins, everything else loses
  auto gold = oracle.score({prefix, engine::selection_delta(0, "emily is a cat")});
  CHECK(gold.logprob == OracleBackend::kGoldScore);
  auto bad = oracle.score({prefix, engine::selection_delta(0, "wolves are afraid of mice")});
  CHECK(bad.logprob == OracleBackend::kOtherScore);
  auto bad2 = oracle.score({prefix, engine::selection_delta(0, "gertrude is a wolf")});
  CHECK(bad2.logprob == OracleBackend::kOtherScore);

  // second slot: the species rule wins; the sentinel is not yet gold
  std::string partial = engine::selection_join("", 0, "emily is a cat");
  std::string prefix2 =
      prompting::build_selection(tmpls.selection, 5, kFearContext, question, "", partial);
  CHECK(oracle.score({prefix2, engine::selection_delta(1, "cats are afraid of wolves")}).logprob ==
        OracleBackend::kGoldScore);
  CHECK(oracle.score({prefix2, engine::selection_delta(1, "mice are afraid of cats")}).logprob ==
        OracleBackend::kOtherScore);
  CHECK(oracle.score({prefix2, engine::kSentinel}).logprob == OracleBackend::kOtherScore);

  // selection complete: only the sentinel is gold
  std::string partial2 = engine::selection_join(partial, 1, "cats are afraid of wolves");
  std::string prefix3 =
      prompting::build_selection(tmpls.selection, 5, kFearContext, question, "", partial2);
  CHECK(oracle.score({prefix3, engine::kSentinel}).logprob == OracleBackend::kGoldScore);
  CHECK(oracle.score({prefix3, engine::selection_delta(2, "winona is a sheep")}).logprob ==
        OracleBackend::kOtherScore);
}

TEST_CASE("oracle: generates the entailed fact for a selection") {
  auto tmpls = babi15_templates();
  OracleBackend oracle("babi15");
  std::string prompt = prompting::build_inference(
      tmpls.inference, 5, "emily is a cat. We know that cats are afraid of wolves");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " emily is afraid of wolves.");
}

TEST_CASE("oracle: proofwriter entailment and restatement") {
  OracleBackend oracle("proofwriter");
  auto tmpls = prompting::load_templates(prompting::default_prompts_dir(), "proofwriter");

  std::string prompt = prompting::build_inference(
      tmpls.inference, 2, "Nice people are quiet. We know that Gina is nice");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " Gina is quiet.");

  prompt = prompting::build_inference(tmpls.inference, 0, "Gina is cold");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " Gina is cold.");

  prompt = prompting::build_inference(tmpls.inference, 0,
                                      "Nice people are quiet. We know that Gina is rough");
  CHECK_THROWS_AS(oracle.generate({prompt, 64, {"\n"}}), OracleNoMatch);

  // not an inference prompt at all
  CHECK_THROWS_AS(oracle.generate({"what is this", 64, {}}), OracleNoMatch);
}

TEST_CASE("oracle: babi16 induction forms") {
  OracleBackend oracle("babi16");
  auto tmpls = prompting::load_templates(prompting::default_prompts_dir(), "babi16");
  std::string prompt = prompting::build_inference(
      tmpls.inference, 5, "alfred is a lion. We know that betty is a lion and betty is yellow");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " alfred is yellow.");

  // two facts about one instance induce a rule
  prompt = prompting::build_inference(tmpls.inference, 5,
                                      "betty is a lion. We know that betty is yellow");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " lions are often yellow.");

  // applying the induced rule
  prompt = prompting::build_inference(tmpls.inference, 5,
                                      "lions are often yellow. We know that alfred is a lion");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " alfred is yellow.");
}

TEST_CASE("oracle: location events") {
  OracleBackend oracle("babi2");
  auto tmpls = prompting::load_templates(prompting::default_prompts_dir(), "babi2");
  std::string prompt = prompting::build_inference(
      tmpls.inference, 5,
      "at t=2 sandra got the milk there. We know that at t=0 sandra went to the office");
  CHECK(oracle.generate({prompt, 64, {"\n"}}) == " the milk is in the office.");

  OracleBackend oracle1("babi1");
  auto tmpls1 = prompting::load_templates(prompting::default_prompts_dir(), "babi1");
  prompt = prompting::build_inference(tmpls1.inference, 5, "at t=3 sandra went to the garden");
  CHECK(oracle1.generate({prompt, 64, {"\n"}}) == " sandra is in the garden.");
}

TEST_CASE("oracle argmax property: gold strictly exceeds every other candidate") {
  auto tmpls = prompting::load_templates(prompting::default_prompts_dir(), "proofwriter");
  auto problems = taskgen::gen_proofwriter(2, 77, 10);
  OracleBackend oracle("proofwriter");
  for (const auto& p : problems) {
    std::string statement = taskgen::quoted_statement_text(p.question).value();
    std::string prefix =
        prompting::build_selection(tmpls.selection, 5, p.context, p.question, statement, "");
    REQUIRE(p.gold_proof.has_value());
    // locate the gold head (the rule of step 1)
    auto ws = split_ws(p.gold_proof->at(0).premises[0]);
    int gold_idx = std::stoi(ws[1]) - 1;
    double gold_score =
        oracle.score({prefix, engine::selection_delta(0, p.context[gold_idx])}).logprob;
    for (size_t i = 0; i < p.context.size(); ++i) {
      if (static_cast<int>(i) == gold_idx) continue;
      double other = oracle.score({prefix, engine::selection_delta(0, p.context[i])}).logprob;
      CHECK(gold_score > other);
    }
  }
}

TEST_CASE("split_selection_frame") {
  auto parts = split_selection_frame(
      "If something is white and big then it is not kind. We know that Anne is white and Anne is "
      "big");
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == "If something is white and big then it is not kind");
  CHECK(parts[1] == "Anne is white");
  CHECK(parts[2] == "Anne is big");

  parts = split_selection_frame("Gina is cold");
  REQUIRE(parts.size() == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "si/backend/oracle.hpp"
#include "si/errors.hpp"
#include "si/logic/parse.hpp"
#include "si/logic/prover.hpp"
#include "si/logic/render.hpp"
#include "si/prompting/template.hpp"
#include "si/taskgen/generate.hpp"
#include "si/util/text.hpp"

using namespace si;
using namespace si::prompting;

namespace {

std::string prompts_dir() { return default_prompts_dir(); }

std::vector<std::string> lines_of(const std::string& block) {
  std::vector<std::string> out;
  for (auto& l : split_lines(block))
    if (!trim(l).empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("templates load for every family and task") {
  for (const std::string task : {"proofwriter", "babi1", "babi2", "babi3", "babi15", "babi16"}) {
    CAPTURE(task);
    TemplateSet set = load_templates(prompts_dir(), task);
    CHECK(set.vanilla.family == "vanilla");
    CHECK(set.cot.family == "cot");
    CHECK(set.selection.family == "selection");
    CHECK(set.inference.family == "inference");
    CHECK(set.vanilla.exemplars.size() >= 5);
    CHECK(set.cot.exemplars.size() >= 5);
    CHECK(set.selection.exemplars.size() >= 5);
    CHECK(set.inference.exemplars.size() >= 5);
    CHECK(set.vanilla.task == task);
  }
}

TEST_CASE("build_vanilla: block structure") {
  TemplateSet set = load_templates(prompts_dir(), "proofwriter");
  std::vector<std::string> context = {"Gina is cold.", "Cold people are quiet."};
  std::string prompt = build_vanilla(set.vanilla, 2, context, "", "Gina is quiet");
  CHECK(ends_with(prompt, "Based on the above, the statement \"Gina is quiet\" is"));
  // exemplar answers present
  CHECK(prompt.find("\"Charlie is cold\" is true.") != std::string::npos);
  CHECK(prompt.find("\"Erin is not furry\" is false.") != std::string::npos);
  // one blank line between blocks
  CHECK(prompt.find("\n\n\n") == std::string::npos);

  std::string zero = build_vanilla(set.vanilla, 0, context, "", "Gina is quiet");
  CHECK(zero.find("Charlie") == std::string::npos);
  CHECK(ends_with(zero, "\"Gina is quiet\" is"));

  CHECK_THROWS_AS(build_vanilla(set.cot, 1, context, "", ""), TemplateMismatch);
  CHECK_THROWS_AS(build_vanilla(set.vanilla, 99, context, "", ""), TemplateMismatch);
}

TEST_CASE("build_vanilla: babi answer cue") {
  TemplateSet set = load_templates(prompts_dir(), "babi1");
  std::string prompt = build_vanilla(set.vanilla, 1, {"at t=0 sandra went to the office"},
                                     "where is sandra?", "");
  CHECK(ends_with(prompt, "Answer:"));
  CHECK(prompt.find("Answer: office") != std::string::npos);  // exemplar block
}

TEST_CASE("build_cot: ends at the reason cue; exemplars carry full traces") {
  TemplateSet set = load_templates(prompts_dir(), "proofwriter");
  std::string prompt = build_cot(set.cot, 5, {"Gina is cold."},
                                 "Does it imply that the statement \"Gina is cold\" is True?", "");
  CHECK(ends_with(prompt, "Reasoning:"));
  CHECK(prompt.find("Therefore, Fiona is white.") != std::string::npos);

  TemplateSet babi2 = load_templates(prompts_dir(), "babi2");
  std::string b = build_cot(babi2.cot, 1, {"at t=0 x"}, "where is the apple?", "");
  CHECK(ends_with(b, "Reason:"));
  CHECK(b.find("at t=1 daniel got the apple there. We know that at t=4 daniel went to the "
               "bedroom. Therefore, the apple is in the bedroom") != std::string::npos);
}

TEST_CASE("build_selection: partial accumulation and verbatim context") {
  TemplateSet set = load_templates(prompts_dir(), "proofwriter");
  std::vector<std::string> context = {"Gina is cold.", "Cold people are quiet.",
                                      "Hugo is round."};
  std::string question = "Does it imply that the statement \"Gina is quiet\" is True?";
  std::string empty = build_selection(set.selection, 3, context, question, "Gina is quiet", "");
  CHECK(ends_with(empty, "Reasoning:"));

  std::string partial =
      build_selection(set.selection, 3, context, question, "Gina is quiet", "Cold people are quiet");
  CHECK(ends_with(partial, "Reasoning: Cold people are quiet"));

  // every context sentence appears exactly once in the final block
  std::string final_block = empty.substr(empty.rfind("\n\n") + 2);
  auto block_lines = lines_of(final_block);
  for (const auto& sentence : context) {
    CAPTURE(sentence);
    CHECK(std::count(block_lines.begin(), block_lines.end(), sentence) == 1);
  }
}

TEST_CASE("build_inference: join and trailing cue") {
  TemplateSet set = load_templates(prompts_dir(), "proofwriter");
  std::string prompt =
      build_inference(set.inference, 5, "Nice people are quiet. We know that Dave is nice");
  CHECK(ends_with(prompt, "Nice people are quiet. We know that Dave is nice. Therefore,"));
  // exemplar line with conclusion
  CHECK(prompt.find("Nice people are quiet. We know that Dave is nice. Therefore, Dave is quiet.") !=
        std::string::npos);
  CHECK_THROWS_AS(build_inference(set.inference, 1, ""), TemplateMismatch);
}

TEST_CASE("prompt determinism") {
  TemplateSet set = load_templates(prompts_dir(), "babi15");
  std::vector<std::string> ctx = {"lucy is a cat", "cats are afraid of wolves"};
  std::string a = build_selection(set.selection, 5, ctx, "what is lucy afraid of?", "", "");
  std::string b = build_selection(set.selection, 5, ctx, "what is lucy afraid of?", "", "");
  CHECK(a == b);
}

TEST_CASE("proofwriter exemplars are logically valid") {
  TemplateSet set = load_templates(prompts_dir(), "proofwriter");
  // vanilla: the stated answer matches the prover's verdict
  for (const auto& e : set.vanilla.exemplars) {
    CAPTURE(e.statement);
    auto theory = logic::Theory::from_texts(split_lines(e.context));
    auto form = logic::parse_sentence(e.statement);
    REQUIRE(std::holds_alternative<logic::Literal>(form));
    auto res = logic::prove(theory, std::get<logic::Literal>(form));
    REQUIRE(res.label != logic::Label::Unknown);
    CHECK((res.label == logic::Label::True ? "true" : "false") == e.answer);
  }
  // cot: every reasoning line replays through single-step entailment
  for (const auto& e : set.cot.exemplars) {
    for (const auto& line : split_lines(e.reasoning)) {
      CAPTURE(line);
      size_t cut = line.rfind(". Therefore, ");
      REQUIRE(cut != std::string::npos);
      auto premises = backend::split_selection_frame(line.substr(0, cut));
      std::string conclusion = line.substr(cut + 13);
      std::optional<logic::Rule> rule;
      std::vector<logic::Literal> facts;
      for (const auto& p : premises) {
        auto f = logic::parse_sentence(p);
        if (std::holds_alternative<logic::Rule>(f)) rule = std::get<logic::Rule>(f);
        else facts.push_back(std::get<logic::Literal>(f));
      }
      REQUIRE(rule.has_value());
      CHECK(logic::render(logic::single_step_entail(*rule, facts)) == conclusion);
    }
  }
  // selection: the selected sentences are verbatim members of the context
  for (const auto& e : set.selection.exemplars) {
    std::string sel = e.selection;
    if (ends_with(sel, ". Therefore,")) sel = sel.substr(0, sel.size() - 12);
    auto lines = split_lines(e.context);
    for (const auto& piece : backend::split_selection_frame(sel)) {
      CAPTURE(piece);
      bool found = false;
      for (const auto& line : lines) found = found || strip_period(line) == piece;
      CHECK(found);
    }
  }
  // inference: the target follows from the selection
  for (const auto& e : set.inference.exemplars) {
    CAPTURE(e.selection);
    std::optional<logic::Rule> rule;
    std::vector<logic::Literal> facts;
    for (const auto& p : backend::split_selection_frame(e.selection)) {
      auto f = logic::parse_sentence(p);
      if (std::holds_alternative<logic::Rule>(f)) rule = std::get<logic::Rule>(f);
      else facts.push_back(std::get<logic::Literal>(f));
    }
    REQUIRE(rule.has_value());
    CHECK(logic::render(logic::single_step_entail(*rule, facts)) == e.answer);
  }
}

TEST_CASE("no leakage: generated gold strings never appear in exemplar sections") {
  for (const std::string task : {"proofwriter", "babi2", "babi15", "babi16"}) {
    CAPTURE(task);
    TemplateSet set = load_templates(prompts_dir(), task);
    auto problems = taskgen::generate(task, 2, 404, 25);
    // the exemplar section is everything before the final block
    std::vector<std::string> dummy_ctx = {"placeholder"};
    std::string prompt = build_selection(set.selection, 5, dummy_ctx, "q", "", "");
    std::string exemplar_section = prompt.substr(0, prompt.rfind("\n\n"));
    for (const auto& p : problems) {
      REQUIRE(p.gold_proof.has_value());
      for (const auto& step : *p.gold_proof) {
        CAPTURE(step.conclusion);
        CHECK(exemplar_section.find(step.conclusion) == std::string::npos);
      }
    }
  }
}

TEST_CASE("template parse errors") {
  CHECK_THROWS_AS(PromptTemplate::parse("@family x\ntext outside\n", "t"), TemplateMismatch);
  CHECK_THROWS_AS(PromptTemplate::parse("@bogus\n", "t"), TemplateMismatch);
  CHECK_THROWS_AS(PromptTemplate::parse("@family x\n", "t"), TemplateMismatch);
}

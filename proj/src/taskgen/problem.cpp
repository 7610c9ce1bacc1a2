#include "si/taskgen/problem.hpp"

#include "si/errors.hpp"
#include "si/logic/parse.hpp"
#include "si/util/text.hpp"

namespace si::taskgen {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json Problem::to_json() const {
  ordered_json j;
  j["id"] = id;
  j["task"] = task;
  j["context"] = context;
  j["question"] = question;
  if (!choices.empty()) j["choices"] = choices;
  j["gold_answer"] = gold_answer;
  if (gold_label) j["gold_label"] = logic::to_string(*gold_label);
  if (gold_proof) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : *gold_proof) {
      ordered_json step;
      step["premises"] = s.premises;
      step["conclusion"] = s.conclusion;
      steps.push_back(std::move(step));
    }
    j["gold_proof"] = std::move(steps);
  }
  j["depth"] = depth;
  return j;
}

Problem Problem::from_json(const json& j) {
  Problem p;
  p.id = j.at("id").get<std::string>();
  p.task = j.at("task").get<std::string>();
  p.context = j.at("context").get<std::vector<std::string>>();
  p.question = j.at("question").get<std::string>();
  if (j.contains("choices")) p.choices = j.at("choices").get<std::vector<std::string>>();
  p.gold_answer = j.at("gold_answer").get<std::string>();
  if (j.contains("gold_label"))
    p.gold_label = logic::label_from_string(j.at("gold_label").get<std::string>());
  if (j.contains("gold_proof")) {
    std::vector<GoldStep> steps;
    for (const auto& sj : j.at("gold_proof")) {
      GoldStep s;
      s.premises = sj.at("premises").get<std::vector<std::string>>();
      s.conclusion = sj.at("conclusion").get<std::string>();
      steps.push_back(std::move(s));
    }
    p.gold_proof = std::move(steps);
  }
  p.depth = j.at("depth").get<int>();
  return p;
}

std::string problems_to_jsonl(const std::vector<Problem>& problems) {
  std::string out;
  for (const auto& p : problems) {
    out += p.to_json().dump();
    out += '\n';
  }
  return out;
}

std::vector<Problem> problems_from_jsonl(const std::string& content) {
  std::vector<Problem> out;
  for (const auto& line : split_lines(content)) {
    if (trim(line).empty()) continue;
    out.push_back(Problem::from_json(json::parse(line)));
  }
  return out;
}

std::optional<std::string> quoted_statement_text(const std::string& question) {
  size_t a = question.find('"');
  size_t b = question.rfind('"');
  if (a == std::string::npos || b <= a) return std::nullopt;
  return question.substr(a + 1, b - a - 1);
}

logic::Literal question_statement(const Problem& p) {
  auto text = quoted_statement_text(p.question);
  if (!text) throw Error("problem " + p.id + " has no quoted statement in its question");
  logic::Form f = logic::parse_sentence(*text);
  if (!std::holds_alternative<logic::Literal>(f))
    throw Error("question statement is not a fact: " + *text);
  return std::get<logic::Literal>(f);
}

namespace {

std::string selection_frame(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::string piece = strip_period(parts[i]);
    if (i == 0) out = piece;
    else if (i == 1) out += ". We know that " + piece;
    else out += " and " + piece;
  }
  return out;
}

}  // namespace

std::vector<FinetuneExample> export_finetune(const Problem& p) {
  if (!p.gold_proof) throw MissingProof(p.id);
  std::vector<FinetuneExample> out;
  std::vector<std::string> context = p.context;
  for (const auto& step : *p.gold_proof) {
    std::string labeled;
    for (size_t i = 0; i < context.size(); ++i)
      labeled += "sent " + std::to_string(i + 1) + ": " + context[i] + "\n";

    FinetuneExample sel;
    sel.stage = "selection";
    sel.input = labeled + p.question + "\nSelection:";
    sel.target = selection_frame(step.premises) + ".";
    out.push_back(std::move(sel));

    std::vector<std::string> resolved;
    for (const auto& label : step.premises) {
      auto ws = split_ws(label);
      size_t idx = ws.size() == 2 ? std::stoul(ws[1]) : 0;
      if (idx == 0 || idx > context.size())
        throw Error("gold proof premise " + label + " outside context of " + p.id);
      resolved.push_back(context[idx - 1]);
    }
    FinetuneExample inf;
    inf.stage = "inference";
    inf.input = selection_frame(resolved) + ". Therefore,";
    inf.target = step.conclusion;
    out.push_back(std::move(inf));

    context.push_back(step.conclusion);
  }
  return out;
}

std::string finetune_to_jsonl(const std::vector<FinetuneExample>& examples) {
  std::string out;
  for (const auto& e : examples) {
    ordered_json j;
    j["stage"] = e.stage;
    j["input"] = e.input;
    j["target"] = e.target;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace si::taskgen

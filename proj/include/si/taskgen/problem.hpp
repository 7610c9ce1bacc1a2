#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "si/logic/form.hpp"

namespace si::taskgen {

struct GoldStep {
  std::vector<std::string> premises;  // "sent k" labels
  std::string conclusion;             // sentence text
};

struct Problem {
  std::string id;
  std::string task;  // proofwriter | babi1 | babi2 | babi3 | babi15 | babi16
  std::vector<std::string> context;
  std::string question;
  std::vector<std::string> choices;
  std::string gold_answer;
  std::optional<logic::Label> gold_label;
  std::optional<std::vector<GoldStep>> gold_proof;
  int depth = 0;

  nlohmann::ordered_json to_json() const;
  static Problem from_json(const nlohmann::json& j);
};

std::string problems_to_jsonl(const std::vector<Problem>& problems);
std::vector<Problem> problems_from_jsonl(const std::string& content);

// The quoted statement of a proofwriter question line, parsed to a ground
// literal. Throws for other task kinds.
logic::Literal question_statement(const Problem& p);

// Extracts the quoted statement text from a proofwriter question line.
std::optional<std::string> quoted_statement_text(const std::string& question);

struct FinetuneExample {
  std::string stage;  // selection | inference
  std::string input;
  std::string target;
};

// One selection + one inference training pair per gold proof step, with
// intermediate conclusions appended to the context under extended labels.
std::vector<FinetuneExample> export_finetune(const Problem& p);

std::string finetune_to_jsonl(const std::vector<FinetuneExample>& examples);

}  // namespace si::taskgen

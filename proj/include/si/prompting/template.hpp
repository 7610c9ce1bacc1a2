#pragma once

#include <string>
#include <vector>

namespace si::prompting {

// One worked example. Which fields are populated depends on the family:
// vanilla uses answer, cot uses reasoning, selection uses selection,
// inference uses selection + answer.
struct Exemplar {
  std::string context;    // newline-joined sentences
  std::string question;   // full question line
  std::string statement;  // bare quoted statement (proofwriter vanilla)
  std::string reasoning;  // full multi-step reasoning (cot)
  std::string selection;  // one step's selection string
  std::string answer;
};

// A prompt family template for one task kind, loaded from a plain-text
// file. Placeholders: {context} {question} {statement} {reasoning}
// {selection} {answer}.
struct PromptTemplate {
  std::string family;  // vanilla | cot | selection | inference
  std::string task;    // proofwriter | babi1 | babi2 | babi3 | babi15 | babi16
  std::string preamble;
  std::string block;  // exemplar block layout
  std::string query;  // final problem block layout
  std::vector<Exemplar> exemplars;

  static PromptTemplate load_file(const std::string& path);
  static PromptTemplate parse(const std::string& content, const std::string& origin);
};

// The four k-shot prompt builders. k exemplars are taken from the front of
// the template's pool; k may be 0. Throws TemplateMismatch on a family
// mismatch or if the template holds fewer than k exemplars.
std::string build_vanilla(const PromptTemplate& tmpl, int k,
                          const std::vector<std::string>& context, const std::string& question,
                          const std::string& statement);

std::string build_cot(const PromptTemplate& tmpl, int k, const std::vector<std::string>& context,
                      const std::string& question, const std::string& statement);

std::string build_selection(const PromptTemplate& tmpl, int k,
                            const std::vector<std::string>& context, const std::string& question,
                            const std::string& statement, const std::string& partial_selection);

std::string build_inference(const PromptTemplate& tmpl, int k, const std::string& selection_text);

// Template files live in a directory as <family>_<task>.txt.
struct TemplateSet {
  PromptTemplate vanilla, cot, selection, inference;
};
TemplateSet load_templates(const std::string& dir, const std::string& task);

std::string default_prompts_dir();

}  // namespace si::prompting

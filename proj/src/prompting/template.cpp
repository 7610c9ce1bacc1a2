#include "si/prompting/template.hpp"

#include <cstdlib>

#include "si/errors.hpp"
#include "si/util/text.hpp"

#ifndef SI_DEFAULT_PROMPTS_DIR
#define SI_DEFAULT_PROMPTS_DIR "prompts"
#endif

namespace si::prompting {

namespace {

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string fill(std::string text, const std::string& key, const std::string& value) {
  return replace_all(std::move(text), "{" + key + "}", value);
}

std::string instantiate(const std::string& layout, const Exemplar& e) {
  std::string out = layout;
  out = fill(out, "context", e.context);
  out = fill(out, "question", e.question);
  out = fill(out, "statement", e.statement);
  out = fill(out, "reasoning", e.reasoning);
  out = fill(out, "selection", e.selection);
  out = fill(out, "answer", e.answer);
  return out;
}

void require_family(const PromptTemplate& tmpl, const std::string& family) {
  if (tmpl.family != family)
    throw TemplateMismatch("builder for " + family + " got a " + tmpl.family + " template");
}

std::string assemble(const PromptTemplate& tmpl, int k, const std::string& final_block) {
  if (k < 0 || static_cast<size_t>(k) > tmpl.exemplars.size())
    throw TemplateMismatch(tmpl.family + "/" + tmpl.task + " has " +
                           std::to_string(tmpl.exemplars.size()) + " exemplars, k=" +
                           std::to_string(k));
  std::vector<std::string> blocks;
  if (!tmpl.preamble.empty()) blocks.push_back(tmpl.preamble);
  for (int i = 0; i < k; ++i) blocks.push_back(instantiate(tmpl.block, tmpl.exemplars[i]));
  blocks.push_back(final_block);
  return join(blocks, "\n\n");
}

Exemplar problem_fields(const std::vector<std::string>& context, const std::string& question,
                        const std::string& statement) {
  Exemplar e;
  e.context = join(context, "\n");
  e.question = question;
  e.statement = statement;
  return e;
}

}  // namespace

PromptTemplate PromptTemplate::parse(const std::string& content, const std::string& origin) {
  PromptTemplate tmpl;
  std::string* sink = nullptr;
  Exemplar* current = nullptr;
  for (const auto& line : split_lines(content)) {
    if (!line.empty() && line[0] == '@') {
      auto words = split_ws(line);
      const std::string& directive = words[0];
      std::string arg = words.size() > 1 ? line.substr(line.find(words[1])) : "";
      if (directive == "@family") {
        tmpl.family = arg;
        sink = nullptr;
      } else if (directive == "@task") {
        tmpl.task = arg;
        sink = nullptr;
      } else if (directive == "@preamble") {
        sink = &tmpl.preamble;
      } else if (directive == "@block") {
        sink = &tmpl.block;
      } else if (directive == "@query") {
        sink = &tmpl.query;
      } else if (directive == "@exemplar") {
        tmpl.exemplars.emplace_back();
        current = &tmpl.exemplars.back();
        sink = nullptr;
      } else if (directive == "@context" || directive == "@question" ||
                 directive == "@statement" || directive == "@reasoning" ||
                 directive == "@selection" || directive == "@answer") {
        if (!current) throw TemplateMismatch(origin + ": " + directive + " outside @exemplar");
        if (directive == "@context") sink = &current->context;
        else if (directive == "@question") sink = &current->question;
        else if (directive == "@statement") sink = &current->statement;
        else if (directive == "@reasoning") sink = &current->reasoning;
        else if (directive == "@selection") sink = &current->selection;
        else sink = &current->answer;
      } else if (directive == "@end") {
        sink = nullptr;
        current = nullptr;
      } else {
        throw TemplateMismatch(origin + ": unknown directive " + directive);
      }
      continue;
    }
    if (!sink) {
      if (trim(line).empty()) continue;
      throw TemplateMismatch(origin + ": text outside any section: " + line);
    }
    *sink += line;
    *sink += '\n';
  }
  tmpl.preamble = chomp(tmpl.preamble);
  tmpl.block = chomp(tmpl.block);
  tmpl.query = chomp(tmpl.query);
  for (auto& e : tmpl.exemplars) {
    e.context = chomp(e.context);
    e.question = chomp(e.question);
    e.statement = chomp(e.statement);
    e.reasoning = chomp(e.reasoning);
    e.selection = chomp(e.selection);
    e.answer = chomp(e.answer);
  }
  if (tmpl.family.empty() || tmpl.query.empty())
    throw TemplateMismatch(origin + ": missing @family or @query");
  return tmpl;
}

PromptTemplate PromptTemplate::load_file(const std::string& path) {
  return parse(read_file(path), path);
}

std::string build_vanilla(const PromptTemplate& tmpl, int k,
                          const std::vector<std::string>& context, const std::string& question,
                          const std::string& statement) {
  require_family(tmpl, "vanilla");
  return assemble(tmpl, k, instantiate(tmpl.query, problem_fields(context, question, statement)));
}

std::string build_cot(const PromptTemplate& tmpl, int k, const std::vector<std::string>& context,
                      const std::string& question, const std::string& statement) {
  require_family(tmpl, "cot");
  return assemble(tmpl, k, instantiate(tmpl.query, problem_fields(context, question, statement)));
}

std::string build_selection(const PromptTemplate& tmpl, int k,
                            const std::vector<std::string>& context, const std::string& question,
                            const std::string& statement, const std::string& partial_selection) {
  require_family(tmpl, "selection");
  std::string prompt =
      assemble(tmpl, k, instantiate(tmpl.query, problem_fields(context, question, statement)));
  if (!partial_selection.empty()) prompt += " " + partial_selection;
  return prompt;
}

std::string build_inference(const PromptTemplate& tmpl, int k, const std::string& selection_text) {
  require_family(tmpl, "inference");
  if (selection_text.empty()) throw TemplateMismatch("inference needs a non-empty selection");
  Exemplar fields;
  fields.selection = selection_text;
  return assemble(tmpl, k, instantiate(tmpl.query, fields));
}

TemplateSet load_templates(const std::string& dir, const std::string& task) {
  TemplateSet set;
  set.vanilla = PromptTemplate::load_file(dir + "/vanilla_" + task + ".txt");
  set.cot = PromptTemplate::load_file(dir + "/cot_" + task + ".txt");
  set.selection = PromptTemplate::load_file(dir + "/selection_" + task + ".txt");
  set.inference = PromptTemplate::load_file(dir + "/inference_" + task + ".txt");
  return set;
}

std::string default_prompts_dir() {
  if (const char* env = std::getenv("SI_PROMPTS_DIR")) return env;
  return SI_DEFAULT_PROMPTS_DIR;
}

}  // namespace si::prompting

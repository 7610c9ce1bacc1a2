#include "si/engine/engine.hpp"

#include <algorithm>

#include "si/errors.hpp"
#include "si/eval/metrics.hpp"
#include "si/eval/textnorm.hpp"
#include "si/logic/parse.hpp"
#include "si/logic/render.hpp"
#include "si/util/text.hpp"

namespace si::engine {

int default_max_facts(const std::string&) { return 2; }

std::string selection_delta(size_t picks_so_far, const std::string& sentence) {
  std::string core = strip_period(sentence);
  if (picks_so_far == 0) return " " + core;
  if (picks_so_far == 1) return ". We know that " + core;
  return " and " + core;
}

std::string selection_join(const std::string& so_far, size_t picks_so_far,
                           const std::string& sentence) {
  std::string core = strip_period(sentence);
  if (picks_so_far == 0) return core;
  if (picks_so_far == 1) return so_far + ". We know that " + core;
  return so_far + " and " + core;
}

SelectionResult select(const std::vector<std::string>& context, const std::string& question,
                       const std::string& statement, backend::Backend& backend, int max_facts,
                       const prompting::PromptTemplate& tmpl, int k,
                       const ScoreObserver* observer) {
  if (context.empty()) throw EmptyContext();
  if (max_facts < 1) throw Error("max_facts must be >= 1");

  SelectionResult result;
  result.halted_by = HaltReason::max_facts;
  std::vector<char> taken(context.size(), 0);

  // One head slot plus up to max_facts sentences after "We know that".
  while (static_cast<int>(result.selected_indices.size()) < 1 + max_facts) {
    std::string prefix =
        prompting::build_selection(tmpl, k, context, question, statement, result.selection_text);
    size_t picks = result.selected_indices.size();

    int best = -1;
    double best_score = 0.0;
    for (size_t i = 0; i < context.size(); ++i) {
      if (taken[i]) continue;
      std::string delta = selection_delta(picks, context[i]);
      double s = backend.score({prefix, delta}).logprob;
      if (observer) (*observer)({static_cast<int>(i), delta, s});
      if (best < 0 || s > best_score) {
        best = static_cast<int>(i);
        best_score = s;
      }
    }
    if (best < 0) break;  // context exhausted

    if (picks >= 1) {
      double s = backend.score({prefix, kSentinel}).logprob;
      if (observer) (*observer)({-1, kSentinel, s});
      if (s > best_score) {
        result.halted_by = HaltReason::sentinel;
        return result;
      }
    }

    taken[best] = 1;
    result.selection_text = selection_join(result.selection_text, picks, context[best]);
    result.selected_indices.push_back(best);
  }
  return result;
}

std::string infer(const std::string& selection_text, backend::Backend& backend,
                  const prompting::PromptTemplate& tmpl, int k, int max_tokens) {
  std::string prompt = prompting::build_inference(tmpl, k, selection_text);
  backend::GenerateRequest req;
  req.prefix = prompt;
  req.max_tokens = max_tokens;
  req.stop = {"\n"};
  std::string raw = backend.generate(req);
  std::string fact = eval::first_sentence(raw);
  if (fact.empty()) throw EmptyGeneration();
  return fact + ".";
}

namespace {

bool contains_sentence(const std::vector<std::string>& context, const std::string& sentence) {
  return std::find(context.begin(), context.end(), sentence) != context.end();
}

void run_steps(const taskgen::Problem& problem, backend::Backend& backend,
               const prompting::TemplateSet& templates, const RunOptions& opt,
               std::vector<std::string>& context, Trace& trace, int remaining,
               const std::string& statement_text) {
  int max_facts = opt.max_facts > 0 ? opt.max_facts : default_max_facts(problem.task);
  for (int t = 0; t < remaining; ++t) {
    TraceStep step;
    try {
      step.selection = select(context, problem.question, statement_text, backend, max_facts,
                              templates.selection, opt.k_shots);
      step.inference_text = infer(step.selection.selection_text, backend, templates.inference,
                                  opt.k_shots, opt.gen_max_tokens);
    } catch (const Error& e) {
      trace.error = e.what();
      break;
    }
    step.duplicate = contains_sentence(context, step.inference_text);
    if (!step.duplicate) context.push_back(step.inference_text);
    step.context_size_after = static_cast<int>(context.size());
    trace.steps.push_back(std::move(step));
  }
}

std::string statement_text_of(const taskgen::Problem& problem) {
  if (problem.task != "proofwriter") return "";
  return taskgen::quoted_statement_text(problem.question).value_or("");
}

}  // namespace

void finalize_trace(const taskgen::Problem& problem, const std::vector<std::string>& context,
                    Trace& trace) {
  if (problem.task == "proofwriter") {
    logic::Literal statement;
    try {
      statement = taskgen::question_statement(problem);
    } catch (const Error& e) {
      trace.error = e.what();
      return;
    }
    std::vector<std::string> inferences;
    for (const auto& s : trace.steps) inferences.push_back(s.inference_text);
    auto verdict = eval::proofwriter_label(problem.context, inferences, statement);
    trace.label = verdict.label;
    trace.matched_at_step = verdict.matched_at_step;
    trace.answer = verdict.label == logic::Label::True ? "true" : "false";
    return;
  }
  (void)context;
  if (!trace.steps.empty()) {
    trace.answer = eval::final_word(trace.steps.back().inference_text);
  }
}

Trace run(const taskgen::Problem& problem, backend::Backend& backend,
          const prompting::TemplateSet& templates, const RunOptions& opt) {
  Trace trace;
  trace.problem_id = problem.id;
  std::vector<std::string> context = problem.context;
  int steps = opt.steps > 0 ? opt.steps : std::max(problem.depth, 1);
  run_steps(problem, backend, templates, opt, context, trace, steps, statement_text_of(problem));
  finalize_trace(problem, context, trace);
  return trace;
}

Trace intervene(const taskgen::Problem& problem, const Trace& base, int step_index,
                const std::string& replacement_fact, backend::Backend& backend,
                const prompting::TemplateSet& templates, const RunOptions& opt) {
  if (step_index < 0 || static_cast<size_t>(step_index) >= base.steps.size())
    throw IndexOutOfRange(step_index, base.steps.size());

  std::string replacement = trim(replacement_fact);
  if (!replacement.empty() && replacement.back() != '.') replacement += ".";
  {
    auto form = logic::parse_sentence(replacement);  // throws UnparsableSentence
    if (!std::holds_alternative<logic::Literal>(form) ||
        !std::get<logic::Literal>(form).is_ground())
      throw UnparsableSentence(replacement_fact + " (not a ground fact)");
  }

  Trace trace;
  trace.problem_id = base.problem_id;
  std::vector<std::string> context = problem.context;
  for (int i = 0; i < step_index; ++i) {
    TraceStep step = base.steps[i];
    step.duplicate = contains_sentence(context, step.inference_text);
    if (!step.duplicate) context.push_back(step.inference_text);
    step.context_size_after = static_cast<int>(context.size());
    trace.steps.push_back(std::move(step));
  }

  TraceStep swapped = base.steps[step_index];
  swapped.inference_text = replacement;
  swapped.duplicate = contains_sentence(context, replacement);
  if (!swapped.duplicate) context.push_back(replacement);
  swapped.context_size_after = static_cast<int>(context.size());
  trace.steps.push_back(std::move(swapped));

  int total = opt.steps > 0 ? opt.steps : std::max(problem.depth, 1);
  total = std::max(total, static_cast<int>(base.steps.size()));
  int remaining = total - step_index - 1;
  run_steps(problem, backend, templates, opt, context, trace, remaining,
            statement_text_of(problem));
  finalize_trace(problem, context, trace);
  return trace;
}

nlohmann::ordered_json trace_to_json(const Trace& t) {
  nlohmann::ordered_json j;
  j["problem_id"] = t.problem_id;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : t.steps) {
    nlohmann::ordered_json sj;
    sj["selected_indices"] = s.selection.selected_indices;
    sj["selection_text"] = s.selection.selection_text;
    sj["inference_text"] = s.inference_text;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  j["answer"] = t.answer;
  if (t.label) j["label"] = logic::to_string(*t.label);
  if (t.matched_at_step) j["matched_at_step"] = *t.matched_at_step;
  if (t.error) j["error"] = *t.error;
  return j;
}

Trace trace_from_json(const nlohmann::json& j) {
  Trace t;
  t.problem_id = j.at("problem_id").get<std::string>();
  for (const auto& sj : j.at("steps")) {
    TraceStep s;
    s.selection.selected_indices = sj.at("selected_indices").get<std::vector<int>>();
    s.selection.selection_text = sj.at("selection_text").get<std::string>();
    s.inference_text = sj.at("inference_text").get<std::string>();
    t.steps.push_back(std::move(s));
  }
  t.answer = j.at("answer").get<std::string>();
  if (j.contains("label")) t.label = logic::label_from_string(j.at("label").get<std::string>());
  if (j.contains("matched_at_step")) t.matched_at_step = j.at("matched_at_step").get<int>();
  if (j.contains("error")) t.error = j.at("error").get<std::string>();
  return t;
}

std::string traces_to_jsonl(const std::vector<Trace>& traces) {
  std::string out;
  for (const auto& t : traces) {
    out += trace_to_json(t).dump();
    out += '\n';
  }
  return out;
}

std::vector<Trace> traces_from_jsonl(const std::string& content) {
  std::vector<Trace> out;
  for (const auto& line : split_lines(content)) {
    if (trim(line).empty()) continue;
    out.push_back(trace_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace si::engine

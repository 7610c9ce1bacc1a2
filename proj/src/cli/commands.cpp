#include "si/cli/commands.hpp"

#include <atomic>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "si/errors.hpp"
#include "si/eval/textnorm.hpp"
#include "si/prompting/template.hpp"
#include "si/util/text.hpp"

namespace si::cli {

using engine::Trace;
using taskgen::Problem;

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  std::vector<Problem> problems;
  if (args.task == "babi16") {
    problems = taskgen::gen_babi_induction(args.seed, args.count, args.allow_ambiguous);
  } else {
    problems = taskgen::generate(args.task, args.depth, args.seed, args.count, args.size);
  }
  write_file(args.out, taskgen::problems_to_jsonl(problems));

  int true_labels = 0, labeled = 0;
  size_t context_total = 0;
  for (const auto& p : problems) {
    context_total += p.context.size();
    if (p.gold_label) {
      ++labeled;
      if (*p.gold_label == logic::Label::True) ++true_labels;
    }
  }
  out << "wrote " << problems.size() << " problems to " << args.out << "\n";
  out << "mean context size: "
      << (problems.empty() ? 0.0 : static_cast<double>(context_total) / problems.size()) << "\n";
  if (labeled > 0)
    out << "label balance: " << true_labels << " True / " << (labeled - true_labels)
        << " False\n";

  if (!args.finetune_out.empty()) {
    std::string ft;
    size_t pairs = 0;
    for (const auto& p : problems) {
      auto examples = taskgen::export_finetune(p);
      pairs += examples.size();
      ft += taskgen::finetune_to_jsonl(examples);
    }
    write_file(args.finetune_out, ft);
    out << "wrote " << pairs << " fine-tune examples to " << args.finetune_out << "\n";
  }
  return 0;
}

namespace {

std::vector<engine::TraceStep> cot_steps(const std::string& generation) {
  std::vector<engine::TraceStep> steps;
  for (const auto& line : split_lines(generation)) {
    if (trim(line).empty()) continue;
    const std::string marker = "Therefore,";
    size_t pos = line.rfind(marker);
    if (pos == std::string::npos) continue;
    std::string fact = trim(line.substr(pos + marker.size()));
    if (fact.empty()) continue;
    if (fact.back() != '.') fact += ".";
    engine::TraceStep step;
    step.inference_text = fact;
    steps.push_back(std::move(step));
  }
  return steps;
}

Trace run_generative_baseline(const Problem& problem, backend::Backend& backend,
                              const prompting::TemplateSet& templates, const RunArgs& args) {
  bool cot = args.pipeline == "cot";
  std::string statement;
  if (problem.task == "proofwriter")
    statement = taskgen::quoted_statement_text(problem.question).value_or("");

  Trace trace;
  trace.problem_id = problem.id;
  std::string prompt =
      cot ? prompting::build_cot(templates.cot, args.k_shots, problem.context, problem.question,
                                 statement)
          : prompting::build_vanilla(templates.vanilla, args.k_shots, problem.context,
                                     problem.question, statement);
  backend::GenerateRequest req;
  req.prefix = prompt;
  req.max_tokens = cot ? 256 : 64;
  req.stop = cot ? std::vector<std::string>{"\n\n"} : std::vector<std::string>{"\n"};
  std::string generation;
  try {
    generation = backend.generate(req);
  } catch (const Error& e) {
    trace.error = e.what();
    return trace;
  }

  if (cot) {
    trace.steps = cot_steps(generation);
    if (problem.task == "proofwriter") {
      std::vector<std::string> inferences;
      for (const auto& s : trace.steps) inferences.push_back(s.inference_text);
      auto verdict =
          eval::proofwriter_label(problem.context, inferences, taskgen::question_statement(problem));
      trace.label = verdict.label;
      trace.matched_at_step = verdict.matched_at_step;
      trace.answer = verdict.label == logic::Label::True ? "true" : "false";
    } else {
      trace.answer = trace.steps.empty() ? eval::final_word(generation)
                                         : eval::final_word(trace.steps.back().inference_text);
    }
  } else {
    trace.answer = eval::first_sentence(generation);
    if (problem.task == "proofwriter") {
      std::string norm = eval::normalize_alpha(trace.answer);
      if (norm == "true") trace.label = logic::Label::True;
      else if (norm == "false") trace.label = logic::Label::False;
    }
  }
  return trace;
}

Trace run_multichoice(const Problem& problem, backend::Backend& backend,
                      const prompting::TemplateSet& templates, const RunArgs& args) {
  Trace trace;
  trace.problem_id = problem.id;
  std::string statement;
  if (problem.task == "proofwriter")
    statement = taskgen::quoted_statement_text(problem.question).value_or("");
  std::string prompt = prompting::build_vanilla(templates.vanilla, args.k_shots, problem.context,
                                                problem.question, statement);
  try {
    int pick = eval::multichoice_pick(backend, prompt, problem.choices, args.normalize_choices);
    trace.answer = problem.choices.at(pick);
  } catch (const Error& e) {
    trace.error = e.what();
  }
  return trace;
}

}  // namespace

eval::EvalReport evaluate_traces(const std::vector<Problem>& problems,
                                 const std::vector<Trace>& traces, const std::string& task) {
  std::map<std::string, const Trace*> by_id;
  for (const auto& t : traces) by_id[t.problem_id] = &t;

  std::vector<eval::EvalRecord> records;
  for (const auto& p : problems) {
    auto it = by_id.find(p.id);
    if (it == by_id.end()) continue;
    const Trace& t = *it->second;
    eval::EvalRecord r;
    r.id = p.id;
    r.predicted = t.answer;
    r.gold = p.gold_answer;
    if (p.task == "proofwriter") {
      r.correct = t.answer == p.gold_answer;
    } else {
      r.correct = !t.answer.empty() && eval::generative_match(t.answer, p.gold_answer);
    }
    if (p.gold_proof && !t.steps.empty()) {
      std::vector<std::string> model_steps, gold_steps;
      for (const auto& s : t.steps) model_steps.push_back(s.inference_text);
      for (const auto& s : *p.gold_proof) gold_steps.push_back(s.conclusion);
      r.jaccard = eval::jaccard_trace(model_steps, gold_steps);
    }
    records.push_back(std::move(r));
  }
  return eval::aggregate(std::move(records), task);
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  auto problems = taskgen::problems_from_jsonl(read_file(args.dataset));
  if (problems.empty()) throw Error("dataset is empty: " + args.dataset);
  std::string task = problems.front().task;

  std::string prompts = args.prompts_dir.empty() ? prompting::default_prompts_dir()
                                                 : args.prompts_dir;
  prompting::TemplateSet templates = prompting::load_templates(prompts, task);
  backend::BackendDescriptor desc = args.backend;
  if (desc.kind == backend::BackendKind::oracle && desc.task.empty()) desc.task = task;
  auto backend = backend::make_backend(desc);

  engine::RunOptions opt;
  opt.steps = args.steps;
  opt.max_facts = args.max_facts;
  opt.k_shots = args.k_shots;

  std::vector<Trace> traces(problems.size());
  parallel_for(static_cast<int>(problems.size()), args.workers, [&](int i) {
    const Problem& p = problems[i];
    if (args.multichoice) {
      traces[i] = run_multichoice(p, *backend, templates, args);
    } else if (args.pipeline == "si") {
      traces[i] = engine::run(p, *backend, templates, opt);
    } else if (args.pipeline == "vanilla" || args.pipeline == "cot") {
      traces[i] = run_generative_baseline(p, *backend, templates, args);
    } else {
      throw Error("unknown pipeline: " + args.pipeline);
    }
  });

  if (!args.traces_out.empty()) write_file(args.traces_out, engine::traces_to_jsonl(traces));
  auto report = evaluate_traces(problems, traces, task);
  if (!args.report_out.empty()) write_file(args.report_out, report.to_json().dump(2) + "\n");
  out << report.summary_line() << "\n";
  return 0;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  auto problems = taskgen::problems_from_jsonl(read_file(args.dataset));
  auto traces = engine::traces_from_jsonl(read_file(args.traces));
  if (problems.empty()) throw Error("dataset is empty: " + args.dataset);
  auto report = evaluate_traces(problems, traces, problems.front().task);
  if (!args.report_out.empty()) write_file(args.report_out, report.to_json().dump(2) + "\n");
  out << report.summary_line() << "\n";
  return 0;
}

namespace {

void print_step_help(std::ostream& out) {
  out << "commands:\n"
         "  show                       print the current context and question\n"
         "  step                       run one selection-inference step\n"
         "  replace <step> <sentence>  substitute the inference at <step> and re-run\n"
         "  trace                      print the trace so far\n"
         "  quit                       write the trace and exit\n";
}

}  // namespace

int cmd_step(const StepArgs& args, std::istream& in, std::ostream& out) {
  auto problems = taskgen::problems_from_jsonl(read_file(args.dataset));
  const Problem* problem = nullptr;
  for (const auto& p : problems) {
    if (args.problem_id.empty() || p.id == args.problem_id) {
      problem = &p;
      break;
    }
  }
  if (!problem) throw Error("problem not found: " + args.problem_id);

  std::string prompts = args.prompts_dir.empty() ? prompting::default_prompts_dir()
                                                 : args.prompts_dir;
  prompting::TemplateSet templates = prompting::load_templates(prompts, problem->task);
  backend::BackendDescriptor desc = args.backend;
  if (desc.kind == backend::BackendKind::oracle && desc.task.empty()) desc.task = problem->task;
  auto backend = backend::make_backend(desc);

  engine::RunOptions opt;
  opt.k_shots = args.k_shots;
  opt.steps = args.steps > 0 ? args.steps : std::max(problem->depth, 1);
  opt.max_facts = args.max_facts > 0 ? args.max_facts : engine::default_max_facts(problem->task);

  std::vector<std::string> context = problem->context;
  Trace trace;
  trace.problem_id = problem->id;
  std::string statement;
  if (problem->task == "proofwriter")
    statement = taskgen::quoted_statement_text(problem->question).value_or("");

  auto show = [&] {
    for (size_t i = 0; i < context.size(); ++i)
      out << "sent " << (i + 1) << ": " << context[i] << "\n";
    out << "question: " << problem->question << "\n";
  };
  auto rebuild_context = [&] {
    context = problem->context;
    for (const auto& s : trace.steps)
      if (!s.duplicate) context.push_back(s.inference_text);
  };

  out << "problem " << problem->id << " (" << problem->task << ", depth " << problem->depth
      << ")\n";
  show();

  std::string line;
  while (std::getline(in, line)) {
    auto words = split_ws(line);
    if (words.empty()) continue;
    const std::string& cmd = words[0];
    try {
      if (cmd == "quit") {
        break;
      } else if (cmd == "show") {
        show();
      } else if (cmd == "trace") {
        out << engine::trace_to_json(trace).dump(2) << "\n";
      } else if (cmd == "step") {
        engine::ScoreObserver observer = [&](const engine::ScoreEvent& e) {
          if (e.candidate_index < 0) out << "  [sentinel] ";
          else out << "  [sent " << (e.candidate_index + 1) << "] ";
          out << e.logprob << "\n";
        };
        engine::TraceStep step;
        step.selection = engine::select(context, problem->question, statement, *backend,
                                        opt.max_facts, templates.selection, opt.k_shots,
                                        &observer);
        step.inference_text = engine::infer(step.selection.selection_text, *backend,
                                            templates.inference, opt.k_shots);
        step.duplicate =
            std::find(context.begin(), context.end(), step.inference_text) != context.end();
        if (!step.duplicate) context.push_back(step.inference_text);
        step.context_size_after = static_cast<int>(context.size());
        trace.steps.push_back(step);
        out << "selection: " << step.selection.selection_text << "\n";
        out << "inference: " << step.inference_text << (step.duplicate ? " (duplicate)" : "")
            << "\n";
      } else if (cmd == "replace") {
        if (words.size() < 3) {
          print_step_help(out);
          continue;
        }
        int index = std::stoi(words[1]);
        size_t sentence_at = line.find(words[2]);
        std::string sentence = line.substr(sentence_at);
        trace = engine::intervene(*problem, trace, index, sentence, *backend, templates, opt);
        rebuild_context();
        out << "re-ran from step " << index << "; trace now has " << trace.steps.size()
            << " steps\n";
        for (const auto& s : trace.steps) out << "  " << s.inference_text << "\n";
      } else {
        print_step_help(out);
      }
    } catch (const Error& e) {
      out << "error: " << e.what() << "\n";
    }
  }

  engine::finalize_trace(*problem, context, trace);
  out << "answer: " << trace.answer << "\n";
  if (!args.trace_out.empty())
    write_file(args.trace_out, engine::trace_to_json(trace).dump() + "\n");
  return 0;
}

}  // namespace si::cli

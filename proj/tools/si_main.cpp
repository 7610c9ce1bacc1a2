#include <iostream>

#include <CLI11.hpp>

#include "si/cli/commands.hpp"
#include "si/errors.hpp"
#include "si/prompting/template.hpp"

namespace {

void add_backend_flags(CLI::App* cmd, std::string& backend, si::backend::BackendDescriptor& desc) {
  cmd->add_option("--backend", backend, "Backend: oracle, replay or remote")
      ->default_val("oracle");
  cmd->add_option("--fixture", desc.fixture_path, "Replay fixture file (replay backend)");
  cmd->add_option("--endpoint", desc.remote.endpoint, "Completion endpoint URL (remote backend)");
  cmd->add_option("--model", desc.remote.model, "Model name (remote backend)");
  cmd->add_option("--timeout-ms", desc.remote.timeout_ms, "Remote request timeout");
  cmd->add_option("--max-in-flight", desc.remote.max_in_flight, "Remote concurrency bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selection-inference reasoning pipeline over pluggable scorer/generator backends"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value configuration file; flags win on conflict");

  // gen
  si::cli::GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a synthetic dataset with gold proofs");
  cmd_gen->add_option("--task", gen.task,
                      "Task kind: proofwriter, babi1, babi2, babi3, babi15, babi16")
      ->required();
  cmd_gen->add_option("--depth", gen.depth, "Proof depth (proofwriter: 0, 1, 2, 3 or 5)");
  cmd_gen->add_option("--seed", gen.seed, "Generation seed");
  cmd_gen->add_option("--count", gen.count, "Number of problems")->required();
  cmd_gen->add_option("--out", gen.out, "Output dataset JSONL")->required();
  cmd_gen->add_option("--finetune-out", gen.finetune_out, "Also export fine-tuning pairs JSONL");
  cmd_gen->add_flag("--allow-ambiguous", gen.allow_ambiguous,
                    "babi16: keep color-tie problems (recency tie-break)");
  cmd_gen->add_option("--min-entities", gen.size.min_entities);
  cmd_gen->add_option("--max-entities", gen.size.max_entities);
  cmd_gen->add_option("--min-rules", gen.size.min_rules);
  cmd_gen->add_option("--max-rules", gen.size.max_rules);
  cmd_gen->add_option("--min-facts", gen.size.min_facts);
  cmd_gen->add_option("--max-facts-gen", gen.size.max_facts);

  // run
  si::cli::RunArgs run;
  std::string run_backend = "oracle";
  auto* cmd_run = app.add_subcommand("run", "Run a pipeline over a dataset");
  cmd_run->add_option("--dataset", run.dataset, "Dataset JSONL")->required();
  cmd_run->add_option("--pipeline", run.pipeline, "si, vanilla or cot")->default_val("si");
  cmd_run->add_flag("--multichoice", run.multichoice,
                    "Score answer choices instead of generating");
  cmd_run->add_flag("--normalize-choices", run.normalize_choices,
                    "Length-normalize choice scores");
  add_backend_flags(cmd_run, run_backend, run.backend);
  cmd_run->add_option("--prompts", run.prompts_dir, "Prompt template directory");
  cmd_run->add_option("--k-shots", run.k_shots, "Exemplars per prompt")->default_val(5);
  cmd_run->add_option("--steps", run.steps, "Step budget override (default: problem depth)");
  cmd_run->add_option("--max-facts", run.max_facts, "Selection size cap (default per task)");
  cmd_run->add_option("--workers", run.workers, "Worker pool size (default: processors)");
  cmd_run->add_option("--seed", run.seed, "Run seed");
  cmd_run->add_option("--traces-out", run.traces_out, "Trace JSONL output");
  cmd_run->add_option("--report-out", run.report_out, "Report JSON output");

  // eval
  si::cli::EvalArgs eval;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate existing traces against a dataset");
  cmd_eval->add_option("--dataset", eval.dataset, "Dataset JSONL")->required();
  cmd_eval->add_option("--traces", eval.traces, "Trace JSONL")->required();
  cmd_eval->add_option("--report-out", eval.report_out, "Report JSON output");

  // step
  si::cli::StepArgs step;
  std::string step_backend = "oracle";
  auto* cmd_step = app.add_subcommand("step", "Step through one problem interactively");
  cmd_step->add_option("--dataset", step.dataset, "Dataset JSONL")->required();
  cmd_step->add_option("--id", step.problem_id, "Problem id (default: first)");
  add_backend_flags(cmd_step, step_backend, step.backend);
  cmd_step->add_option("--prompts", step.prompts_dir, "Prompt template directory");
  cmd_step->add_option("--k-shots", step.k_shots, "Exemplars per prompt")->default_val(5);
  cmd_step->add_option("--steps", step.steps, "Step budget");
  cmd_step->add_option("--max-facts", step.max_facts, "Selection size cap");
  cmd_step->add_option("--trace-out", step.trace_out, "Trace output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gen->parsed()) return si::cli::cmd_gen(gen, std::cout);
    if (cmd_run->parsed()) {
      run.backend.kind = si::backend::backend_kind_from_string(run_backend);
      return si::cli::cmd_run(run, std::cout);
    }
    if (cmd_eval->parsed()) return si::cli::cmd_eval(eval, std::cout);
    if (cmd_step->parsed()) {
      step.backend.kind = si::backend::backend_kind_from_string(step_backend);
      return si::cli::cmd_step(step, std::cin, std::cout);
    }
  } catch (const si::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

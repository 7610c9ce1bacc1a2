#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "si/backend/backend.hpp"
#include "si/engine/engine.hpp"
#include "si/eval/metrics.hpp"
#include "si/taskgen/generate.hpp"

namespace si::cli {

struct GenArgs {
  std::string task = "proofwriter";
  int depth = 1;
  uint64_t seed = 0;
  int count = 1;
  taskgen::SizeParams size;
  bool allow_ambiguous = false;
  std::string out;
  std::string finetune_out;  // optional
};

struct RunArgs {
  std::string dataset;
  std::string pipeline = "si";  // si | vanilla | cot
  bool multichoice = false;     // score choices instead of generating (vanilla prompt)
  bool normalize_choices = false;
  backend::BackendDescriptor backend;
  std::string prompts_dir;
  int k_shots = 5;
  int steps = 0;      // 0: per-problem default
  int max_facts = 0;  // 0: per-task default
  int workers = 0;    // 0: hardware concurrency
  uint64_t seed = 0;
  std::string traces_out;
  std::string report_out;
};

struct EvalArgs {
  std::string dataset;
  std::string traces;
  std::string report_out;
};

struct StepArgs {
  std::string dataset;
  std::string problem_id;  // empty: first problem
  backend::BackendDescriptor backend;
  std::string prompts_dir;
  int k_shots = 5;
  int steps = 0;
  int max_facts = 0;
  std::string trace_out;
};

int cmd_gen(const GenArgs& args, std::ostream& out);
int cmd_run(const RunArgs& args, std::ostream& out);
int cmd_eval(const EvalArgs& args, std::ostream& out);
int cmd_step(const StepArgs& args, std::istream& in, std::ostream& out);

// Shared by cmd_run and cmd_eval: score traces against their problems.
eval::EvalReport evaluate_traces(const std::vector<taskgen::Problem>& problems,
                                 const std::vector<engine::Trace>& traces,
                                 const std::string& task);

// Deterministic order-preserving parallel map used by the batch runner.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace si::cli

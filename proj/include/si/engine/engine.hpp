#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "si/backend/backend.hpp"
#include "si/prompting/template.hpp"
#include "si/taskgen/problem.hpp"

namespace si::engine {

enum class HaltReason { sentinel, max_facts };

struct SelectionResult {
  std::vector<int> selected_indices;  // indices into the live context, pick order
  std::string selection_text;         // "X. We know that Y[ and Z]*"
  HaltReason halted_by = HaltReason::max_facts;
};

struct TraceStep {
  SelectionResult selection;
  std::string inference_text;
  int context_size_after = 0;
  bool duplicate = false;
};

struct Trace {
  std::string problem_id;
  std::vector<TraceStep> steps;
  std::string answer;
  std::optional<logic::Label> label;
  std::optional<int> matched_at_step;  // 0 = matched a stated fact
  std::optional<std::string> error;
};

struct ScoreEvent {
  int candidate_index = -1;  // -1 for the sentinel
  std::string continuation;
  double logprob = 0.0;
};
using ScoreObserver = std::function<void(const ScoreEvent&)>;

struct RunOptions {
  int steps = 0;      // 0: max(problem depth, 1)
  int max_facts = 0;  // 0: default 2
  int k_shots = 5;
  int gen_max_tokens = 64;
};

int default_max_facts(const std::string& task);

// Grow the selection by scoring every unselected context sentence as the
// next continuation; after the first pick the sentinel ". Therefore, " is
// scored too and halts the selection when it wins. Ties go to the lowest
// context index. The selection holds one head sentence plus up to
// max_facts sentences after "We know that".
SelectionResult select(const std::vector<std::string>& context, const std::string& question,
                       const std::string& statement, backend::Backend& backend, int max_facts,
                       const prompting::PromptTemplate& tmpl, int k,
                       const ScoreObserver* observer = nullptr);

// One inference call: build the prompt, generate, extract the first
// sentence, append ".".
std::string infer(const std::string& selection_text, backend::Backend& backend,
                  const prompting::PromptTemplate& tmpl, int k, int max_tokens = 64);

// The full Selection-Inference loop over one problem.
Trace run(const taskgen::Problem& problem, backend::Backend& backend,
          const prompting::TemplateSet& templates, const RunOptions& opt = {});

// Keep steps before step_index, substitute the inference there, rebuild
// the context and re-run the remaining budget. The input trace is not
// modified.
Trace intervene(const taskgen::Problem& problem, const Trace& base, int step_index,
                const std::string& replacement_fact, backend::Backend& backend,
                const prompting::TemplateSet& templates, const RunOptions& opt = {});

// Task-dependent answer extraction over a finished trace.
void finalize_trace(const taskgen::Problem& problem, const std::vector<std::string>& context,
                    Trace& trace);

// Selection join helpers (shared with fixture-building tests).
std::string selection_delta(size_t picks_so_far, const std::string& sentence);
std::string selection_join(const std::string& so_far, size_t picks_so_far,
                           const std::string& sentence);
inline constexpr const char* kSentinel = ". Therefore, ";

nlohmann::ordered_json trace_to_json(const Trace& t);
Trace trace_from_json(const nlohmann::json& j);
std::string traces_to_jsonl(const std::vector<Trace>& traces);
std::vector<Trace> traces_from_jsonl(const std::string& content);

}  // namespace si::engine

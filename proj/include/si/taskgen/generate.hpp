#pragma once

#include <cstdint>

#include "si/taskgen/problem.hpp"

namespace si::taskgen {

struct SizeParams {
  int min_entities = 4;
  int max_entities = 8;
  int min_rules = 4;
  int max_rules = 10;
  int min_facts = 4;
  int max_facts = 16;
  int min_distractor_rules = 2;
};

// Theories of the requested proof depth with a True/False statement,
// distractors included, verified against the prover. Deterministic per
// (depth, seed, count, size).
std::vector<Problem> gen_proofwriter(int depth, uint64_t seed, int count,
                                     const SizeParams& size = {});

// Time-stamped location narratives; task 1 asks for a person (1 supporting
// fact), task 2 for a held object (2 facts), task 3 for a dropped object
// (3 facts).
std::vector<Problem> gen_babi_location(int task, uint64_t seed, int count);

// Species fear rules plus instance facts; "what is <name> afraid of?".
std::vector<Problem> gen_babi_deduction(uint64_t seed, int count);

// Typed instances with colors; the gold answer is the majority color among
// same-type instances. Tie cases are excluded unless allow_ambiguous.
std::vector<Problem> gen_babi_induction(uint64_t seed, int count, bool allow_ambiguous = false);

// Dispatch by task name ("proofwriter" uses `depth`).
std::vector<Problem> generate(const std::string& task, int depth, uint64_t seed, int count,
                              const SizeParams& size = {});

bool valid_proofwriter_depth(int depth);

}  // namespace si::taskgen

#pragma once

#include <string>
#include <vector>

#include "si/logic/form.hpp"

namespace si::logic {

// One labeled context sentence with its parsed form.
struct Sentence {
  std::string label;  // "sent k", 1-based over the original context
  std::string text;
  Form form;
  int context_index = 0;
};

// A labeled context: facts and rules, plus the entity universe they mention.
class Theory {
 public:
  // Parses every line; throws UnparsableSentence/AmbiguousSentence.
  static Theory from_texts(const std::vector<std::string>& texts);
  // Skips lines outside the grammar (event narratives, junk inferences);
  // labels still follow the original line positions.
  static Theory from_texts_lenient(const std::vector<std::string>& texts);

  const std::vector<Sentence>& sentences() const { return sentences_; }
  const std::vector<Term>& entities() const { return entities_; }
  int context_size() const { return context_size_; }

 private:
  static Theory build(const std::vector<std::string>& texts, bool lenient);
  std::vector<Sentence> sentences_;
  std::vector<Term> entities_;  // first-mention order
  int context_size_ = 0;
};

struct ProofStep {
  std::vector<std::string> premise_labels;  // rule label first, then facts in condition order
  Literal conclusion;
  std::string conclusion_text;
  int depth = 1;
};

struct Proof {
  std::vector<ProofStep> steps;
  int depth() const { return steps.empty() ? 0 : steps.back().depth; }
};

}  // namespace si::logic

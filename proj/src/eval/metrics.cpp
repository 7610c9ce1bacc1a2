#include "si/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "si/errors.hpp"
#include "si/eval/textnorm.hpp"
#include "si/logic/prover.hpp"
#include "si/logic/render.hpp"

namespace si::eval {

bool generative_match(const std::string& predicted, const std::string& gold) {
  return normalize_alpha(first_sentence(predicted)) == normalize_alpha(gold);
}

LabelVerdict proofwriter_label(const std::vector<std::string>& stated_facts,
                               const std::vector<std::string>& inferences,
                               const logic::Literal& statement) {
  std::string want = normalize_alpha(logic::render_statement(statement));
  std::string want_neg = normalize_alpha(logic::render_statement(logic::negate(statement)));
  LabelVerdict out;
  auto scan = [&](const std::string& sentence, int step) {
    std::string got = normalize_alpha(first_sentence(sentence));
    if (got == want && !out.matched_at_step) {
      out.label = logic::Label::True;
      out.matched_at_step = step;
    }
    if (got == want_neg) out.negation_matched = true;
  };
  for (const auto& s : stated_facts) scan(s, 0);
  for (size_t i = 0; i < inferences.size(); ++i) scan(inferences[i], static_cast<int>(i) + 1);
  return out;
}

int multichoice_pick(backend::Backend& backend, const std::string& prompt,
                     const std::vector<std::string>& choices, bool normalize) {
  if (choices.size() < 2) throw Error("multichoice needs at least 2 choices");
  int best = -1;
  double best_score = 0.0;
  for (size_t i = 0; i < choices.size(); ++i) {
    auto r = backend.score({prompt, " " + choices[i]});
    double value = normalize ? r.logprob / std::max(1, r.token_count) : r.logprob;
    if (best < 0 || value > best_score) {
      best = static_cast<int>(i);
      best_score = value;
    }
  }
  return best;
}

double jaccard_trace(const std::vector<std::string>& model_steps,
                     const std::vector<std::string>& gold_steps) {
  std::set<std::string> m, g;
  for (const auto& s : model_steps) m.insert(normalize_alnum(s));
  for (const auto& s : gold_steps) g.insert(normalize_alnum(s));
  if (m.empty() && g.empty()) return 1.0;
  size_t both = 0;
  for (const auto& s : m)
    if (g.count(s)) ++both;
  size_t either = m.size() + g.size() - both;
  return static_cast<double>(both) / static_cast<double>(either);
}

ZTestResult two_prop_ztest(int successes_a, int n_a, int successes_b, int n_b) {
  if (n_a < 1 || n_b < 1)
    throw InvalidCounts("sample sizes must be >= 1");
  if (successes_a < 0 || successes_a > n_a || successes_b < 0 || successes_b > n_b)
    throw InvalidCounts("successes must lie in [0, n]");
  double pa = static_cast<double>(successes_a) / n_a;
  double pb = static_cast<double>(successes_b) / n_b;
  double pooled = static_cast<double>(successes_a + successes_b) / (n_a + n_b);
  double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / n_a + 1.0 / n_b));
  ZTestResult out;
  if (se == 0.0) return out;  // both proportions 0 or 1: no difference
  out.z = (pa - pb) / se;
  out.p = std::erfc(std::abs(out.z) / std::sqrt(2.0));
  return out;
}

nlohmann::ordered_json EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["task"] = task;
  j["n"] = n;
  j["accuracy"] = accuracy;
  if (mean_jaccard) j["mean_jaccard"] = *mean_jaccard;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["predicted"] = r.predicted;
    row["gold"] = r.gold;
    row["correct"] = r.correct;
    if (r.jaccard) row["jaccard"] = *r.jaccard;
    rows.push_back(std::move(row));
  }
  j["records"] = std::move(rows);
  return j;
}

std::string EvalReport::summary_line() const {
  char buf[160];
  if (mean_jaccard) {
    std::snprintf(buf, sizeof(buf), "%-14s n=%-5d accuracy=%.4f mean_jaccard=%.4f", task.c_str(),
                  n, accuracy, *mean_jaccard);
  } else {
    std::snprintf(buf, sizeof(buf), "%-14s n=%-5d accuracy=%.4f", task.c_str(), n, accuracy);
  }
  return buf;
}

EvalReport aggregate(std::vector<EvalRecord> records, const std::string& task) {
  if (records.empty()) throw EmptyInput();
  std::sort(records.begin(), records.end(),
            [](const EvalRecord& a, const EvalRecord& b) { return a.id < b.id; });
  EvalReport report;
  report.task = task;
  report.n = static_cast<int>(records.size());
  int correct = 0;
  double jac_sum = 0.0;
  int jac_n = 0;
  for (const auto& r : records) {
    correct += r.correct ? 1 : 0;
    if (r.jaccard) {
      jac_sum += *r.jaccard;
      ++jac_n;
    }
  }
  report.accuracy = static_cast<double>(correct) / report.n;
  if (jac_n > 0) report.mean_jaccard = jac_sum / jac_n;
  report.records = std::move(records);
  return report;
}

}  // namespace si::eval

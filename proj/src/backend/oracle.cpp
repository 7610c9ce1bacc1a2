#include "si/backend/oracle.hpp"

#include <algorithm>
#include <map>

#include "si/errors.hpp"
#include "si/logic/parse.hpp"
#include "si/logic/prover.hpp"
#include "si/logic/render.hpp"
#include "si/taskgen/babi.hpp"
#include "si/util/text.hpp"

namespace si::backend {

using logic::Literal;
using logic::Rule;

namespace {

constexpr const char* kSentinel = ". Therefore, ";

std::string last_block(const std::string& prompt) {
  size_t pos = prompt.rfind("\n\n");
  return pos == std::string::npos ? prompt : prompt.substr(pos + 2);
}

bool is_header(const std::string& line) {
  return line == "Here are some facts and rules:" || line == "Story:";
}

struct SelectionPromptView {
  std::vector<std::string> context;
  std::string question;
  std::string partial;
};

// The final block of a selection prompt: context lines, a question line,
// and the cue line ("Reasoning:"/"Reason:") carrying the partial selection.
std::optional<SelectionPromptView> parse_selection_block(const std::string& block) {
  auto lines = split_lines(block);
  if (lines.size() < 3) return std::nullopt;
  std::string cue_line = lines.back();
  std::string cue;
  for (const char* c : {"Reasoning:", "Reason:"}) {
    if (starts_with(cue_line, c)) cue = c;
  }
  if (cue.empty()) return std::nullopt;
  SelectionPromptView v;
  v.partial = trim(cue_line.substr(cue.size()));
  v.question = lines[lines.size() - 2];
  if (starts_with(v.question, "Question: ")) v.question = v.question.substr(10);
  for (size_t i = 0; i + 2 < lines.size(); ++i) {
    if (is_header(lines[i])) continue;
    std::string line = lines[i];
    if (starts_with(line, "Context: ")) line = line.substr(9);
    if (!trim(line).empty()) v.context.push_back(line);
  }
  return v;
}

std::string sniff_task(const std::string& question) {
  std::string q = lowercase(question);
  if (q.find("does it imply") != std::string::npos) return "proofwriter";
  if (starts_with(q, "where is")) return "location";
  if (q.find("afraid of") != std::string::npos) return "babi15";
  if (starts_with(q, "what color")) return "babi16";
  return "";
}

std::vector<std::string> strip_periods(const std::vector<std::string>& texts) {
  std::vector<std::string> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(strip_period(t));
  return out;
}

}  // namespace

std::vector<std::string> split_selection_frame(const std::string& selection_text) {
  std::vector<std::string> parts;
  std::string rest = selection_text;
  const std::string know = ". We know that ";
  size_t pos = rest.find(know);
  if (pos == std::string::npos) {
    parts.push_back(strip_period(rest));
    return parts;
  }
  parts.push_back(strip_period(rest.substr(0, pos)));
  rest = rest.substr(pos + know.size());
  const std::string conj = " and ";
  size_t start = 0;
  while (true) {
    size_t at = rest.find(conj, start);
    if (at == std::string::npos) break;
    parts.push_back(strip_period(rest.substr(0, at)));
    rest = rest.substr(at + conj.size());
    start = 0;
  }
  parts.push_back(strip_period(rest));
  return parts;
}

OracleBackend::Plan OracleBackend::plan_for(const std::vector<std::string>& context,
                                            const std::string& question) {
  std::string task = task_.empty() ? sniff_task(question) : task_;
  if (task == "babi1" || task == "babi2" || task == "babi3") task = "location";

  Plan plan;
  if (task == "proofwriter") {
    auto stmt_text = [&]() -> std::optional<std::string> {
      size_t a = question.find('"');
      size_t b = question.rfind('"');
      if (a == std::string::npos || b <= a) return std::nullopt;
      return question.substr(a + 1, b - a - 1);
    }();
    if (!stmt_text) return plan;
    Literal statement;
    try {
      auto form = logic::parse_sentence(*stmt_text);
      if (!std::holds_alternative<Literal>(form)) return plan;
      statement = std::get<Literal>(form);
    } catch (const Error&) {
      return plan;
    }
    auto theory = logic::Theory::from_texts_lenient(context);
    std::optional<logic::NextStep> next;
    try {
      next = logic::next_proofwriter_step(theory, statement);
    } catch (const ContradictoryTheory&) {
      return plan;
    }
    if (!next) return plan;
    if (next->restatement) {
      plan.premises.push_back(strip_period(context[next->fact_context_indices[0]]));
    } else {
      plan.premises.push_back(strip_period(context[next->rule_context_index]));
      for (int idx : next->fact_context_indices)
        plan.premises.push_back(strip_period(context[idx]));
    }
    return plan;
  }

  if (task == "location") {
    std::string name = lowercase(trim(question));
    if (starts_with(name, "where is ")) name = name.substr(9);
    bool about_person = !starts_with(name, "the ");
    if (!about_person) name = name.substr(4);
    if (!name.empty() && name.back() == '?') name.pop_back();
    name = trim(name);
    std::vector<taskgen::Event> events;
    std::vector<int> line_of;
    for (size_t i = 0; i < context.size(); ++i) {
      if (auto e = taskgen::parse_event(context[i])) {
        events.push_back(*e);
        line_of.push_back(static_cast<int>(i));
      }
    }
    auto supports = taskgen::find_location_supports(events, name, about_person);
    if (!supports) return plan;
    for (int idx : supports->event_indices)
      plan.premises.push_back(strip_period(context[line_of[idx]]));
    return plan;
  }

  if (task == "babi15") {
    // "what is <name> afraid of?"
    auto words = split_ws(lowercase(question));
    if (words.size() < 3) return plan;
    std::string name = words[2];
    std::optional<std::string> species;
    std::optional<size_t> instance_line;
    std::map<std::string, size_t> rule_lines;
    for (size_t i = 0; i < context.size(); ++i) {
      try {
        auto form = logic::parse_sentence(context[i]);
        if (std::holds_alternative<Literal>(form)) {
          const auto& l = std::get<Literal>(form);
          if (l.positive && logic::is_species(l.predicate) && l.subject.name == name) {
            species = l.predicate;
            instance_line = i;
          }
        } else {
          const auto& r = std::get<Rule>(form);
          if (r.surface == logic::RuleSurface::species_fear)
            rule_lines[r.conditions[0].predicate] = i;
        }
      } catch (const Error&) {
        continue;
      }
    }
    if (!species || !rule_lines.count(*species)) return plan;
    plan.premises.push_back(strip_period(context[*instance_line]));
    plan.premises.push_back(strip_period(context[rule_lines[*species]]));
    return plan;
  }

  if (task == "babi16") {
    // "what color is <name>?"
    auto words = split_ws(lowercase(question));
    if (words.size() < 4) return plan;
    std::string name = words[3];
    if (!name.empty() && name.back() == '?') name.pop_back();

    struct Fact {
      std::string subject, predicate;
      size_t line;
    };
    std::vector<Fact> types, colors;
    for (size_t i = 0; i < context.size(); ++i) {
      try {
        auto form = logic::parse_sentence(context[i]);
        if (!std::holds_alternative<Literal>(form)) continue;
        const auto& l = std::get<Literal>(form);
        if (!l.positive || l.object) continue;
        if (logic::is_species(l.predicate)) types.push_back({l.subject.name, l.predicate, i});
        else colors.push_back({l.subject.name, l.predicate, i});
      } catch (const Error&) {
        continue;
      }
    }
    std::optional<Fact> target_type;
    for (const auto& t : types)
      if (t.subject == name && !target_type) target_type = t;
    if (!target_type) return plan;

    struct Donor {
      Fact type, color;
    };
    std::vector<Donor> donors;
    for (const auto& t : types) {
      if (t.subject == name || t.predicate != target_type->predicate) continue;
      for (const auto& c : colors) {
        if (c.subject == t.subject) {
          donors.push_back({t, c});
          break;
        }
      }
    }
    if (donors.empty()) return plan;
    std::map<std::string, int> tally;
    for (const auto& d : donors) ++tally[d.color.predicate];
    int best = 0;
    for (const auto& [_, n] : tally) best = std::max(best, n);
    // majority color; ties resolved by the most recently mentioned color
    std::string gold_color;
    size_t recent = 0;
    for (const auto& d : donors) {
      if (tally[d.color.predicate] != best) continue;
      if (gold_color.empty() || d.color.line >= recent) {
        gold_color = d.color.predicate;
        recent = d.color.line;
      }
    }
    const Donor* pick = nullptr;
    for (const auto& d : donors) {
      if (d.color.predicate != gold_color) continue;
      if (!pick || d.type.line < pick->type.line) pick = &d;
    }
    if (!pick) return plan;
    plan.premises.push_back(strip_period(context[target_type->line]));
    plan.premises.push_back(strip_period(context[pick->type.line]));
    plan.premises.push_back(strip_period(context[pick->color.line]));
    return plan;
  }

  return plan;
}

ScoreResult OracleBackend::score(const ScoreRequest& req) {
  auto view = parse_selection_block(last_block(req.prefix));
  int tokens = std::max<int>(1, static_cast<int>(split_ws(req.continuation).size()));
  if (!view) return {kOtherScore, tokens};

  Plan plan;
  {
    std::string key = join(view->context, "\n") + "\n#" + view->question;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, plan_for(view->context, view->question)).first;
    plan = it->second;
  }

  size_t have = view->partial.empty() ? 0 : split_selection_frame(view->partial).size();

  if (req.continuation == kSentinel)
    return {have >= plan.premises.size() && !plan.premises.empty() ? kGoldScore : kOtherScore, 2};

  std::string core = req.continuation;
  if (starts_with(core, ". We know that ")) core = core.substr(15);
  else if (starts_with(core, " and ")) core = core.substr(5);
  else if (starts_with(core, " ")) core = core.substr(1);
  core = strip_period(core);

  bool gold = have < plan.premises.size() && core == plan.premises[have];
  return {gold ? kGoldScore : kOtherScore, tokens};
}

std::string OracleBackend::generate(const GenerateRequest& req) {
  std::string block = last_block(req.prefix);
  const std::string suffix = ". Therefore,";
  if (!ends_with(block, suffix))
    throw OracleNoMatch("prompt is not an inference prompt (no trailing \"" + suffix + "\")");
  std::string selection = block.substr(0, block.size() - suffix.size());
  auto pieces = split_selection_frame(selection);
  if (pieces.empty()) throw OracleNoMatch("empty selection");

  // Event pieces take the location-task path.
  std::vector<taskgen::Event> events;
  for (const auto& p : pieces) {
    if (auto e = taskgen::parse_event(p)) events.push_back(*e);
  }
  if (!events.empty()) {
    if (events.size() != pieces.size())
      throw OracleNoMatch("selection mixes narrative events with other facts");
    if (events.size() == 1 && events[0].kind == taskgen::EventKind::move)
      return " " + events[0].person + " is in the " + events[0].room + ".";
    const taskgen::Event* pickup = nullptr;
    const taskgen::Event* move = nullptr;
    for (const auto& e : events) {
      if (e.kind == taskgen::EventKind::pickup) pickup = &e;
      if (e.kind == taskgen::EventKind::move) move = &e;
    }
    if (pickup && move) return " the " + pickup->object + " is in the " + move->room + ".";
    throw OracleNoMatch("events do not determine a location");
  }

  std::vector<Literal> facts;
  std::optional<Rule> rule;
  std::vector<std::string> fact_texts;
  for (const auto& p : pieces) {
    logic::Form form;
    try {
      form = logic::parse_sentence(p);
    } catch (const Error&) {
      throw OracleNoMatch("selection sentence outside the grammar: " + p);
    }
    if (std::holds_alternative<Rule>(form)) {
      if (rule) throw OracleNoMatch("selection contains two rules");
      rule = std::get<Rule>(form);
    } else {
      facts.push_back(std::get<Literal>(form));
      fact_texts.push_back(p);
    }
  }

  if (rule) {
    Literal conclusion;
    try {
      conclusion = logic::single_step_entail(*rule, facts);
    } catch (const Error& e) {
      throw OracleNoMatch(e.what());
    }
    if (rule->surface == logic::RuleSurface::species_fear)
      return " " + conclusion.subject.name + " is afraid of " + conclusion.object->name + ".";
    if (rule->surface == logic::RuleSurface::species_often)
      return " " + conclusion.subject.name + " is " + conclusion.predicate + ".";
    return " " + logic::render(conclusion);
  }

  if (facts.size() == 1) return " " + strip_period(fact_texts[0]) + ".";

  // induction: two facts about one instance induce a rule, three facts
  // transfer a color across same-type instances
  auto is_type = [](const Literal& l) {
    return l.positive && !l.object && logic::is_species(l.predicate);
  };
  auto is_plain = [](const Literal& l) {
    return l.positive && !l.object && !logic::is_species(l.predicate);
  };
  if (facts.size() == 2 && is_type(facts[0]) && is_plain(facts[1]) &&
      facts[0].subject == facts[1].subject) {
    return " " + logic::species_plural(facts[0].predicate) + " are often " + facts[1].predicate +
           ".";
  }
  if (facts.size() == 3 && is_type(facts[0]) && is_type(facts[1]) && is_plain(facts[2]) &&
      facts[0].predicate == facts[1].predicate && facts[1].subject == facts[2].subject &&
      !(facts[0].subject == facts[1].subject)) {
    return " " + facts[0].subject.name + " is " + facts[2].predicate + ".";
  }

  throw OracleNoMatch("selection premises do not entail anything");
}

}  // namespace si::backend

#include "si/taskgen/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "si/errors.hpp"
#include "si/logic/parse.hpp"
#include "si/logic/prover.hpp"
#include "si/logic/render.hpp"
#include "si/taskgen/babi.hpp"
#include "si/util/rng.hpp"
#include "si/util/text.hpp"

namespace si::taskgen {

using logic::entity;
using logic::Label;
using logic::Literal;
using logic::Rule;
using logic::RuleSurface;
using logic::Term;
using logic::Theory;
using logic::var;
using logic::VarStyle;

namespace {

const std::vector<std::string> kPeople = {"gina", "hugo", "iris", "jack",
                                          "kara", "liam", "mona", "nate"};
const std::vector<std::string> kAnimals = {"tiger", "fox",   "camel", "hippo",
                                           "panda", "otter", "zebra", "goat"};
const std::vector<std::string> kAdjectives = {"cold", "quiet", "big",   "blue",  "rough",
                                              "kind", "nice",  "round", "white", "green",
                                              "red",  "young", "smart", "furry"};
const std::vector<std::string> kVerbs = {"like", "chase", "eat", "see", "need", "visit"};

const std::vector<std::string> kBabiPeople = {"sandra", "fred", "julie", "bill"};
const std::vector<std::string> kBabiObjects = {"milk", "juice", "ball", "box"};
const std::vector<std::string> kSpecies = {"wolf", "mouse", "cat", "sheep"};
const std::vector<std::string> kFearNames = {"lucy", "marcus", "nina", "oscar", "petra", "stan"};
const std::vector<std::string> kTypes = {"rhino", "lion", "swan", "frog"};
const std::vector<std::string> kColors = {"white", "green", "yellow", "gray"};
const std::vector<std::string> kColorNames = {"alfred", "betty", "clara",
                                              "derek",  "elsa",  "felix"};

std::string problem_id(const std::string& task, int depth, uint64_t seed, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d", index);
  std::string d = task == "proofwriter" ? "-d" + std::to_string(depth) : "";
  return task + d + "-s" + std::to_string(seed) + "-" + buf;
}

// ---------------------------------------------------------------------------
// proofwriter

struct ChainPiece {
  Rule rule;
  std::vector<Literal> side_facts;  // stated facts the rule needs besides the chain
};

struct Draft {
  std::vector<Rule> rules;
  std::vector<Literal> facts;
  Literal statement;
  Label label = Label::True;
  bool facts_first = false;
};

Rule make_chain_rule(Rng& rng, bool people, const std::vector<Literal>& conditions,
                     const Literal& conclusion) {
  Rule r;
  r.conditions = conditions;
  r.conclusion = conclusion;
  r.style = people ? VarStyle::someone : VarStyle::something;
  bool plural_ok = true;
  for (const auto& c : r.conditions)
    if (!c.positive || c.object || !c.subject.variable) plural_ok = false;
  if (!r.conclusion.subject.variable || r.conclusion.object) plural_ok = false;
  if (plural_ok && r.conditions.size() <= 2) {
    switch (rng.below(3)) {
      case 0: r.surface = RuleSurface::if_then; break;
      case 1: r.surface = RuleSurface::all_block; break;
      default: r.surface = RuleSurface::bare_plural; break;
    }
  } else {
    r.surface = RuleSurface::if_then;
  }
  return r;
}

// A gold chain of exactly `depth` rule applications about one carrier
// entity, plus the stated facts it needs.
Draft sample_chain(Rng& rng, int depth, bool people, const std::vector<Term>& entities,
                   std::vector<std::string> adj_pool) {
  Draft d;
  rng.shuffle(adj_pool);
  size_t next_adj = 0;
  auto take_adj = [&]() {
    if (next_adj >= adj_pool.size()) throw Error("adjective pool exhausted");
    return adj_pool[next_adj++];
  };

  Term carrier = entities[0];
  bool carrier_positive = !rng.chance(0.25);
  std::string carrier_pred = take_adj();

  bool verb_start = !people && depth >= 1 && rng.chance(0.35);
  Literal base_fact;
  if (verb_start) {
    // "the cow chases the squirrel" feeding "If something chases the
    // squirrel then the squirrel is big."; the chain carrier switches to
    // the object entity.
    Term actor = entities[1 % entities.size()];
    base_fact = Literal{true, rng.pick(kVerbs), actor, carrier};
  } else {
    base_fact = Literal{carrier_positive, carrier_pred, carrier, std::nullopt};
  }
  d.facts.push_back(base_fact);

  Literal prev = base_fact;
  for (int step = 0; step < depth; ++step) {
    bool switching = step == 0 && verb_start;  // "If something chases the X then the X is ..."
    bool ground_rule = !switching && rng.chance(0.15);
    Literal cond = prev;
    if (!ground_rule && !switching) cond.subject = var();
    if (switching) cond.subject = var();  // variable binds the actor; conclusion names the object
    std::vector<Literal> conditions = {cond};

    Literal conclusion;
    conclusion.positive = !rng.chance(0.3);
    conclusion.predicate = take_adj();
    if (switching || ground_rule) conclusion.subject = carrier;
    else conclusion.subject = var();

    // optional side condition backed by a stated fact about the carrier
    if (!switching && rng.chance(0.45)) {
      Literal side;
      bool side_verb = !people && rng.chance(0.3);
      if (side_verb) {
        Term other = entities[rng.below(entities.size())];
        side = Literal{!rng.chance(0.2), rng.pick(kVerbs), carrier, other};
      } else {
        side = Literal{!rng.chance(0.25), take_adj(), carrier, std::nullopt};
      }
      d.facts.push_back(side);
      Literal side_cond = side;
      if (!ground_rule) side_cond.subject = var();
      conditions.push_back(side_cond);
    }

    d.rules.push_back(make_chain_rule(rng, people, conditions, conclusion));
    prev = conclusion;
    prev.subject = carrier;
  }

  Literal final_fact = prev;
  if (final_fact.subject.variable) final_fact.subject = carrier;
  bool make_true = rng.chance(0.5);
  d.label = make_true ? Label::True : Label::False;
  d.statement = make_true ? final_fact : logic::negate(final_fact);
  return d;
}

void add_distractors(Rng& rng, Draft& d, bool people, const std::vector<Term>& entities,
                     const std::vector<std::string>& spare_adjs, const SizeParams& size) {
  int extra_rules = size.min_distractor_rules + static_cast<int>(rng.below(3));
  for (int i = 0; i < extra_rules; ++i) {
    Rule r;
    r.style = people ? VarStyle::someone : VarStyle::something;
    Literal cond;
    cond.positive = !rng.chance(0.3);
    cond.predicate = rng.pick(spare_adjs);
    cond.subject = var();
    r.conditions.push_back(cond);
    if (rng.chance(0.3)) {
      Literal cond2{!rng.chance(0.3), rng.pick(spare_adjs), var(), std::nullopt};
      if (cond2.predicate != cond.predicate) r.conditions.push_back(cond2);
    }
    Literal concl;
    concl.positive = !rng.chance(0.3);
    concl.predicate = rng.pick(spare_adjs);
    while (concl.predicate == cond.predicate) concl.predicate = rng.pick(spare_adjs);
    concl.subject = rng.chance(0.85) ? var() : entities[rng.below(entities.size())];
    r.conclusion = concl;
    r.surface = RuleSurface::if_then;
    bool plural_ok = r.conclusion.subject.variable;
    for (const auto& c : r.conditions)
      if (!c.positive) plural_ok = false;
    if (plural_ok && rng.chance(0.6)) {
      r.surface = rng.chance(0.5) ? RuleSurface::all_block : RuleSurface::bare_plural;
    }
    d.rules.push_back(r);
  }

  int target_facts = rng.range(size.min_facts, size.max_facts);
  int guard = 0;
  while (static_cast<int>(d.facts.size()) < target_facts && guard++ < 64) {
    Term subject = entities[rng.below(entities.size())];
    Literal f;
    if (!people && rng.chance(0.35)) {
      Term object = entities[rng.below(entities.size())];
      f = Literal{!rng.chance(0.25), rng.pick(kVerbs), subject, object};
    } else {
      f = Literal{!rng.chance(0.25), rng.pick(spare_adjs), subject, std::nullopt};
    }
    bool dup = false;
    for (const auto& existing : d.facts) {
      if (existing == f || existing == logic::negate(f)) {
        dup = true;
        break;
      }
    }
    if (!dup) d.facts.push_back(f);
  }
}

// Replays the oracle's step policy over a growing context and checks it
// reproduces the prover's gold conclusions in order.
bool verify_oracle_path(const std::vector<std::string>& context, const Literal& statement,
                        const std::vector<std::string>& want_conclusions) {
  std::vector<std::string> grown = context;
  for (const auto& want : want_conclusions) {
    auto next = logic::next_proofwriter_step(Theory::from_texts(grown), statement);
    if (!next || next->restatement) return false;
    if (next->conclusion_text != want) return false;
    grown.push_back(next->conclusion_text);
  }
  auto done = logic::next_proofwriter_step(Theory::from_texts(grown), statement);
  return done && done->restatement;
}

std::optional<Problem> try_proofwriter_problem(Rng& rng, int depth, const SizeParams& size) {
  bool people = rng.chance(0.5);
  std::vector<std::string> names = people ? kPeople : kAnimals;
  rng.shuffle(names);
  int n_entities = rng.range(size.min_entities, size.max_entities);
  std::vector<Term> entities;
  for (int i = 0; i < n_entities && i < static_cast<int>(names.size()); ++i)
    entities.push_back(entity(names[i], !people));

  Draft draft;
  try {
    draft = sample_chain(rng, depth, people, entities, kAdjectives);
  } catch (const Error&) {
    return std::nullopt;
  }

  // Adjectives not consumed by the chain feed the distractors.
  std::set<std::string> used;
  for (const auto& r : draft.rules) {
    for (const auto& c : r.conditions) used.insert(c.predicate);
    used.insert(r.conclusion.predicate);
  }
  for (const auto& f : draft.facts) used.insert(f.predicate);
  std::vector<std::string> spare;
  for (const auto& a : kAdjectives)
    if (!used.count(a)) spare.push_back(a);
  if (spare.size() < 2) return std::nullopt;

  add_distractors(rng, draft, people, entities, spare, size);
  if (static_cast<int>(draft.rules.size()) > size.max_rules) return std::nullopt;

  rng.shuffle(draft.rules);
  rng.shuffle(draft.facts);
  draft.facts_first = people;

  std::vector<std::string> context;
  if (draft.facts_first) {
    for (const auto& f : draft.facts) context.push_back(logic::render(f));
    for (const auto& r : draft.rules) context.push_back(logic::render(r));
  } else {
    for (const auto& r : draft.rules) context.push_back(logic::render(r));
    for (const auto& f : draft.facts) context.push_back(logic::render(f));
  }
  std::set<std::string> unique(context.begin(), context.end());
  if (unique.size() != context.size()) return std::nullopt;

  Theory theory;
  try {
    theory = Theory::from_texts(context);
  } catch (const Error&) {
    return std::nullopt;
  }

  // Verify: label, depth, step count, no contradictions anywhere.
  logic::ProveResult proved;
  try {
    proved = logic::prove(theory, draft.statement);
  } catch (const ContradictoryTheory&) {
    return std::nullopt;
  }
  if (proved.label != draft.label) return std::nullopt;
  if (!proved.proof) return std::nullopt;
  if (depth == 0) {
    if (!proved.proof->steps.empty()) return std::nullopt;
  } else {
    if (static_cast<int>(proved.proof->steps.size()) != depth) return std::nullopt;
    if (proved.proof->depth() != depth) return std::nullopt;
  }
  auto cl = logic::closure(theory);
  for (const auto& f : cl.facts())
    if (cl.contains(logic::negate(f.literal))) return std::nullopt;

  std::vector<std::string> conclusions;
  for (const auto& s : proved.proof->steps) conclusions.push_back(s.conclusion_text);
  if (!verify_oracle_path(context, draft.statement, conclusions)) return std::nullopt;

  Problem p;
  p.task = "proofwriter";
  p.context = context;
  p.question = "Does it imply that the statement \"" +
               logic::render_statement(draft.statement) + "\" is True?";
  p.choices = {"true", "false"};
  p.gold_label = draft.label;
  p.gold_answer = draft.label == Label::True ? "true" : "false";
  p.depth = depth;

  std::vector<GoldStep> gold;
  if (depth == 0) {
    Literal target = draft.label == Label::True ? draft.statement : logic::negate(draft.statement);
    std::string target_text = logic::render(target);
    for (size_t i = 0; i < context.size(); ++i) {
      if (context[i] == target_text) {
        gold.push_back({{"sent " + std::to_string(i + 1)}, target_text});
        break;
      }
    }
    if (gold.empty()) return std::nullopt;
  } else {
    for (const auto& s : proved.proof->steps) gold.push_back({s.premise_labels, s.conclusion_text});
  }
  p.gold_proof = std::move(gold);
  return p;
}

std::vector<Problem> gen_proofwriter_impl(int depth, uint64_t seed, int count,
                                          const SizeParams& size) {
  if (!valid_proofwriter_depth(depth))
    throw Error("no depth-" + std::to_string(depth) + " task (valid: 0, 1, 2, 3, 5)");
  if (count < 1) throw Error("count must be >= 1");
  std::vector<Problem> out;
  Rng root(splitmix64(seed) ^ 0x70726f6fULL);
  for (int i = 0; i < count; ++i) {
    std::optional<Problem> p;
    for (int attempt = 0; attempt < 200 && !p; ++attempt) {
      Rng rng = root.fork(static_cast<uint64_t>(i) * 1000 + attempt);
      p = try_proofwriter_problem(rng, depth, size);
    }
    if (!p) throw GenerationExhausted("proofwriter depth " + std::to_string(depth), seed);
    p->id = problem_id("proofwriter", depth, seed, i);
    out.push_back(std::move(*p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// babi location tasks

std::vector<Problem> gen_babi_location_impl(int task, uint64_t seed, int count) {
  if (task < 1 || task > 3) throw Error("location task must be 1, 2 or 3");
  std::vector<Problem> out;
  Rng root(splitmix64(seed) ^ 0x6261626cULL + static_cast<uint64_t>(task));
  std::string task_name = "babi" + std::to_string(task);

  for (int i = 0; i < count; ++i) {
    Rng rng = root.fork(i);
    std::vector<std::string> people = kBabiPeople;
    rng.shuffle(people);
    std::vector<std::string> objects = kBabiObjects;
    rng.shuffle(objects);

    std::vector<Event> events;
    int t = 0;
    auto move = [&](const std::string& person, const std::string& room) {
      events.push_back({t++, person, EventKind::move, rng.pick(kMoveVerbs), room, ""});
    };
    auto pickup = [&](const std::string& person, const std::string& object) {
      events.push_back({t++, person, EventKind::pickup, rng.pick(kPickupVerbs), "", object});
    };
    auto drop = [&](const std::string& person, const std::string& object) {
      events.push_back({t++, person, EventKind::drop, "dropped", "", object});
    };

    std::string actor = people[0];
    std::string other = people[1];
    std::string q_object = objects[0];
    std::string q_name;
    bool about_person = task == 1;

    if (task == 1) {
      int moves = rng.range(4, 8);
      for (int m = 0; m < moves; ++m)
        move(rng.chance(0.5) ? actor : other, rng.pick(kRooms));
      // everyone has at least one move
      if (std::none_of(events.begin(), events.end(),
                       [&](const Event& e) { return e.person == actor; }))
        move(actor, rng.pick(kRooms));
      if (std::none_of(events.begin(), events.end(),
                       [&](const Event& e) { return e.person == other; }))
        move(other, rng.pick(kRooms));
      q_name = rng.chance(0.5) ? actor : other;
    } else if (task == 2) {
      move(actor, rng.pick(kRooms));
      move(other, rng.pick(kRooms));
      if (rng.chance(0.5)) move(actor, rng.pick(kRooms));
      pickup(actor, q_object);
      if (rng.chance(0.6)) move(actor, rng.pick(kRooms));
      if (rng.chance(0.5)) move(other, rng.pick(kRooms));
      if (rng.chance(0.4)) {
        pickup(other, objects[1]);
        if (rng.chance(0.5)) drop(other, objects[1]);
      }
      q_name = q_object;
    } else {
      move(actor, rng.pick(kRooms));
      if (rng.chance(0.5)) move(other, rng.pick(kRooms));
      pickup(actor, q_object);
      move(actor, rng.pick(kRooms));
      if (rng.chance(0.4)) move(other, rng.pick(kRooms));
      drop(actor, q_object);
      if (rng.chance(0.5)) move(actor, rng.pick(kRooms));
      q_name = q_object;
    }

    auto supports = find_location_supports(events, q_name, about_person);
    if (!supports) throw GenerationExhausted(task_name, seed);

    Problem p;
    p.id = problem_id(task_name, 0, seed, i);
    p.task = task_name;
    for (const auto& e : events) p.context.push_back(format_event(e));
    p.question = about_person ? ("where is " + q_name + "?") : ("where is the " + q_name + "?");
    p.choices = kRooms;
    p.gold_answer = supports->room;
    p.depth = 1;
    GoldStep step;
    for (int idx : supports->event_indices)
      step.premises.push_back("sent " + std::to_string(idx + 1));
    step.conclusion = supports->conclusion;
    p.gold_proof = std::vector<GoldStep>{step};
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// babi 15 / 16

std::vector<Problem> gen_babi_deduction_impl(uint64_t seed, int count) {
  std::vector<Problem> out;
  Rng root(splitmix64(seed) ^ 0x66656172ULL);
  for (int i = 0; i < count; ++i) {
    Rng rng = root.fork(i);
    std::map<std::string, std::string> fear;  // species singular -> feared singular
    for (const auto& s : kSpecies) {
      std::string target = s;
      while (target == s) target = rng.pick(kSpecies);
      fear[s] = target;
    }
    std::vector<std::string> names = kFearNames;
    rng.shuffle(names);
    int n_instances = rng.range(3, 5);

    std::vector<std::string> context;
    std::vector<std::string> rule_texts;
    std::map<std::string, int> rule_line;     // species -> sentence index
    std::map<std::string, int> instance_line; // name -> sentence index
    std::map<std::string, std::string> instance_species;

    std::vector<std::pair<std::string, bool>> items;  // (payload, is_rule)
    for (const auto& s : kSpecies) items.emplace_back(s, true);
    for (int k = 0; k < n_instances; ++k) items.emplace_back(names[k], false);
    rng.shuffle(items);

    for (const auto& [payload, is_rule] : items) {
      if (is_rule) {
        rule_line[payload] = static_cast<int>(context.size());
        context.push_back(logic::species_plural(payload) + " are afraid of " +
                          logic::species_plural(fear[payload]));
      } else {
        std::string species = rng.pick(kSpecies);
        instance_species[payload] = species;
        instance_line[payload] = static_cast<int>(context.size());
        context.push_back(payload + " is a " + species);
      }
    }

    std::string q_name = names[rng.below(static_cast<uint64_t>(n_instances))];
    std::string species = instance_species[q_name];
    std::string answer = logic::species_plural(fear[species]);

    Problem p;
    p.id = problem_id("babi15", 0, seed, i);
    p.task = "babi15";
    p.context = context;
    p.question = "what is " + q_name + " afraid of?";
    for (const auto& s : kSpecies) p.choices.push_back(logic::species_plural(s));
    p.gold_answer = answer;
    p.depth = 1;
    GoldStep step;
    step.premises = {"sent " + std::to_string(instance_line[q_name] + 1),
                     "sent " + std::to_string(rule_line[species] + 1)};
    step.conclusion = q_name + " is afraid of " + answer + ".";
    p.gold_proof = std::vector<GoldStep>{step};
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Problem> gen_babi_induction_impl(uint64_t seed, int count, bool allow_ambiguous) {
  std::vector<Problem> out;
  Rng root(splitmix64(seed) ^ 0x636f6c6fULL);
  for (int i = 0; i < count; ++i) {
    std::optional<Problem> made;
    for (int attempt = 0; attempt < 100 && !made; ++attempt) {
      Rng rng = root.fork(static_cast<uint64_t>(i) * 100 + attempt);
      std::vector<std::string> names = kColorNames;
      rng.shuffle(names);
      std::string target = names.back();
      names.pop_back();
      int n_donors = rng.range(2, 4);
      std::string q_type = rng.pick(kTypes);

      struct Donor {
        std::string name, type, color;
      };
      std::vector<Donor> donors;
      int same_type = 0;
      for (int k = 0; k < n_donors; ++k) {
        Donor d;
        d.name = names[k];
        d.type = rng.chance(0.6) ? q_type : rng.pick(kTypes);
        d.color = rng.pick(kColors);
        if (d.type == q_type) ++same_type;
        donors.push_back(std::move(d));
      }
      if (same_type == 0) continue;

      // strict majority among same-type donors unless ambiguity is allowed
      std::map<std::string, int> tally;
      for (const auto& d : donors)
        if (d.type == q_type) ++tally[d.color];
      int best = 0;
      std::string majority;
      bool tie = false;
      for (const auto& [color, n] : tally) {
        if (n > best) {
          best = n;
          majority = color;
          tie = false;
        } else if (n == best) {
          tie = true;
        }
      }
      if (tie && !allow_ambiguous) continue;

      std::vector<std::string> context;
      std::map<std::string, int> type_line, color_line;
      std::vector<std::pair<std::string, std::string>> lines;  // (name or "", text)
      for (const auto& d : donors) {
        lines.emplace_back(d.name + "#type", d.name + " is a " + d.type);
        lines.emplace_back(d.name + "#color", d.name + " is " + d.color);
      }
      lines.emplace_back(target + "#type", target + " is a " + q_type);
      rng.shuffle(lines);
      std::map<std::string, int> line_of;
      for (const auto& [key, text] : lines) {
        line_of[key] = static_cast<int>(context.size());
        context.push_back(text);
      }

      std::string gold_color = majority;
      if (tie) {
        // most recently mentioned color among the tied donors
        int best_line = -1;
        for (const auto& d : donors) {
          if (d.type != q_type || tally[d.color] != best) continue;
          int line = line_of[d.name + "#color"];
          if (line > best_line) {
            best_line = line;
            gold_color = d.color;
          }
        }
      }

      // gold donor: lowest type-fact line among majority-color donors
      std::string donor_name;
      int donor_line = 1 << 30;
      for (const auto& d : donors) {
        if (d.type != q_type || d.color != gold_color) continue;
        int line = line_of[d.name + "#type"];
        if (line < donor_line) {
          donor_line = line;
          donor_name = d.name;
        }
      }
      if (donor_name.empty()) continue;

      Problem p;
      p.id = problem_id("babi16", 0, seed, i);
      p.task = "babi16";
      p.context = context;
      p.question = "what color is " + target + "?";
      p.choices = kColors;
      p.gold_answer = gold_color;
      p.depth = 1;
      GoldStep step;
      step.premises = {"sent " + std::to_string(line_of[target + "#type"] + 1),
                       "sent " + std::to_string(line_of[donor_name + "#type"] + 1),
                       "sent " + std::to_string(line_of[donor_name + "#color"] + 1)};
      step.conclusion = target + " is " + gold_color + ".";
      p.gold_proof = std::vector<GoldStep>{step};
      made = std::move(p);
    }
    if (!made) throw GenerationExhausted("babi16", seed);
    out.push_back(std::move(*made));
  }
  return out;
}

}  // namespace

bool valid_proofwriter_depth(int depth) {
  return depth == 0 || depth == 1 || depth == 2 || depth == 3 || depth == 5;
}

std::vector<Problem> gen_proofwriter(int depth, uint64_t seed, int count, const SizeParams& size) {
  return gen_proofwriter_impl(depth, seed, count, size);
}

std::vector<Problem> gen_babi_location(int task, uint64_t seed, int count) {
  return gen_babi_location_impl(task, seed, count);
}

std::vector<Problem> gen_babi_deduction(uint64_t seed, int count) {
  return gen_babi_deduction_impl(seed, count);
}

std::vector<Problem> gen_babi_induction(uint64_t seed, int count, bool allow_ambiguous) {
  return gen_babi_induction_impl(seed, count, allow_ambiguous);
}

std::vector<Problem> generate(const std::string& task, int depth, uint64_t seed, int count,
                              const SizeParams& size) {
  if (task == "proofwriter") return gen_proofwriter(depth, seed, count, size);
  if (task == "babi1") return gen_babi_location(1, seed, count);
  if (task == "babi2") return gen_babi_location(2, seed, count);
  if (task == "babi3") return gen_babi_location(3, seed, count);
  if (task == "babi15") return gen_babi_deduction(seed, count);
  if (task == "babi16") return gen_babi_induction(seed, count);
  throw Error("unknown task: " + task);
}

}  // namespace si::taskgen

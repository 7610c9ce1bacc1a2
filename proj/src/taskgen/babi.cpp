#include "si/taskgen/babi.hpp"

#include "si/util/text.hpp"

namespace si::taskgen {

const std::vector<std::string> kRooms = {"hallway", "bathroom", "bedroom",
                                         "garden",  "kitchen",  "office"};
const std::vector<std::string> kMoveVerbs = {"went to", "journeyed to", "travelled to",
                                             "moved to", "went back to"};
const std::vector<std::string> kPickupVerbs = {"grabbed", "got", "took", "picked up"};

std::string format_event(const Event& e) {
  std::string head = "at t=" + std::to_string(e.t) + " " + e.person + " ";
  switch (e.kind) {
    case EventKind::move:
      return head + e.verb + " the " + e.room;
    case EventKind::pickup:
      return head + e.verb + " the " + e.object + " there";
    case EventKind::drop:
      return head + "dropped the " + e.object;
  }
  return head;
}

std::optional<Event> parse_event(const std::string& line) {
  auto toks = split_ws(lowercase(trim(line)));
  if (toks.size() < 5 || toks[0] != "at" || !starts_with(toks[1], "t=")) return std::nullopt;
  Event e;
  try {
    e.t = std::stoi(toks[1].substr(2));
  } catch (...) {
    return std::nullopt;
  }
  e.person = toks[2];
  size_t i = 3;
  auto rest_is = [&](std::initializer_list<const char*> words) {
    size_t j = i;
    for (const char* w : words) {
      if (j >= toks.size() || toks[j] != w) return false;
      ++j;
    }
    return true;
  };
  for (const auto& verb : kMoveVerbs) {
    auto verb_toks = split_ws(verb);
    bool match = true;
    size_t j = i;
    for (const auto& vt : verb_toks) {
      if (j >= toks.size() || toks[j] != vt) {
        match = false;
        break;
      }
      ++j;
    }
    if (match && j + 2 == toks.size() && toks[j] == "the") {
      e.kind = EventKind::move;
      e.verb = verb;
      e.room = toks[j + 1];
      return e;
    }
  }
  for (const auto& verb : kPickupVerbs) {
    auto verb_toks = split_ws(verb);
    bool match = true;
    size_t j = i;
    for (const auto& vt : verb_toks) {
      if (j >= toks.size() || toks[j] != vt) {
        match = false;
        break;
      }
      ++j;
    }
    if (match && j + 3 == toks.size() && toks[j] == "the" && toks[j + 2] == "there") {
      e.kind = EventKind::pickup;
      e.verb = verb;
      e.object = toks[j + 1];
      return e;
    }
  }
  if (rest_is({"dropped", "the"}) && i + 3 == toks.size()) {
    e.kind = EventKind::drop;
    e.verb = "dropped";
    e.object = toks[i + 2];
    return e;
  }
  return std::nullopt;
}

namespace {

std::optional<int> last_move_at_or_before(const std::vector<Event>& events,
                                          const std::string& person, int t_limit) {
  std::optional<int> best;
  for (size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.kind == EventKind::move && e.person == person && e.t <= t_limit) {
      if (!best || events[*best].t < e.t) best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

std::optional<LocationSupports> find_location_supports(const std::vector<Event>& events,
                                                       const std::string& name,
                                                       bool about_person) {
  LocationSupports out;
  int t_max = 0;
  for (const auto& e : events) t_max = std::max(t_max, e.t);

  if (about_person) {
    auto move = last_move_at_or_before(events, name, t_max);
    if (!move) return std::nullopt;
    out.event_indices = {*move};
    out.room = events[*move].room;
    out.conclusion = name + " is in the " + out.room + ".";
    return out;
  }

  // Object: who picked it up last, and did they drop it afterwards.
  std::optional<int> pickup;
  for (size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.kind == EventKind::pickup && e.object == name) {
      if (!pickup || events[*pickup].t < e.t) pickup = static_cast<int>(i);
    }
  }
  if (!pickup) return std::nullopt;
  const std::string& holder = events[*pickup].person;

  std::optional<int> drop;
  for (size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.kind == EventKind::drop && e.object == name && e.person == holder &&
        e.t > events[*pickup].t) {
      if (!drop || events[*drop].t > e.t) drop = static_cast<int>(i);
    }
  }

  std::optional<int> move;
  if (drop) {
    move = last_move_at_or_before(events, holder, events[*drop].t);
  } else {
    move = last_move_at_or_before(events, holder, t_max);
  }
  if (!move) return std::nullopt;

  out.event_indices = {*pickup, *move};
  if (drop) out.event_indices.push_back(*drop);
  out.room = events[*move].room;
  out.conclusion = "the " + name + " is in the " + out.room + ".";
  return out;
}

}  // namespace si::taskgen

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace si::taskgen {

// Time-stamped narrative events for the location tasks.
enum class EventKind { move, pickup, drop };

struct Event {
  int t = 0;
  std::string person;
  EventKind kind = EventKind::move;
  std::string verb;    // surface verb phrase: "went to", "picked up", "dropped", ...
  std::string room;    // move
  std::string object;  // pickup / drop
};

extern const std::vector<std::string> kRooms;
extern const std::vector<std::string> kMoveVerbs;    // "... to the <room>"
extern const std::vector<std::string> kPickupVerbs;  // "... the <object> there"

std::string format_event(const Event& e);
std::optional<Event> parse_event(const std::string& line);

// Supporting sentences for a location question over a narrative, in
// selection order, plus the answer room.
struct LocationSupports {
  std::vector<int> event_indices;  // indices into the events vector
  std::string room;
  std::string conclusion;  // "the milk is in the office." / "sandra is in the office."
};

// `name` is a person (about_person) or an object.
std::optional<LocationSupports> find_location_supports(const std::vector<Event>& events,
                                                       const std::string& name,
                                                       bool about_person);

}  // namespace si::taskgen

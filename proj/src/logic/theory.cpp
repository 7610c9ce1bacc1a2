#include "si/logic/theory.hpp"

#include <algorithm>

#include "si/errors.hpp"
#include "si/logic/parse.hpp"

namespace si::logic {

namespace {

void collect_entity(std::vector<Term>& out, const Term& t) {
  if (t.variable) return;
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
}

void collect_entities(std::vector<Term>& out, const Literal& l) {
  collect_entity(out, l.subject);
  if (l.object) collect_entity(out, *l.object);
}

}  // namespace

Theory Theory::build(const std::vector<std::string>& texts, bool lenient) {
  Theory th;
  th.context_size_ = static_cast<int>(texts.size());
  for (size_t i = 0; i < texts.size(); ++i) {
    Form form;
    try {
      form = parse_sentence(texts[i]);
    } catch (const Error&) {
      if (lenient) continue;
      throw;
    }
    Sentence s;
    s.label = "sent " + std::to_string(i + 1);
    s.text = texts[i];
    s.form = std::move(form);
    s.context_index = static_cast<int>(i);
    if (std::holds_alternative<Literal>(s.form)) {
      collect_entities(th.entities_, std::get<Literal>(s.form));
    } else {
      const auto& r = std::get<Rule>(s.form);
      for (const auto& c : r.conditions) collect_entities(th.entities_, c);
      collect_entities(th.entities_, r.conclusion);
    }
    th.sentences_.push_back(std::move(s));
  }
  return th;
}

Theory Theory::from_texts(const std::vector<std::string>& texts) {
  return build(texts, /*lenient=*/false);
}

Theory Theory::from_texts_lenient(const std::vector<std::string>& texts) {
  return build(texts, /*lenient=*/true);
}

}  // namespace si::logic

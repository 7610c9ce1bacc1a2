#include "si/eval/textnorm.hpp"

#include <cctype>

#include "si/util/text.hpp"

namespace si::eval {

namespace {

bool is_stop(char c) {
  return c == '.' || c == '?' || c == '!' || c == ';' || c == '\n';
}

}  // namespace

std::string first_sentence(const std::string& text) {
  size_t start = 0;
  while (start < text.size() && is_stop(text[start])) ++start;
  size_t end = start;
  while (end < text.size() && !is_stop(text[end])) ++end;
  return trim(text.substr(start, end - start));
}

std::string normalize_alpha(const std::string& text) {
  std::string out;
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string normalize_alnum(const std::string& text) {
  std::string out;
  for (char c : text)
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string final_word(const std::string& text) {
  auto tokens = split_ws(text);
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    std::string word = normalize_alpha(*it);
    if (!word.empty()) return word;
  }
  return "";
}

}  // namespace si::eval

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace si {

std::string lowercase(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string> split_lines(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string replace_all(std::string s, std::string_view from, std::string_view to);

// Drop one trailing '.' if present (selection frames quote sentences without it).
std::string strip_period(std::string_view s);

// Capitalize the first ASCII letter.
std::string capitalize_first(std::string s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace si

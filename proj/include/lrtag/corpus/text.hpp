#pragma once

// Thin Unicode helpers over ICU. Strings are UTF-8 throughout the library;
// malformed sequences decode to U+FFFD.

#include <string>
#include <string_view>
#include <vector>

namespace lrtag::text {

std::vector<char32_t> decode_utf8(std::string_view s);
std::string encode_utf8(char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

// Unicode default case folding (full folding, e.g. "ß" -> "ss").
std::string fold_case(std::string_view s);

bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);  // general category P*
bool is_symbol(char32_t cp);       // general category S*
bool is_digit(char32_t cp);
bool is_uppercase(char32_t cp);

// Long ICU script name, e.g. "Latin", "Cyrillic", "Ethiopic", "Common".
std::string script_name(char32_t cp);

// Characters in Common or Inherited script (digits, punctuation, marks) are
// compatible with every script.
bool is_script_neutral(char32_t cp);

// Splits on Unicode whitespace, dropping empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);

// Splits on a single byte delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

std::string_view trim_line_end(std::string_view line);

}  // namespace lrtag::text

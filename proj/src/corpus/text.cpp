#include "lrtag/corpus/text.hpp"

#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

namespace lrtag::text {

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    out.push_back(cp < 0 ? U'�' : static_cast<char32_t>(cp));
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) return "\xEF\xBF\xBD";
  return std::string(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) out += encode_utf8(cp);
  return out;
}

std::string fold_case(std::string_view s) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  u.foldCase(U_FOLD_CASE_DEFAULT);
  std::string out;
  u.toUTF8String(out);
  return out;
}

bool is_whitespace(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool is_punctuation(char32_t cp) { return u_ispunct(static_cast<UChar32>(cp)); }

bool is_symbol(char32_t cp) {
  const int32_t mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  return (mask & U_GC_S_MASK) != 0;
}

bool is_digit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }

bool is_uppercase(char32_t cp) { return u_isUUppercase(static_cast<UChar32>(cp)); }

std::string script_name(char32_t cp) {
  UErrorCode status = U_ZERO_ERROR;
  const UScriptCode code = uscript_getScript(static_cast<UChar32>(cp), &status);
  if (U_FAILURE(status)) return "Unknown";
  return uscript_getName(code);
}

bool is_script_neutral(char32_t cp) {
  UErrorCode status = U_ZERO_ERROR;
  const UScriptCode code = uscript_getScript(static_cast<UChar32>(cp), &status);
  return U_SUCCESS(status) && (code == USCRIPT_COMMON || code == USCRIPT_INHERITED);
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char32_t cp : decode_utf8(s)) {
    if (is_whitespace(cp)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += encode_utf8(cp);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim_line_end(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

}  // namespace lrtag::text

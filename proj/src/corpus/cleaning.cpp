#include "lrtag/corpus/cleaning.hpp"

#include <algorithm>

#include "lrtag/corpus/text.hpp"

namespace lrtag {
namespace {

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'።' || cp == U'।';
}

std::string trimmed(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end) {
  while (begin < end && text::is_whitespace(cps[begin])) ++begin;
  while (end > begin && text::is_whitespace(cps[end - 1])) --end;
  std::string out;
  for (std::size_t i = begin; i < end; ++i) out += text::encode_utf8(cps[i]);
  return out;
}

}  // namespace

std::vector<std::string> segment_sentences(std::string_view line) {
  const auto cps = text::decode_utf8(line);
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (!is_terminator(cps[i])) continue;
    if (i + 1 == cps.size() || text::is_whitespace(cps[i + 1])) {
      std::string piece = trimmed(cps, start, i + 1);
      if (!piece.empty()) out.push_back(std::move(piece));
      start = i + 1;
    }
  }
  std::string rest = trimmed(cps, start, cps.size());
  if (!rest.empty()) out.push_back(std::move(rest));
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  for (const std::string& piece : text::split_whitespace(sentence)) {
    const auto cps = text::decode_utf8(piece);
    if (std::all_of(cps.begin(), cps.end(), text::is_punctuation)) {
      out.push_back(piece);
      continue;
    }
    std::size_t begin = 0;
    std::size_t end = cps.size();
    while (text::is_punctuation(cps[begin])) out.push_back(text::encode_utf8(cps[begin++]));
    std::vector<std::string> trailing;
    while (text::is_punctuation(cps[end - 1])) trailing.push_back(text::encode_utf8(cps[--end]));
    std::string core;
    for (std::size_t i = begin; i < end; ++i) core += text::encode_utf8(cps[i]);
    out.push_back(std::move(core));
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

bool is_foreign_token(std::string_view token, const std::vector<std::string>& scripts) {
  if (scripts.empty()) return false;
  for (char32_t cp : text::decode_utf8(token)) {
    if (text::is_script_neutral(cp)) continue;
    if (std::find(scripts.begin(), scripts.end(), text::script_name(cp)) == scripts.end()) {
      return true;
    }
  }
  return false;
}

bool is_symbol_token(std::string_view token) {
  const auto cps = text::decode_utf8(token);
  return !cps.empty() && std::all_of(cps.begin(), cps.end(), [](char32_t cp) {
    return text::is_punctuation(cp) || text::is_symbol(cp);
  });
}

Corpus clean_corpus(const std::vector<std::string>& raw_lines, const BilingualDictionary& bilingual,
                    const MonolingualTagDictionary* monolingual, const CleaningConfig& config,
                    CleaningStats* stats) {
  CleaningStats local;
  Corpus corpus;
  for (const std::string& line : raw_lines) {
    for (const std::string& segment : segment_sentences(line)) {
      const auto tokens = tokenize(segment);
      if (tokens.empty()) continue;
      ++local.segmented;

      std::size_t foreign = 0;
      std::size_t symbols = 0;
      bool any_known = false;
      for (const auto& t : tokens) {
        if (is_foreign_token(t, config.scripts)) ++foreign;
        if (is_symbol_token(t)) ++symbols;
        if (bilingual.contains(t) || (monolingual != nullptr && monolingual->contains(t))) {
          any_known = true;
        }
      }
      const double n = static_cast<double>(tokens.size());
      if (static_cast<double>(foreign) / n > config.foreign_frac) {
        ++local.dropped_foreign;
        continue;
      }
      if (static_cast<double>(symbols) / n > config.symbol_frac) {
        ++local.dropped_symbols;
        continue;
      }
      if (!any_known) {
        ++local.dropped_no_dictionary_word;
        continue;
      }

      Sentence sentence;
      for (const auto& t : tokens) sentence.tokens.push_back(Token{t, std::nullopt});
      corpus.sentences.push_back(std::move(sentence));
      ++local.kept;
    }
  }
  if (stats != nullptr) *stats = local;
  return corpus;
}

}  // namespace lrtag

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/dictionary.hpp"

namespace lrtag {

struct CleaningConfig {
  // A sentence is dropped when the fraction of offending tokens is strictly
  // greater than the threshold.
  double foreign_frac = 0.5;
  double symbol_frac = 0.5;
  // ICU long script names allowed for the language ("Latin", "Ethiopic").
  // Common and Inherited characters are always allowed. Empty disables the
  // foreign-character rule.
  std::vector<std::string> scripts;
};

struct CleaningStats {
  std::size_t segmented = 0;
  std::size_t dropped_foreign = 0;
  std::size_t dropped_symbols = 0;
  std::size_t dropped_no_dictionary_word = 0;
  std::size_t kept = 0;
};

// Splits after `.`, `!`, `?`, U+1362 or U+0964 when followed by whitespace or
// the end of the line. Pieces are trimmed; empty pieces are dropped.
std::vector<std::string> segment_sentences(std::string_view line);

// Whitespace split, then leading and trailing punctuation characters become
// tokens of their own. A piece made only of punctuation stays whole.
std::vector<std::string> tokenize(std::string_view sentence);

bool is_foreign_token(std::string_view token, const std::vector<std::string>& scripts);
bool is_symbol_token(std::string_view token);

Corpus clean_corpus(const std::vector<std::string>& raw_lines, const BilingualDictionary& bilingual,
                    const MonolingualTagDictionary* monolingual, const CleaningConfig& config,
                    CleaningStats* stats = nullptr);

}  // namespace lrtag

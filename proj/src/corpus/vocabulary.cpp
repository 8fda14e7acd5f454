#include "lrtag/corpus/vocabulary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

Vocabulary::Vocabulary() = default;

Vocabulary Vocabulary::from_lists(const std::vector<std::string>& words,
                                  const std::vector<char32_t>& chars) {
  Vocabulary v;
  for (const auto& w : words) v.add_word(w);
  for (char32_t c : chars) v.add_char(c);
  return v;
}

void Vocabulary::add_word(const std::string& word) {
  if (word_index_.count(word)) throw DataError("duplicate vocabulary word '" + word + "'");
  word_index_.emplace(word, static_cast<int>(words_.size()) + 1);
  words_.push_back(word);
}

void Vocabulary::add_char(char32_t cp) {
  if (char_index_.count(cp)) throw DataError("duplicate vocabulary character");
  char_index_.emplace(cp, static_cast<int>(chars_.size()) + kReservedChars);
  chars_.push_back(cp);
}

int Vocabulary::word_id(std::string_view word) const {
  auto it = word_index_.find(std::string(word));
  return it == word_index_.end() ? kUnkWord : it->second;
}

bool Vocabulary::has_word(std::string_view word) const {
  return word_index_.count(std::string(word)) != 0;
}

int Vocabulary::char_id(char32_t cp) const {
  auto it = char_index_.find(cp);
  return it == char_index_.end() ? kUnkChar : it->second;
}

std::vector<int> Vocabulary::char_ids(std::string_view word) const {
  std::vector<int> ids;
  for (char32_t cp : text::decode_utf8(word)) ids.push_back(char_id(cp));
  return ids;
}

std::string Vocabulary::word(int id) const {
  if (id <= 0 || static_cast<std::size_t>(id) > words_.size()) return "<unk>";
  return words_[static_cast<std::size_t>(id) - 1];
}

std::string Vocabulary::spell(std::span<const int> char_ids) const {
  std::string out;
  for (int id : char_ids) {
    if (id < kReservedChars || static_cast<std::size_t>(id - kReservedChars) >= chars_.size()) {
      continue;
    }
    out += text::encode_utf8(chars_[static_cast<std::size_t>(id - kReservedChars)]);
  }
  return out;
}

Vocabulary build_vocabulary(std::span<const Corpus* const> corpora, const EmbeddingTable* embeddings,
                            std::size_t max_words) {
  std::map<std::string, std::size_t> counts;
  std::set<char32_t> chars;
  for (const Corpus* corpus : corpora) {
    for (const auto& sentence : corpus->sentences) {
      for (const auto& token : sentence.tokens) {
        ++counts[token.surface];
        for (char32_t cp : text::decode_utf8(token.surface)) chars.insert(cp);
      }
    }
  }

  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  // counts is already in lexicographic order, so a stable sort on frequency
  // leaves ties lexicographic.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > max_words) ranked.resize(max_words);

  std::vector<std::string> words;
  std::set<std::string> chosen;
  for (auto& [w, n] : ranked) {
    chosen.insert(w);
    words.push_back(w);
  }
  if (embeddings != nullptr) {
    for (const auto& [w, vec] : embeddings->vectors) {
      if (chosen.insert(w).second) words.push_back(w);
    }
  }
  return Vocabulary::from_lists(words, std::vector<char32_t>(chars.begin(), chars.end()));
}

}  // namespace lrtag

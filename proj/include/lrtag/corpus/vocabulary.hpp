#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/embeddings.hpp"

namespace lrtag {

// Word and character indices with contiguous ids from 0. Reserved ids:
// word UNK = 0; char UNK = 0, BOS = 1, EOS = 2.
class Vocabulary {
 public:
  static constexpr int kUnkWord = 0;
  static constexpr int kUnkChar = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;
  static constexpr int kReservedChars = 3;

  Vocabulary();

  // Content words/characters in id order (reserved entries excluded).
  static Vocabulary from_lists(const std::vector<std::string>& words,
                               const std::vector<char32_t>& chars);

  int word_id(std::string_view word) const;  // kUnkWord when absent
  bool has_word(std::string_view word) const;
  int char_id(char32_t cp) const;  // kUnkChar when absent
  std::vector<int> char_ids(std::string_view word) const;

  std::size_t word_count() const { return words_.size() + 1; }
  std::size_t char_count() const { return chars_.size() + kReservedChars; }

  // Content entries in id order: word id i+1, char id i+3.
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<char32_t>& chars() const { return chars_; }

  // Surface for a word id; "<unk>" for the reserved id.
  std::string word(int id) const;
  // UTF-8 spelling of character ids; reserved ids are skipped.
  std::string spell(std::span<const int> char_ids) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.words_ == b.words_ && a.chars_ == b.chars_;
  }

 private:
  void add_word(const std::string& word);
  void add_char(char32_t cp);

  std::vector<std::string> words_;
  std::unordered_map<std::string, int> word_index_;
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, int> char_index_;
};

// Keeps the max_words most frequent surfaces (ties lexicographic), every
// embedding word, and every character seen in the corpora.
Vocabulary build_vocabulary(std::span<const Corpus* const> corpora, const EmbeddingTable* embeddings,
                            std::size_t max_words);

}  // namespace lrtag

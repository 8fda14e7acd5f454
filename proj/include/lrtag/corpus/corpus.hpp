#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrtag/corpus/pos_tag.hpp"

namespace lrtag {

struct Token {
  std::string surface;  // non-empty, no whitespace
  std::optional<PosTag> gold_tag;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string language_code;

  std::size_t sentence_count() const { return sentences.size(); }
  std::size_t token_count() const;
  bool fully_tagged() const;
};

// CoNLL-U subset reader. Comment lines and multiword/empty-node ids are
// skipped; column 2 is the surface form and column 4 the UPOS tag ("_" means
// untagged). Throws ParseError with the offending line number.
Corpus parse_conllu(std::istream& in, std::string language_code = {});
Corpus parse_conllu(std::string_view text, std::string language_code = {});

// Writes 10-column CoNLL-U with "_" in every column except ID, FORM and UPOS.
void write_conllu(std::ostream& out, const Corpus& corpus);
std::string to_conllu(const Corpus& corpus);

}  // namespace lrtag

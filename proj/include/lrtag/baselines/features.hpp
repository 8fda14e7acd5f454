#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrtag/corpus/corpus.hpp"

namespace lrtag {

using SparseCounts = std::vector<std::pair<std::size_t, double>>;  // sorted by feature id

// Context features per word type. Layout: [0, F) left neighbour in the F most
// frequent words, [F, 2F) right neighbour, then has-digit, has-punct,
// is-capitalized (0/1 per type).
struct TypeFeatures {
  std::vector<std::string> types;  // lexicographic
  std::vector<SparseCounts> counts;
  std::vector<std::string> context_words;  // frequency order, ties lexicographic
  std::size_t dimension = 0;

  std::size_t left_feature(std::size_t context) const { return context; }
  std::size_t right_feature(std::size_t context) const { return context_words.size() + context; }
  std::size_t digit_feature() const { return 2 * context_words.size(); }
  std::size_t punct_feature() const { return 2 * context_words.size() + 1; }
  std::size_t capital_feature() const { return 2 * context_words.size() + 2; }

  // Index into `types`, or types.size() when absent.
  std::size_t find(std::string_view type) const;
  double value(std::size_t type_index, std::size_t feature) const;
};

TypeFeatures extract_type_features(const Corpus& corpus, std::size_t context_vocab = 100);

}  // namespace lrtag

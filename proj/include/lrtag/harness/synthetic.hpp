#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/dictionary.hpp"

namespace lrtag {

// Toy language pair sharing one first-order Markov tag grammar. Sentences
// start from the grammar's stationary distribution, so every position has
// the same tag marginal.
struct SyntheticOptions {
  std::uint64_t seed = 7;
  std::size_t raw_sentences = 2000;
  std::size_t gold_sentences = 200;
  std::size_t high_resource_sentences = 2000;
  std::size_t min_length = 4;
  std::size_t max_length = 10;
  double ambiguous_translation_rate = 0.2;  // low words with an extra wrong-tag translation
  double ambiguous_high_rate = 0.15;        // high words also emitted under a second tag
  double second_tag_emission = 0.1;         // how often a second-tag word is emitted
  double uncovered_rate = 0.2;              // low words missing from the bilingual dictionary
  double monolingual_rate = 0.3;            // low words listed in the tag dictionary
};

struct SyntheticLanguagePair {
  Corpus raw;            // untagged low-resource sentences
  Corpus raw_reference;  // the same sentences with their generating tags
  Corpus gold;           // tagged low-resource test sentences
  Corpus high_resource;  // tagged high-resource sentences
  BilingualDictionary bilingual;
  MonolingualTagDictionary monolingual;
  std::array<std::array<double, kTagCount>, kTagCount> transitions{};
  std::array<double, kTagCount> tag_marginals{};
  PosTag majority_tag = PosTag::NOUN;
  double majority_accuracy = 0.0;  // expected accuracy of always guessing majority_tag
};

SyntheticLanguagePair generate_language_pair(const SyntheticOptions& options = {});

// Stationary distribution of a row-stochastic matrix by power iteration.
std::array<double, kTagCount> stationary_distribution(
    const std::array<std::array<double, kTagCount>, kTagCount>& transitions);

}  // namespace lrtag

#pragma once

#include <span>
#include <string>
#include <vector>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/silver/annotate.hpp"

namespace lrtag {

struct AuxExample {
  std::string input;
  std::string target;

  friend bool operator==(const AuxExample&, const AuxExample&) = default;
};

// One w -> w example per distinct word, lexicographic order. Throws
// UsageError on an empty word list.
std::vector<AuxExample> make_autoencode_examples(std::span<const std::string> words);

// Distinct surfaces of a silver corpus, lexicographic order.
std::vector<std::string> silver_word_types(const SilverCorpus& corpus);

// Bucket for a next-word frequency: int(ln(freq)) truncated, 0 for freq 0.
int logfreq_bucket(std::size_t freq);

// Label at position n is logfreq_bucket(freq(w_{n+1})) with frequencies
// counted over freq_source surfaces; the last position gets 0.
std::vector<std::vector<int>> make_logfreq_labels(const Corpus& sentences, const Corpus& freq_source);

// Same rule over a silver corpus; fills SilverSentence::logfreq in place.
void attach_logfreq_labels(SilverCorpus& silver, const Corpus& freq_source);

}  // namespace lrtag

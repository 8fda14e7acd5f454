#pragma once

#include <cstddef>
#include <vector>

#include "lrtag/baselines/taggers.hpp"
#include "lrtag/corpus/corpus.hpp"
#include "lrtag/neural/checkpoint.hpp"

namespace lrtag {

struct Accuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double value() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

// Micro token accuracy. Throws DataError on an untagged gold token or when
// the tagger returns the wrong number of tags.
Accuracy evaluate(const TaggerFn& tagger, const Corpus& gold);

// Neural tagger in eval mode.
TaggerFn neural_tagger(const TaggerModel& model);

std::vector<std::vector<PosTag>> tag_corpus(const TaggerFn& tagger, const Corpus& corpus);

}  // namespace lrtag

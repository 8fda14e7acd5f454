#include "lrtag/harness/evaluate.hpp"

#include "lrtag/error.hpp"
#include "lrtag/neural/model.hpp"

namespace lrtag {

Accuracy evaluate(const TaggerFn& tagger, const Corpus& gold) {
  Accuracy acc;
  for (std::size_t si = 0; si < gold.sentences.size(); ++si) {
    const auto& sentence = gold.sentences[si];
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      if (!sentence.tokens[ti].gold_tag) {
        throw DataError("gold sentence " + std::to_string(si + 1) + " token " +
                        std::to_string(ti + 1) + " ('" + sentence.tokens[ti].surface +
                        "') has no tag");
      }
    }
    const auto predicted = tagger(sentence);
    if (predicted.size() != sentence.tokens.size()) {
      throw DataError("tagger returned " + std::to_string(predicted.size()) + " tags for a " +
                      std::to_string(sentence.tokens.size()) + "-token sentence");
    }
    for (std::size_t ti = 0; ti < predicted.size(); ++ti) {
      acc.correct += predicted[ti] == *sentence.tokens[ti].gold_tag;
      ++acc.total;
    }
  }
  return acc;
}

TaggerFn neural_tagger(const TaggerModel& model) {
  return [&model](const Sentence& s) { return predict_tags(s, model.params, model.vocab); };
}

std::vector<std::vector<PosTag>> tag_corpus(const TaggerFn& tagger, const Corpus& corpus) {
  std::vector<std::vector<PosTag>> out;
  out.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) out.push_back(tagger(s));
  return out;
}

}  // namespace lrtag

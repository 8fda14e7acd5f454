#include "lrtag/silver/aux_tasks.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "lrtag/error.hpp"

namespace lrtag {

std::vector<AuxExample> make_autoencode_examples(std::span<const std::string> words) {
  if (words.empty()) throw UsageError("autoencoding needs at least one word");
  const std::set<std::string> distinct(words.begin(), words.end());
  std::vector<AuxExample> out;
  out.reserve(distinct.size());
  for (const auto& w : distinct) out.push_back(AuxExample{w, w});
  return out;
}

std::vector<std::string> silver_word_types(const SilverCorpus& corpus) {
  std::set<std::string> types;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) types.insert(t.surface);
  }
  return {types.begin(), types.end()};
}

int logfreq_bucket(std::size_t freq) {
  if (freq == 0) return 0;
  return static_cast<int>(std::log(static_cast<double>(freq)));
}

namespace {

std::unordered_map<std::string, std::size_t> surface_counts(const Corpus& corpus) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) ++counts[t.surface];
  }
  return counts;
}

template <typename Tokens>
std::vector<int> labels_for(const Tokens& tokens,
                            const std::unordered_map<std::string, std::size_t>& counts) {
  std::vector<int> labels(tokens.size(), 0);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    auto it = counts.find(tokens[i + 1].surface);
    labels[i] = it == counts.end() ? 0 : logfreq_bucket(it->second);
  }
  return labels;
}

}  // namespace

std::vector<std::vector<int>> make_logfreq_labels(const Corpus& sentences,
                                                  const Corpus& freq_source) {
  const auto counts = surface_counts(freq_source);
  std::vector<std::vector<int>> out;
  out.reserve(sentences.sentences.size());
  for (const auto& s : sentences.sentences) out.push_back(labels_for(s.tokens, counts));
  return out;
}

void attach_logfreq_labels(SilverCorpus& silver, const Corpus& freq_source) {
  const auto counts = surface_counts(freq_source);
  for (auto& s : silver.sentences) s.logfreq = labels_for(s.tokens, counts);
}

}  // namespace lrtag

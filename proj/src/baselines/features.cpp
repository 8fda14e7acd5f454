#include "lrtag/baselines/features.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "lrtag/corpus/text.hpp"

namespace lrtag {

std::size_t TypeFeatures::find(std::string_view type) const {
  auto it = std::lower_bound(types.begin(), types.end(), type);
  return (it != types.end() && *it == type) ? static_cast<std::size_t>(it - types.begin())
                                            : types.size();
}

double TypeFeatures::value(std::size_t type_index, std::size_t feature) const {
  const auto& row = counts[type_index];
  auto it = std::lower_bound(row.begin(), row.end(), feature,
                             [](const auto& entry, std::size_t f) { return entry.first < f; });
  return (it != row.end() && it->first == feature) ? it->second : 0.0;
}

TypeFeatures extract_type_features(const Corpus& corpus, std::size_t context_vocab) {
  std::map<std::string, std::size_t> freq;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) ++freq[t.surface];
  }

  TypeFeatures out;
  std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > context_vocab) ranked.resize(context_vocab);
  std::unordered_map<std::string, std::size_t> context_index;
  for (const auto& [w, n] : ranked) {
    context_index.emplace(w, out.context_words.size());
    out.context_words.push_back(w);
  }
  out.dimension = 2 * out.context_words.size() + 3;

  for (const auto& [w, n] : freq) out.types.push_back(w);
  std::vector<std::map<std::size_t, double>> dense(out.types.size());
  auto type_index = [&](const std::string& w) { return out.find(w); };

  for (const auto& s : corpus.sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      auto& row = dense[type_index(s.tokens[i].surface)];
      if (i > 0) {
        auto it = context_index.find(s.tokens[i - 1].surface);
        if (it != context_index.end()) row[out.left_feature(it->second)] += 1.0;
      }
      if (i + 1 < s.tokens.size()) {
        auto it = context_index.find(s.tokens[i + 1].surface);
        if (it != context_index.end()) row[out.right_feature(it->second)] += 1.0;
      }
    }
  }

  for (std::size_t t = 0; t < out.types.size(); ++t) {
    const auto cps = text::decode_utf8(out.types[t]);
    if (std::any_of(cps.begin(), cps.end(), text::is_digit)) dense[t][out.digit_feature()] = 1.0;
    if (std::any_of(cps.begin(), cps.end(), text::is_punctuation)) dense[t][out.punct_feature()] = 1.0;
    if (!cps.empty() && text::is_uppercase(cps.front())) dense[t][out.capital_feature()] = 1.0;
  }

  out.counts.reserve(out.types.size());
  for (auto& row : dense) out.counts.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace lrtag

#include "lrtag/baselines/taggers.hpp"

#include <algorithm>
#include <array>

namespace lrtag {

ClusterTagger::ClusterTagger(MixtureModel model, ClusterTagMap map, PosTag unknown_tag)
    : model_(std::move(model)), map_(std::move(map)), unknown_(unknown_tag) {}

PosTag ClusterTagger::tag_of(std::string_view type) const {
  const int c = model_.cluster_of(type);
  return c < 0 ? unknown_ : map_.tags.at(static_cast<std::size_t>(c));
}

std::vector<PosTag> ClusterTagger::operator()(const Sentence& sentence) const {
  std::vector<PosTag> out;
  out.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) out.push_back(tag_of(t.surface));
  return out;
}

ClusterTagger train_cluster_baseline(const Corpus& raw, const MonolingualTagDictionary& monolingual,
                                     const ClusterBaselineOptions& options) {
  auto features = extract_type_features(raw, options.context_vocab);
  auto model = fit_mixture(features, options.mixture);
  auto map = map_clusters_to_tags(model, raw, monolingual);
  return ClusterTagger(std::move(model), std::move(map));
}

std::vector<PosTag> MajorityTagger::operator()(const Sentence& sentence) const {
  return std::vector<PosTag>(sentence.tokens.size(), tag_);
}

MajorityTagger majority_baseline(const Corpus* train, PosTag fallback) {
  if (train == nullptr) return MajorityTagger(fallback);
  std::array<std::uint64_t, kTagCount> counts{};
  for (const auto& s : train->sentences) {
    for (const auto& t : s.tokens) {
      if (t.gold_tag) ++counts[index_of(*t.gold_tag)];
    }
  }
  auto best = std::max_element(counts.begin(), counts.end());
  if (*best == 0) return MajorityTagger(fallback);
  return MajorityTagger(tag_at(static_cast<std::size_t>(best - counts.begin())));
}

}  // namespace lrtag

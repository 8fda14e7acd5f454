#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lrtag/baselines/mixture.hpp"
#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/pos_tag.hpp"

namespace lrtag {

// Anything that tags a sentence token by token.
using TaggerFn = std::function<std::vector<PosTag>(const Sentence&)>;

// Type-level tagger: word type -> cluster -> tag. Types unseen at training
// time get `unknown_tag`.
class ClusterTagger {
 public:
  ClusterTagger(MixtureModel model, ClusterTagMap map, PosTag unknown_tag = PosTag::NOUN);

  PosTag tag_of(std::string_view type) const;
  std::vector<PosTag> operator()(const Sentence& sentence) const;

  const MixtureModel& model() const { return model_; }
  const ClusterTagMap& map() const { return map_; }

 private:
  MixtureModel model_;
  ClusterTagMap map_;
  PosTag unknown_;
};

struct ClusterBaselineOptions {
  MixtureOptions mixture;
  std::size_t context_vocab = 100;
};

// Features from `raw`, EM, then dictionary labeling over `raw` tokens.
ClusterTagger train_cluster_baseline(const Corpus& raw, const MonolingualTagDictionary& monolingual,
                                     const ClusterBaselineOptions& options);

class MajorityTagger {
 public:
  explicit MajorityTagger(PosTag tag = PosTag::NOUN) : tag_(tag) {}
  PosTag tag() const { return tag_; }
  std::vector<PosTag> operator()(const Sentence& sentence) const;

 private:
  PosTag tag_;
};

// Most frequent gold tag of `train` (ties by PosTag order); `fallback` when
// there is no tagged token to count.
MajorityTagger majority_baseline(const Corpus* train = nullptr, PosTag fallback = PosTag::NOUN);

}  // namespace lrtag

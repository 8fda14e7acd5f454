#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lrtag/baselines/features.hpp"
#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/dictionary.hpp"

namespace lrtag {

// Mixture of multinomials over type context features.
struct MixtureModel {
  std::size_t clusters = 0;
  std::vector<double> priors;                     // K
  std::vector<std::vector<double>> multinomials;  // K x D
  std::vector<std::string> types;
  std::vector<int> assignment;  // per type, argmax responsibility
  // Data log-likelihood plus the log Dirichlet smoothing prior, one value
  // per iteration. This is the quantity each EM iteration cannot decrease.
  std::vector<double> objective_trace;
  // Plain data log-likelihood, same iterations.
  std::vector<double> log_likelihood_trace;

  // -1 when the type was not in the training features.
  int cluster_of(std::string_view type) const;
};

struct MixtureOptions {
  std::size_t clusters = 17;
  int iterations = 50;
  double alpha = 0.1;
  std::uint64_t seed = 1;
};

// EM from seeded random responsibilities; add-alpha smoothing on priors and
// multinomials. Throws UsageError when K < 2 or there are fewer types than K.
MixtureModel fit_mixture(const TypeFeatures& features, const MixtureOptions& options);

// Cluster id -> tag.
struct ClusterTagMap {
  std::vector<PosTag> tags;
};

// Per cluster, every corpus token whose type is in M adds 1 for each of its
// dictionary tags; argmax with PosTag tie-break; clusters without evidence
// get NOUN.
ClusterTagMap map_clusters_to_tags(const MixtureModel& model, const Corpus& corpus,
                                   const MonolingualTagDictionary& monolingual);

// `word<TAB>cluster_id<TAB>mapped_tag`, one line per type.
void write_cluster_assignments(std::ostream& out, const MixtureModel& model,
                               const ClusterTagMap& map);

}  // namespace lrtag

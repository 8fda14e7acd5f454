#pragma once

#include <span>
#include <vector>

#include "lrtag/neural/model.hpp"
#include "lrtag/silver/annotate.hpp"

namespace lrtag {

// A summed negative log-likelihood and its gradient with respect to the
// logits that produced each distribution (rows x classes, flattened).
struct LossTerms {
  double loss = 0.0;
  std::vector<double> d_logits;
};

// Per position: Masked -> 0, Single(t) -> -ln p(t), Ambiguous(S) ->
// -ln max_{t in S} p(t) with the gradient routed through that argmax tag
// (ties by PosTag order). No precondition checks.
LossTerms tagging_terms(std::span<const Distribution> dists, std::span<const Supervision> silver);

// Masked/Single supervision only. Throws UsageError when every position is
// Masked or an Ambiguous entry is present.
double loss_tagging_masked(std::span<const Distribution> dists, std::span<const Supervision> silver);
LossTerms loss_tagging_masked_terms(std::span<const Distribution> dists,
                                    std::span<const Supervision> silver);

// Ambiguous supervision only. Throws UsageError on an empty set or a
// non-Ambiguous entry.
double loss_tagging_ambiguous(std::span<const Distribution> dists,
                              std::span<const Supervision> silver);
LossTerms loss_tagging_ambiguous_terms(std::span<const Distribution> dists,
                                       std::span<const Supervision> silver);

// Sum over steps of -ln p(target_t); targets already include EOS.
double loss_autoencode(std::span<const Distribution> steps, std::span<const int> targets);
LossTerms loss_autoencode_terms(std::span<const Distribution> steps, std::span<const int> targets);

// Plain class-index NLL, used by the log-frequency head.
LossTerms class_nll_terms(std::span<const Distribution> dists, std::span<const int> classes);

}  // namespace lrtag

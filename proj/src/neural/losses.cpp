#include "lrtag/neural/losses.hpp"

#include <algorithm>
#include <string>

#include "lrtag/error.hpp"

namespace lrtag {
namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) {
    throw UsageError("loss inputs have different lengths (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

// Adds -ln p(target) and its logit gradient p - onehot(target) at `row`.
void add_nll(const Distribution& d, std::size_t target, std::size_t row, LossTerms& terms) {
  const std::size_t width = d.size();
  terms.loss -= d.log_prob[target];
  double* g = terms.d_logits.data() + row * width;
  for (std::size_t k = 0; k < width; ++k) g[k] += d.prob[k];
  g[target] -= 1.0;
}

std::size_t best_in_set(const Distribution& d, TagSet tags) {
  std::size_t best = kTagCount;
  for (PosTag t : tags.tags()) {
    const std::size_t k = index_of(t);
    if (best == kTagCount || d.log_prob[k] > d.log_prob[best]) best = k;
  }
  return best;
}

}  // namespace

LossTerms tagging_terms(std::span<const Distribution> dists, std::span<const Supervision> silver) {
  check_lengths(dists.size(), silver.size());
  LossTerms terms;
  terms.d_logits.assign(dists.size() * kTagCount, 0.0);
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (const auto* single = std::get_if<Single>(&silver[i])) {
      add_nll(dists[i], index_of(single->tag), i, terms);
    } else if (const auto* amb = std::get_if<Ambiguous>(&silver[i])) {
      add_nll(dists[i], best_in_set(dists[i], amb->tags), i, terms);
    }
  }
  return terms;
}

LossTerms loss_tagging_masked_terms(std::span<const Distribution> dists,
                                    std::span<const Supervision> silver) {
  bool any = false;
  for (const auto& s : silver) {
    if (std::holds_alternative<Ambiguous>(s)) {
      throw UsageError("masked tagging loss got ambiguous supervision");
    }
    any = any || std::holds_alternative<Single>(s);
  }
  if (!any) throw UsageError("every position is masked; such sentences must be discarded");
  return tagging_terms(dists, silver);
}

double loss_tagging_masked(std::span<const Distribution> dists, std::span<const Supervision> silver) {
  return loss_tagging_masked_terms(dists, silver).loss;
}

LossTerms loss_tagging_ambiguous_terms(std::span<const Distribution> dists,
                                       std::span<const Supervision> silver) {
  for (const auto& s : silver) {
    const auto* amb = std::get_if<Ambiguous>(&s);
    if (amb == nullptr) throw UsageError("ambiguous tagging loss got non-ambiguous supervision");
    if (amb->tags.empty()) throw UsageError("ambiguous tag set is empty");
  }
  return tagging_terms(dists, silver);
}

double loss_tagging_ambiguous(std::span<const Distribution> dists,
                              std::span<const Supervision> silver) {
  return loss_tagging_ambiguous_terms(dists, silver).loss;
}

LossTerms class_nll_terms(std::span<const Distribution> dists, std::span<const int> classes) {
  check_lengths(dists.size(), classes.size());
  LossTerms terms;
  const std::size_t width = dists.empty() ? 0 : dists.front().size();
  terms.d_logits.assign(dists.size() * width, 0.0);
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (classes[i] < 0 || static_cast<std::size_t>(classes[i]) >= dists[i].size()) {
      throw UsageError("class index " + std::to_string(classes[i]) + " out of range");
    }
    add_nll(dists[i], static_cast<std::size_t>(classes[i]), i, terms);
  }
  return terms;
}

LossTerms loss_autoencode_terms(std::span<const Distribution> steps, std::span<const int> targets) {
  return class_nll_terms(steps, targets);
}

double loss_autoencode(std::span<const Distribution> steps, std::span<const int> targets) {
  return loss_autoencode_terms(steps, targets).loss;
}

}  // namespace lrtag

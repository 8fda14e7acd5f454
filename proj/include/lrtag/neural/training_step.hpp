#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lrtag/neural/losses.hpp"
#include "lrtag/neural/model.hpp"
#include "lrtag/silver/annotate.hpp"
#include "lrtag/silver/aux_tasks.hpp"

namespace lrtag {

// One silver sentence ready for the network.
struct TaggedExample {
  TaggerInput input;
  std::vector<Supervision> silver;
  std::vector<int> logfreq;  // empty unless the log-frequency head is trained
};

// One character sequence to reproduce.
struct AutoencodeExample {
  std::vector<int> input_chars;
  std::vector<int> target_chars;
};

TaggedExample make_tagged_example(const SilverSentence& sentence, const Vocabulary& vocab);
AutoencodeExample make_autoencode_example(const AuxExample& example, const Vocabulary& vocab);

struct LossComponents {
  double tagging = 0.0;
  double autoencode = 0.0;
  double logfreq = 0.0;

  double total() const { return tagging + autoencode + logfreq; }
};

// Unweighted sum of the tagging, autoencoding and log-frequency losses over
// both batches, with exact gradients written to `grads` (zeroed first).
// Shared character blocks accumulate contributions from both paths.
LossComponents joint_step(std::span<const TaggedExample> pos_batch,
                          std::span<const AutoencodeExample> aux_batch, const ModelParams& params,
                          ForwardMode mode, Rng& rng, Gradients& grads);

std::pair<LossComponents, Gradients> joint_step(std::span<const TaggedExample> pos_batch,
                                                std::span<const AutoencodeExample> aux_batch,
                                                const ModelParams& params, ForwardMode mode,
                                                Rng& rng);

}  // namespace lrtag

#pragma once

#include <cstddef>
#include <cstdint>

namespace lrtag {

struct Hyperparams {
  std::size_t word_dim = 64;
  std::size_t char_dim = 100;
  std::size_t hidden_dim = 100;  // word LSTMs, char LSTMs and the decoder
  double char_dropout_rate = 0.25;
  double word_noise_sigma = 0.2;
  double learning_rate = 0.1;
  int min_epochs = 15;
  int max_epochs = 30;
  int patience = 3;
  double grad_clip = 5.0;  // global-norm clipping during training, 0 disables
  std::size_t logfreq_buckets = 16;
  double init_range = 0.1;
  std::uint64_t seed = 1;

  // Throws UsageError on non-positive dimensions or rates outside [0, 1].
  void validate() const;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

// Stochastic regularization applied by a forward pass.
struct ForwardMode {
  bool train = false;
  double char_dropout = 0.0;
  double word_noise = 0.0;

  static ForwardMode eval() { return {}; }
  static ForwardMode training(const Hyperparams& h) {
    return {true, h.char_dropout_rate, h.word_noise_sigma};
  }
};

}  // namespace lrtag

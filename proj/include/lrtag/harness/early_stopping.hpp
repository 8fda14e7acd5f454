#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lrtag/neural/hyperparams.hpp"

namespace lrtag {

struct StoppingRule {
  int min_epochs = 15;
  int max_epochs = 30;
  int patience = 3;
  double tolerance = 1e-6;  // an improvement must beat best - tolerance

  static StoppingRule from(const Hyperparams& h) { return {h.min_epochs, h.max_epochs, h.patience}; }
};

// Tracks epoch losses (epochs are 1-based and fed in order).
class EarlyStopper {
 public:
  explicit EarlyStopper(StoppingRule rule);

  // Returns true when `loss` is the new best.
  bool observe(double loss);
  bool should_stop() const;

  int epoch() const { return epoch_; }
  int best_epoch() const { return best_epoch_; }
  double best_loss() const { return best_loss_; }

 private:
  StoppingRule rule_;
  int epoch_ = 0;
  int best_epoch_ = 0;
  double best_loss_ = std::numeric_limits<double>::infinity();
};

struct StoppingOutcome {
  int stop_epoch = 0;
  int best_epoch = 0;
  double best_loss = 0.0;
  std::vector<double> losses;
};

// Runs epoch_fn(1), epoch_fn(2), ... until the rule fires. on_best(epoch) is
// called right after each epoch that sets a new best, which is where the
// caller snapshots parameters.
StoppingOutcome run_until_stopped(const StoppingRule& rule, const std::function<double(int)>& epoch_fn,
                                  const std::function<void(int)>& on_best = {});

}  // namespace lrtag

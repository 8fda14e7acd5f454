#include "lrtag/harness/early_stopping.hpp"

#include "lrtag/error.hpp"

namespace lrtag {

EarlyStopper::EarlyStopper(StoppingRule rule) : rule_(rule) {
  if (rule.max_epochs < 1 || rule.min_epochs < 1 || rule.min_epochs > rule.max_epochs ||
      rule.patience < 1) {
    throw UsageError("stopping rule needs 1 <= min_epochs <= max_epochs and patience >= 1");
  }
}

bool EarlyStopper::observe(double loss) {
  ++epoch_;
  if (loss < best_loss_ - rule_.tolerance || best_epoch_ == 0) {
    best_loss_ = loss;
    best_epoch_ = epoch_;
    return true;
  }
  return false;
}

bool EarlyStopper::should_stop() const {
  if (epoch_ >= rule_.max_epochs) return true;
  return epoch_ >= rule_.min_epochs && epoch_ - best_epoch_ >= rule_.patience;
}

StoppingOutcome run_until_stopped(const StoppingRule& rule, const std::function<double(int)>& epoch_fn,
                                  const std::function<void(int)>& on_best) {
  EarlyStopper stopper(rule);
  StoppingOutcome out;
  do {
    const double loss = epoch_fn(stopper.epoch() + 1);
    out.losses.push_back(loss);
    if (stopper.observe(loss) && on_best) on_best(stopper.epoch());
  } while (!stopper.should_stop());
  out.stop_epoch = stopper.epoch();
  out.best_epoch = stopper.best_epoch();
  out.best_loss = stopper.best_loss();
  return out;
}

}  // namespace lrtag

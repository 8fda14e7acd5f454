#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrtag/neural/params.hpp"

namespace lrtag {

// Deterministic loss; when `grads` is non-null it also receives the analytic
// gradient.
using LossFn = std::function<double(const ModelParams& params, Gradients* grads)>;

struct BlockCheck {
  std::string name;
  std::size_t coordinates = 0;
  double max_relative_error = 0.0;
  double max_abs_gradient = 0.0;
};

struct GradientCheckReport {
  std::vector<BlockCheck> blocks;  // one per parameter block, catalog order
  double max_relative_error = 0.0;
  double tolerance = 0.0;

  bool passed() const { return max_relative_error < tolerance; }
};

// Central differences with step eps against the analytic gradient. Relative
// error is |a - n| / max(|a|, |n|, 1e-8). Blocks larger than
// max_coords_per_block are sampled (seeded); 0 checks every coordinate.
GradientCheckReport gradient_check(const ModelParams& params, const LossFn& loss, double eps = 1e-4,
                                   double tolerance = 1e-3, std::size_t max_coords_per_block = 0,
                                   std::uint64_t sample_seed = 0);

}  // namespace lrtag

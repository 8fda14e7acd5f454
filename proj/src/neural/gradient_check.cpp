#include "lrtag/neural/gradient_check.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lrtag {

GradientCheckReport gradient_check(const ModelParams& params, const LossFn& loss, double eps,
                                   double tolerance, std::size_t max_coords_per_block,
                                   std::uint64_t sample_seed) {
  Gradients analytic = Gradients::zeros_like(params);
  analytic.disable_row_tracking();
  loss(params, &analytic);

  ModelParams probe = params;
  std::mt19937_64 rng(sample_seed);
  GradientCheckReport report;
  report.tolerance = tolerance;

  for (std::size_t bi = 0; bi < kBlockCount; ++bi) {
    const Block b = block_at(bi);
    BlockCheck check;
    check.name = std::string(block_name(b));

    std::vector<std::size_t> coords(params[b].size());
    std::iota(coords.begin(), coords.end(), std::size_t{0});
    if (max_coords_per_block != 0 && coords.size() > max_coords_per_block) {
      std::shuffle(coords.begin(), coords.end(), rng);
      coords.resize(max_coords_per_block);
      std::sort(coords.begin(), coords.end());
    }

    for (std::size_t idx : coords) {
      double& slot = probe[b].data[idx];
      const double original = slot;
      slot = original + eps;
      const double up = loss(probe, nullptr);
      slot = original - eps;
      const double down = loss(probe, nullptr);
      slot = original;

      const double numeric = (up - down) / (2.0 * eps);
      const double a = analytic[b].data[idx];
      const double denom = std::max({std::abs(a), std::abs(numeric), 1e-8});
      check.max_relative_error = std::max(check.max_relative_error, std::abs(a - numeric) / denom);
      check.max_abs_gradient = std::max(check.max_abs_gradient, std::abs(a));
    }
    check.coordinates = coords.size();
    report.max_relative_error = std::max(report.max_relative_error, check.max_relative_error);
    report.blocks.push_back(std::move(check));
  }
  return report;
}

}  // namespace lrtag

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/silver/annotate.hpp"

namespace lrtag {

// Percentage of tokens carrying each tag. Single-tag sources sum to 100;
// multi-label sources count a token toward every tag in its set.
struct TagDistribution {
  std::string source;
  std::size_t tokens = 0;  // denominator
  bool multi_label = false;
  std::array<double, kTagCount> percent{};
};

// Denominator: tagged tokens.
TagDistribution gold_distribution(std::string source, const Corpus& corpus);
// Denominator: tokens that are not Masked.
TagDistribution silver_distribution(std::string source, const SilverCorpus& silver);
TagDistribution prediction_distribution(std::string source,
                                        const std::vector<std::vector<PosTag>>& predictions);

// Published magnitudes kept next to our own tables for comparison only.
struct ReferenceValue {
  std::string_view source;
  PosTag tag;
  double percent;
};
std::span<const ReferenceValue> documented_reference_values();

void write_distribution_tables(std::ostream& out, std::span<const TagDistribution> tables);

struct SeedRun {
  std::uint64_t seed = 0;
  bool completed = false;
  double accuracy = 0.0;
  int epochs_trained = 0;
  int best_epoch = 0;
  double best_loss = 0.0;
  double final_loss = 0.0;
  std::string error;
};

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population
};
MeanStd mean_and_std(std::span<const double> values);

struct ExperimentReport {
  std::string command;
  std::string strategy;
  bool evaluated = true;  // false when no gold corpus was given
  std::vector<SeedRun> runs;
  std::size_t completed = 0;
  MeanStd accuracy;
  std::vector<std::string> warnings;
  std::vector<TagDistribution> distributions;
};

// Fixed field order, no paths or timestamps, so identical runs give
// identical bytes.
void write_report(std::ostream& out, const ExperimentReport& report);
void write_report_file(const std::string& path, const ExperimentReport& report);

}  // namespace lrtag

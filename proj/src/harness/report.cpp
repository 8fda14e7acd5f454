#include "lrtag/harness/report.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "lrtag/error.hpp"

namespace lrtag {
namespace {

TagDistribution finish(std::string source, const std::array<std::size_t, kTagCount>& counts,
                       std::size_t denominator, bool multi_label) {
  TagDistribution d;
  d.source = std::move(source);
  d.tokens = denominator;
  d.multi_label = multi_label;
  for (std::size_t i = 0; i < kTagCount; ++i) {
    d.percent[i] = denominator == 0 ? 0.0 : 100.0 * static_cast<double>(counts[i]) / denominator;
  }
  return d;
}

constexpr ReferenceValue kReferences[] = {
    {"FREQ", PosTag::PUNCT, 37.41},
    {"FREQ", PosTag::VERB, 24.65},
    {"AMB", PosTag::NOUN, 70.93},
};

}  // namespace

TagDistribution gold_distribution(std::string source, const Corpus& corpus) {
  std::array<std::size_t, kTagCount> counts{};
  std::size_t n = 0;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) {
      if (!t.gold_tag) continue;
      ++counts[index_of(*t.gold_tag)];
      ++n;
    }
  }
  return finish(std::move(source), counts, n, false);
}

TagDistribution silver_distribution(std::string source, const SilverCorpus& silver) {
  std::array<std::size_t, kTagCount> counts{};
  std::size_t n = 0;
  for (const auto& s : silver.sentences) {
    for (const auto& t : s.tokens) {
      if (const auto* single = std::get_if<Single>(&t.supervision)) {
        ++counts[index_of(single->tag)];
        ++n;
      } else if (const auto* amb = std::get_if<Ambiguous>(&t.supervision)) {
        for (PosTag tag : amb->tags.tags()) ++counts[index_of(tag)];
        ++n;
      }
    }
  }
  return finish(std::move(source), counts, n, silver.mode == SilverMode::Amb);
}

TagDistribution prediction_distribution(std::string source,
                                        const std::vector<std::vector<PosTag>>& predictions) {
  std::array<std::size_t, kTagCount> counts{};
  std::size_t n = 0;
  for (const auto& s : predictions) {
    for (PosTag t : s) {
      ++counts[index_of(t)];
      ++n;
    }
  }
  return finish(std::move(source), counts, n, false);
}

std::span<const ReferenceValue> documented_reference_values() { return kReferences; }

void write_distribution_tables(std::ostream& out, std::span<const TagDistribution> tables) {
  for (const auto& d : tables) {
    out << fmt::format("table {} tokens {} {}\n", d.source, d.tokens,
                       d.multi_label ? "multi-label" : "single-label");
    for (std::size_t i = 0; i < kTagCount; ++i) {
      out << fmt::format("  {:<6} {:6.2f}\n", tag_name(tag_at(i)), d.percent[i]);
    }
  }
  for (const auto& r : kReferences) {
    out << fmt::format("reference {} {} {:.2f}\n", r.source, tag_name(r.tag), r.percent);
  }
}

MeanStd mean_and_std(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

void write_report(std::ostream& out, const ExperimentReport& r) {
  out << "lrtag-report 1\n";
  out << "command: " << r.command << '\n';
  out << "strategy: " << r.strategy << '\n';
  out << "seeds:";
  for (const auto& run : r.runs) out << ' ' << run.seed;
  out << '\n';
  for (const auto& run : r.runs) {
    if (run.completed) {
      out << fmt::format("seed {}:", run.seed);
      if (r.evaluated) out << fmt::format(" accuracy {:.6f}", run.accuracy);
      if (run.epochs_trained > 0) {
        out << fmt::format(" epochs {} best_epoch {} best_loss {:.6f} final_loss {:.6f}",
                           run.epochs_trained, run.best_epoch, run.best_loss, run.final_loss);
      }
      out << '\n';
    } else {
      out << fmt::format("seed {}: failed {}\n", run.seed, run.error);
    }
  }
  out << "completed: " << r.completed << '/' << r.runs.size() << '\n';
  if (r.evaluated) {
    out << fmt::format("mean: {:.6f}\n", r.accuracy.mean);
    out << fmt::format("std: {:.6f}\n", r.accuracy.stddev);
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  write_distribution_tables(out, r.distributions);
}

void write_report_file(const std::string& path, const ExperimentReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write report file " + path);
  write_report(out, report);
}

}  // namespace lrtag

#include "lrtag/harness/experiment.hpp"

#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"
#include "lrtag/harness/evaluate.hpp"
#include "lrtag/silver/silver_io.hpp"

namespace lrtag {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

// Prefixes errors with the file they came from.
template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(
                                                 std::string(e.what()).find(": ") + 2));
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> read_lines_file(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.emplace_back(text::trim_line_end(line));
  return lines;
}

Corpus load_conllu_file(const std::string& path) {
  auto in = open_input(path);
  return with_path(path, [&] { return parse_conllu(in); });
}

BilingualDictionary load_bilingual_file(const std::string& path) {
  auto in = open_input(path);
  return with_path(path, [&] { return load_bilingual_dictionary(in); });
}

MonolingualTagDictionary load_monolingual_file(const std::string& path, TagScheme scheme) {
  auto in = open_input(path);
  return with_path(path, [&] { return load_monolingual_dictionary(in, scheme); });
}

EmbeddingTable load_embeddings_file(const std::string& path) {
  auto in = open_input(path);
  return with_path(path, [&] { return load_embeddings(in); });
}

SilverCorpus load_silver_file(const std::string& path, SilverMode mode) {
  auto in = open_input(path);
  return with_path(path, [&] { return read_silver(in, mode); });
}

ExperimentInputs load_inputs(const ExperimentConfig& c, bool need_gold) {
  ExperimentInputs in;
  if (need_gold) {
    if (c.gold.empty()) throw UsageError("missing --gold");
    in.gold = load_conllu_file(c.gold);
  }
  if (!c.bilingual.empty()) in.bilingual = load_bilingual_file(c.bilingual);
  if (!c.monolingual.empty()) in.monolingual = load_monolingual_file(c.monolingual, c.mono_scheme);
  if (!c.high_resource.empty()) in.high_resource = load_conllu_file(c.high_resource);
  if (!c.embeddings.empty()) in.embeddings = load_embeddings_file(c.embeddings);
  if (!c.silver.empty()) in.silver = load_silver_file(c.silver, silver_mode(c.strategy));

  if (!c.corpus.empty()) {
    in.raw = load_conllu_file(c.corpus);
  } else if (!c.raw.empty()) {
    if (!in.bilingual) throw UsageError("cleaning raw text needs --bilingual");
    const auto lines = read_lines_file(c.raw);
    in.raw = clean_corpus(lines, *in.bilingual, in.monolingual ? &*in.monolingual : nullptr,
                          c.cleaning, &in.cleaning);
    spdlog::info("cleaning: {} segmented, {} kept, dropped {} foreign / {} symbol / {} no dictionary word",
                 in.cleaning.segmented, in.cleaning.kept, in.cleaning.dropped_foreign,
                 in.cleaning.dropped_symbols, in.cleaning.dropped_no_dictionary_word);
  }
  return in;
}

SilverCorpus annotate_inputs(const ExperimentInputs& in, SilverMode mode) {
  if (!in.raw) throw UsageError("annotation needs --raw or --corpus");
  if (!in.bilingual) throw UsageError("annotation needs --bilingual");
  if (!in.high_resource) throw UsageError("annotation needs --high-resource");
  const PosStats stats = compute_pos_stats(*in.high_resource);
  if (mode == SilverMode::Freq) return annotate_freq(*in.raw, *in.bilingual, stats);
  return annotate_amb(*in.raw, *in.bilingual, stats, in.monolingual ? &*in.monolingual : nullptr);
}

TrainingData prepare_training_data(const ExperimentConfig& c, const ExperimentInputs& in) {
  SilverCorpus silver = in.silver ? *in.silver : annotate_inputs(in, silver_mode(c.strategy));
  spdlog::info("silver corpus: {} sentences, {} tokens", silver.sentences.size(),
               silver.token_count());
  if (uses_logfreq(c.strategy)) {
    attach_logfreq_labels(silver, in.raw ? *in.raw : silver_surfaces(silver));
  }
  return make_training_data(std::move(silver), uses_autoencoder(c.strategy),
                            in.embeddings ? &*in.embeddings : nullptr, c.max_words);
}

ExperimentReport run_seeds(const std::vector<std::uint64_t>& seeds,
                           const std::function<SeedRun(std::uint64_t)>& run_one) {
  if (seeds.empty()) throw UsageError("run_seeds needs at least one seed");
  ExperimentReport report;
  std::vector<double> accuracies;
  for (std::uint64_t seed : seeds) {
    SeedRun run;
    try {
      run = run_one(seed);
      run.seed = seed;
      run.completed = true;
      accuracies.push_back(run.accuracy);
    } catch (const std::exception& e) {
      run = SeedRun{};
      run.seed = seed;
      run.error = e.what();
      report.warnings.push_back("seed " + std::to_string(seed) + " failed: " + e.what());
      spdlog::warn("seed {} failed: {}", seed, e.what());
    }
    report.runs.push_back(std::move(run));
  }
  report.completed = accuracies.size();
  report.accuracy = mean_and_std(accuracies);
  if (report.completed < seeds.size()) {
    report.warnings.push_back("mean and std cover " + std::to_string(report.completed) + " of " +
                              std::to_string(seeds.size()) + " seeds");
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& c, const ExperimentInputs& in,
                                const std::function<void(std::uint64_t, const TrainResult&)>& on_model) {
  const TrainingData data = prepare_training_data(c, in);
  const EmbeddingTable* pretrained = in.embeddings ? &*in.embeddings : nullptr;

  std::optional<std::vector<std::vector<PosTag>>> first_predictions;
  std::uint64_t first_seed = 0;
  ExperimentReport report = run_seeds(c.seeds, [&](std::uint64_t seed) {
    Hyperparams h = c.hyper;
    h.seed = seed;
    const TrainResult trained = train_tagger(data, h, pretrained);
    const TaggerFn tagger = neural_tagger(trained.model);
    SeedRun run;
    if (in.gold) run.accuracy = evaluate(tagger, *in.gold).value();
    run.epochs_trained = trained.log.stop_epoch;
    run.best_epoch = trained.log.best_epoch;
    run.best_loss = trained.log.best_loss;
    run.final_loss = trained.log.epochs.back().loss.total();
    if (in.gold) {
      spdlog::info("seed {}: accuracy {:.4f} after {} epochs (best epoch {})", seed, run.accuracy,
                   run.epochs_trained, run.best_epoch);
    } else {
      spdlog::info("seed {}: trained {} epochs (best epoch {})", seed, run.epochs_trained, run.best_epoch);
    }
    if (in.gold && !first_predictions) {
      first_predictions = tag_corpus(tagger, *in.gold);
      first_seed = seed;
    }
    if (on_model) on_model(seed, trained);
    return run;
  });
  report.command = "train";
  report.strategy = std::string(strategy_name(c.strategy));
  report.evaluated = in.gold.has_value();

  if (in.gold) report.distributions.push_back(gold_distribution("gold", *in.gold));
  if (in.silver) {
    report.distributions.push_back(silver_distribution(
        data.silver.mode == SilverMode::Freq ? "silver-freq" : "silver-amb", data.silver));
  } else {
    report.distributions.push_back(silver_distribution("silver-freq", annotate_inputs(in, SilverMode::Freq)));
    report.distributions.push_back(silver_distribution("silver-amb", annotate_inputs(in, SilverMode::Amb)));
  }
  if (first_predictions) {
    report.distributions.push_back(
        prediction_distribution("predicted-seed" + std::to_string(first_seed), *first_predictions));
  }
  return report;
}

}  // namespace lrtag

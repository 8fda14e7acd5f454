#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrtag/corpus/cleaning.hpp"
#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/dictionary.hpp"
#include "lrtag/corpus/embeddings.hpp"
#include "lrtag/harness/config.hpp"
#include "lrtag/harness/report.hpp"
#include "lrtag/harness/trainer.hpp"
#include "lrtag/silver/pos_stats.hpp"

namespace lrtag {

// File helpers; all throw DataError when the file cannot be read.
std::vector<std::string> read_lines_file(const std::string& path);
Corpus load_conllu_file(const std::string& path);
BilingualDictionary load_bilingual_file(const std::string& path);
MonolingualTagDictionary load_monolingual_file(const std::string& path, TagScheme scheme);
EmbeddingTable load_embeddings_file(const std::string& path);
SilverCorpus load_silver_file(const std::string& path, SilverMode mode);

// Everything an experiment reads, already parsed.
struct ExperimentInputs {
  std::optional<Corpus> gold;
  std::optional<Corpus> raw;  // cleaned low-resource text
  std::optional<BilingualDictionary> bilingual;
  std::optional<MonolingualTagDictionary> monolingual;
  std::optional<Corpus> high_resource;
  std::optional<EmbeddingTable> embeddings;
  std::optional<SilverCorpus> silver;  // pre-annotated, bypasses annotation
  CleaningStats cleaning;
};

// Loads the files named in `config`. Raw text goes through clean_corpus;
// `corpus` is read as already tokenized CoNLL-U.
ExperimentInputs load_inputs(const ExperimentConfig& config, bool need_gold);

// FREQ or AMB silver data from the raw corpus, B, D and M. Throws
// UsageError when a required input is missing.
SilverCorpus annotate_inputs(const ExperimentInputs& inputs, SilverMode mode);

// Silver data for the configured strategy, with log-frequency labels for
// pla16, then vocabulary and aux examples.
TrainingData prepare_training_data(const ExperimentConfig& config, const ExperimentInputs& inputs);

// Runs `run_one` per seed in order. A seed that throws is recorded as
// failed with a warning; mean and std cover the completed seeds.
ExperimentReport run_seeds(const std::vector<std::uint64_t>& seeds,
                           const std::function<SeedRun(std::uint64_t)>& run_one);

// Per seed: train on the shared silver data with hyper.seed = seed, then
// evaluate on the gold corpus when there is one. `on_model` sees each
// trained model.
ExperimentReport run_experiment(
    const ExperimentConfig& config, const ExperimentInputs& inputs,
    const std::function<void(std::uint64_t, const TrainResult&)>& on_model = {});

}  // namespace lrtag

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lrtag/corpus/embeddings.hpp"
#include "lrtag/harness/early_stopping.hpp"
#include "lrtag/neural/checkpoint.hpp"
#include "lrtag/neural/training_step.hpp"
#include "lrtag/silver/annotate.hpp"
#include "lrtag/silver/aux_tasks.hpp"

namespace lrtag {

struct TrainingData {
  SilverCorpus silver;
  std::vector<AuxExample> aux;  // autoencoding examples, empty when unused
  Vocabulary vocab;
};

// Surfaces of a silver corpus as an untagged corpus.
Corpus silver_surfaces(const SilverCorpus& silver);

// Vocabulary over silver surfaces (plus embedding words); with `autoencode`
// one aux example per distinct silver word type. Throws DataError on an
// empty silver corpus.
TrainingData make_training_data(SilverCorpus silver, bool autoencode,
                                const EmbeddingTable* embeddings, std::size_t max_words);

// SGD over shuffled single-item steps. Each epoch concatenates the tagging
// sentences and aux examples and shuffles them with a generator derived from
// (seed, epoch); dropout and noise draw from a separate per-run stream.
class Trainer {
 public:
  Trainer(const TrainingData& data, const Hyperparams& h, const EmbeddingTable* pretrained);

  LossComponents run_epoch();

  const ModelParams& params() const { return params_; }
  int epochs_run() const { return epoch_; }
  std::size_t item_count() const { return tagged_.size() + aux_.size(); }

 private:
  Hyperparams h_;
  ModelParams params_;
  Gradients grads_;
  std::vector<TaggedExample> tagged_;
  std::vector<AutoencodeExample> aux_;
  Rng noise_rng_;
  int epoch_ = 0;
};

struct EpochRecord {
  int epoch = 0;
  LossComponents loss;
};

struct TrainingLog {
  std::vector<EpochRecord> epochs;
  int stop_epoch = 0;
  int best_epoch = 0;
  double best_loss = 0.0;
};

struct TrainResult {
  TaggerModel model;  // lowest-loss epoch snapshot
  TrainingLog log;
};

// Trains under the early stopping rule from `h`. Throws std::runtime_error
// when an epoch loss is not finite.
TrainResult train_tagger(const TrainingData& data, const Hyperparams& h,
                         const EmbeddingTable* pretrained,
                         const std::function<void(const EpochRecord&)>& on_epoch = {});

}  // namespace lrtag

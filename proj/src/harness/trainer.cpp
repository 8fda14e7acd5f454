#include "lrtag/harness/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "lrtag/error.hpp"

namespace lrtag {

Corpus silver_surfaces(const SilverCorpus& silver) {
  Corpus out;
  out.sentences.reserve(silver.sentences.size());
  for (const auto& s : silver.sentences) {
    Sentence sent;
    for (const auto& t : s.tokens) sent.tokens.push_back(Token{t.surface, std::nullopt});
    out.sentences.push_back(std::move(sent));
  }
  return out;
}

TrainingData make_training_data(SilverCorpus silver, bool autoencode,
                                const EmbeddingTable* embeddings, std::size_t max_words) {
  if (silver.sentences.empty()) {
    throw DataError(
        "silver corpus is empty after annotation; check dictionary coverage and the annotation "
        "statistics (`lrtag annotate` reports how many sentences were kept)");
  }
  TrainingData data;
  const Corpus surfaces = silver_surfaces(silver);
  const Corpus* corpora[] = {&surfaces};
  data.vocab = build_vocabulary(corpora, embeddings, max_words);
  if (autoencode) data.aux = make_autoencode_examples(silver_word_types(silver));
  data.silver = std::move(silver);
  return data;
}

namespace {

bool all_masked(const TaggedExample& ex) {
  return std::all_of(ex.silver.begin(), ex.silver.end(),
                     [](const Supervision& s) { return std::holds_alternative<Masked>(s); });
}

}  // namespace

Trainer::Trainer(const TrainingData& data, const Hyperparams& h, const EmbeddingTable* pretrained)
    : h_(h),
      params_(init_params(h, data.vocab, pretrained)),
      grads_(Gradients::zeros_like(params_)) {
  h.validate();
  std::seed_seq noise_seed{h.seed, std::uint64_t{2}};
  noise_rng_.seed(noise_seed);
  for (const auto& s : data.silver.sentences) {
    TaggedExample ex = make_tagged_example(s, data.vocab);
    if (!all_masked(ex) || !ex.logfreq.empty()) tagged_.push_back(std::move(ex));
  }
  for (const auto& a : data.aux) aux_.push_back(make_autoencode_example(a, data.vocab));
  if (tagged_.empty() && aux_.empty()) throw DataError("no trainable items in the silver corpus");
}

LossComponents Trainer::run_epoch() {
  ++epoch_;
  std::vector<std::size_t> order(item_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::seed_seq shuffle_seed{h_.seed, std::uint64_t{1}, static_cast<std::uint64_t>(epoch_)};
  Rng shuffle_rng(shuffle_seed);
  std::shuffle(order.begin(), order.end(), shuffle_rng);

  const ForwardMode mode = ForwardMode::training(h_);
  LossComponents total;
  for (std::size_t item : order) {
    LossComponents l;
    if (item < tagged_.size()) {
      l = joint_step(std::span(&tagged_[item], 1), {}, params_, mode, noise_rng_, grads_);
    } else {
      l = joint_step({}, std::span(&aux_[item - tagged_.size()], 1), params_, mode, noise_rng_,
                     grads_);
    }
    total.tagging += l.tagging;
    total.autoencode += l.autoencode;
    total.logfreq += l.logfreq;
    if (h_.grad_clip > 0.0) clip_gradients(grads_, h_.grad_clip);
    sgd_update(params_, grads_, h_.learning_rate);
  }
  return total;
}

TrainResult train_tagger(const TrainingData& data, const Hyperparams& h,
                         const EmbeddingTable* pretrained,
                         const std::function<void(const EpochRecord&)>& on_epoch) {
  Trainer trainer(data, h, pretrained);
  TrainResult result{TaggerModel{h, data.vocab, trainer.params()}, {}};
  const auto outcome = run_until_stopped(
      StoppingRule::from(h),
      [&](int epoch) {
        const LossComponents loss = trainer.run_epoch();
        if (!std::isfinite(loss.total())) {
          throw std::runtime_error("training diverged: epoch " + std::to_string(epoch) +
                                   " loss is not finite");
        }
        EpochRecord rec{epoch, loss};
        result.log.epochs.push_back(rec);
        spdlog::debug("epoch {} loss {:.6f} (tag {:.6f} ae {:.6f} logfreq {:.6f})", epoch,
                      loss.total(), loss.tagging, loss.autoencode, loss.logfreq);
        if (on_epoch) on_epoch(rec);
        return loss.total();
      },
      [&](int) { result.model.params = trainer.params(); });
  result.log.stop_epoch = outcome.stop_epoch;
  result.log.best_epoch = outcome.best_epoch;
  result.log.best_loss = outcome.best_loss;
  return result;
}

}  // namespace lrtag

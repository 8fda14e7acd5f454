#include "lrtag/neural/params.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "lrtag/error.hpp"
#include "lrtag/simd/kernels.hpp"

namespace lrtag {
namespace {

constexpr std::array<std::string_view, kBlockCount> kBlockNames = {
    "char_embedding", "char_fwd_w",   "char_fwd_b",    "char_bwd_w",    "char_bwd_b",
    "word_embedding", "word_fwd_w",   "word_fwd_b",    "word_bwd_w",    "word_bwd_b",
    "tag_w",          "tag_b",        "dec_init_h_w",  "dec_init_h_b",  "dec_init_c_w",
    "dec_init_c_b",   "dec_lstm_w",   "dec_lstm_b",    "dec_out_w",     "dec_out_b",
    "logfreq_w",      "logfreq_b",
};

}  // namespace

std::string_view block_name(Block b) { return kBlockNames[static_cast<std::size_t>(b)]; }

void Hyperparams::validate() const {
  if (word_dim == 0 || char_dim == 0 || hidden_dim == 0 || logfreq_buckets == 0) {
    throw UsageError("model dimensions must be positive");
  }
  auto unit = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!unit(char_dropout_rate)) throw UsageError("char dropout rate must lie in [0, 1]");
  if (!(word_noise_sigma >= 0.0)) throw UsageError("word noise sigma must be non-negative");
  if (!(learning_rate > 0.0)) throw UsageError("learning rate must be positive");
  if (min_epochs < 1 || max_epochs < min_epochs) {
    throw UsageError("epoch bounds must satisfy 1 <= min_epochs <= max_epochs");
  }
  if (patience < 1) throw UsageError("patience must be at least 1");
  if (!(grad_clip >= 0.0)) throw UsageError("gradient clip must be non-negative");
  if (!(init_range > 0.0)) throw UsageError("init range must be positive");
}

ModelShape ModelShape::from(const Hyperparams& h, const Vocabulary& vocab) {
  return ModelShape{vocab.word_count(), vocab.char_count(), h.word_dim,
                    h.char_dim,         h.hidden_dim,       h.logfreq_buckets};
}

std::pair<std::size_t, std::size_t> ModelShape::block_shape(Block b) const {
  const std::size_t g = 4 * hidden;
  switch (b) {
    case Block::CharEmbedding:
      return {char_vocab, char_dim};
    case Block::CharFwdW:
    case Block::CharBwdW:
      return {g, char_dim + hidden};
    case Block::WordEmbedding:
      return {word_vocab, word_dim};
    case Block::WordFwdW:
    case Block::WordBwdW:
      return {g, word_dim + 2 * hidden + hidden};
    case Block::TagW:
      return {kTagCount, 2 * hidden};
    case Block::TagB:
      return {kTagCount, 1};
    case Block::DecInitHW:
    case Block::DecInitCW:
      return {hidden, 2 * hidden};
    case Block::DecInitHB:
    case Block::DecInitCB:
      return {hidden, 1};
    case Block::DecW:
      return {g, char_dim + 2 * hidden + hidden};
    case Block::DecOutW:
      return {char_vocab, hidden};
    case Block::DecOutB:
      return {char_vocab, 1};
    case Block::LogFreqW:
      return {logfreq_buckets, 2 * hidden};
    case Block::LogFreqB:
      return {logfreq_buckets, 1};
    case Block::CharFwdB:
    case Block::CharBwdB:
    case Block::WordFwdB:
    case Block::WordBwdB:
    case Block::DecB:
      return {g, 1};
  }
  return {0, 0};
}

ParamSet::ParamSet(const ModelShape& shape) : shape_(shape) {
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    const auto [r, c] = shape.block_shape(block_at(i));
    blocks_[i] = Tensor(r, c);
  }
}

std::size_t ParamSet::parameter_count() const {
  std::size_t n = 0;
  for (const auto& t : blocks_) n += t.size();
  return n;
}

bool ParamSet::congruent(const ParamSet& other) const {
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    if (blocks_[i].rows != other.blocks_[i].rows || blocks_[i].cols != other.blocks_[i].cols) {
      return false;
    }
  }
  return true;
}

Gradients::Gradients(const ModelShape& shape) : ParamSet(shape) {
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    if (is_row_sparse(block_at(i))) marked_[i].assign(blocks_[i].rows, 0);
  }
}

void Gradients::mark_row(Block b, std::size_t r) {
  const auto i = static_cast<std::size_t>(b);
  if (!is_row_sparse(b) || marked_[i][r]) return;
  marked_[i][r] = 1;
  touched_[i].push_back(r);
}

const std::vector<std::size_t>& Gradients::touched_rows(Block b) const {
  return touched_[static_cast<std::size_t>(b)];
}

void Gradients::zero() {
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    Tensor& t = blocks_[i];
    if (row_tracked(block_at(i))) {
      for (std::size_t r : touched_[i]) {
        std::fill(t.row(r).begin(), t.row(r).end(), 0.0);
        marked_[i][r] = 0;
      }
      touched_[i].clear();
    } else {
      std::fill(t.data.begin(), t.data.end(), 0.0);
    }
  }
}

double Gradients::squared_norm() const {
  double total = 0.0;
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    const Tensor& t = blocks_[i];
    if (row_tracked(block_at(i))) {
      for (std::size_t r : touched_[i]) total += simd::dot(t.row(r), t.row(r));
    } else {
      total += simd::dot(t.data, t.data);
    }
  }
  return total;
}

void Gradients::scale(double factor) {
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    Tensor& t = blocks_[i];
    if (row_tracked(block_at(i))) {
      for (std::size_t r : touched_[i]) {
        for (double& v : t.row(r)) v *= factor;
      }
    } else {
      for (double& v : t.data) v *= factor;
    }
  }
}

ModelParams init_params(const Hyperparams& h, const Vocabulary& vocab,
                        const EmbeddingTable* pretrained) {
  h.validate();
  if (pretrained != nullptr && pretrained->dimension != h.word_dim) {
    throw DataError("pretrained embedding dimension " + std::to_string(pretrained->dimension) +
                    " does not match word_dim " + std::to_string(h.word_dim));
  }
  ModelParams params(ModelShape::from(h, vocab));
  std::mt19937_64 rng(h.seed);
  std::uniform_real_distribution<double> uniform(-h.init_range, h.init_range);
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    for (double& v : params[block_at(i)].data) v = uniform(rng);
  }
  if (pretrained != nullptr) {
    Tensor& emb = params[Block::WordEmbedding];
    for (std::size_t id = 1; id < vocab.word_count(); ++id) {
      if (const auto* vec = pretrained->find(vocab.word(static_cast<int>(id)))) {
        std::copy(vec->begin(), vec->end(), emb.row(id).begin());
      }
    }
  }
  return params;
}

void sgd_update(ModelParams& params, const Gradients& grads, double learning_rate) {
  if (!params.congruent(grads)) throw UsageError("gradient shapes do not match parameters");
  for (std::size_t i = 0; i < kBlockCount; ++i) {
    const Block b = block_at(i);
    Tensor& p = params[b];
    const Tensor& g = grads[b];
    if (grads.row_tracked(b)) {
      for (std::size_t r : grads.touched_rows(b)) simd::axpy(-learning_rate, g.row(r), p.row(r));
    } else {
      simd::axpy(-learning_rate, g.data, p.data);
    }
  }
}

double clip_gradients(Gradients& grads, double max_norm) {
  const double norm = std::sqrt(grads.squared_norm());
  if (max_norm > 0.0 && norm > max_norm) grads.scale(max_norm / norm);
  return norm;
}

}  // namespace lrtag

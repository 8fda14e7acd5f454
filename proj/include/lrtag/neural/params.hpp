#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lrtag/corpus/embeddings.hpp"
#include "lrtag/corpus/vocabulary.hpp"
#include "lrtag/neural/hyperparams.hpp"

namespace lrtag {

// Row-major matrix; biases are rows x 1.
struct Tensor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::size_t size() const { return data.size(); }
  std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

// Parameter blocks of the tagger. LSTM weight matrices are 4H x (input + H)
// with gate rows ordered input, forget, cell, output and columns ordered
// [x; h_prev]. The decoder reads CharEmbedding and the char encoder blocks;
// there is no separate copy of either.
enum class Block : std::size_t {
  CharEmbedding,
  CharFwdW,
  CharFwdB,
  CharBwdW,
  CharBwdB,
  WordEmbedding,
  WordFwdW,
  WordFwdB,
  WordBwdW,
  WordBwdB,
  TagW,
  TagB,
  DecInitHW,
  DecInitHB,
  DecInitCW,
  DecInitCB,
  DecW,
  DecB,
  DecOutW,
  DecOutB,
  LogFreqW,
  LogFreqB,
};
inline constexpr std::size_t kBlockCount = 22;

std::string_view block_name(Block b);
inline constexpr Block block_at(std::size_t i) { return static_cast<Block>(i); }

// Embedding blocks receive row-sparse gradients.
inline constexpr bool is_row_sparse(Block b) {
  return b == Block::CharEmbedding || b == Block::WordEmbedding;
}

struct ModelShape {
  std::size_t word_vocab = 0;
  std::size_t char_vocab = 0;
  std::size_t word_dim = 0;
  std::size_t char_dim = 0;
  std::size_t hidden = 0;
  std::size_t logfreq_buckets = 0;

  static ModelShape from(const Hyperparams& h, const Vocabulary& vocab);
  std::pair<std::size_t, std::size_t> block_shape(Block b) const;

  friend bool operator==(const ModelShape&, const ModelShape&) = default;
};

class ParamSet {
 public:
  ParamSet() = default;
  explicit ParamSet(const ModelShape& shape);

  const ModelShape& shape() const { return shape_; }
  Tensor& operator[](Block b) { return blocks_[static_cast<std::size_t>(b)]; }
  const Tensor& operator[](Block b) const { return blocks_[static_cast<std::size_t>(b)]; }

  std::size_t parameter_count() const;
  bool congruent(const ParamSet& other) const;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 protected:
  ModelShape shape_;
  std::array<Tensor, kBlockCount> blocks_;
};

struct ModelParams : ParamSet {
  using ParamSet::ParamSet;
};

// Same block catalog as ModelParams. Embedding blocks remember which rows
// were written so zeroing, clipping and updates skip untouched rows.
class Gradients : public ParamSet {
 public:
  Gradients() = default;
  explicit Gradients(const ModelShape& shape);
  static Gradients zeros_like(const ModelParams& params) { return Gradients(params.shape()); }

  // Row r of a sparse block is about to receive gradient.
  void mark_row(Block b, std::size_t r);
  // Rows that may be non-zero; every row for dense blocks.
  bool row_tracked(Block b) const { return is_row_sparse(b) && !dense_fallback_; }
  const std::vector<std::size_t>& touched_rows(Block b) const;

  // Treat all blocks as dense (for hand-built gradients in tests).
  void disable_row_tracking() { dense_fallback_ = true; }

  void zero();
  double squared_norm() const;
  void scale(double factor);

 private:
  std::array<std::vector<std::size_t>, kBlockCount> touched_;
  std::array<std::vector<unsigned char>, kBlockCount> marked_;
  bool dense_fallback_ = false;
};

// Uniform [-init_range, init_range] from a generator seeded with h.seed;
// rows of words present in `pretrained` are copied verbatim.
ModelParams init_params(const Hyperparams& h, const Vocabulary& vocab,
                        const EmbeddingTable* pretrained);

// params -= lr * grads. Throws UsageError on shape mismatch.
void sgd_update(ModelParams& params, const Gradients& grads, double learning_rate);

// Rescales to global L2 norm max_norm when above it. Returns the norm before
// clipping.
double clip_gradients(Gradients& grads, double max_norm);

}  // namespace lrtag

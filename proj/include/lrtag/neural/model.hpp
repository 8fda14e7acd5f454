#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/vocabulary.hpp"
#include "lrtag/neural/hyperparams.hpp"
#include "lrtag/neural/lstm.hpp"
#include "lrtag/neural/params.hpp"

namespace lrtag {

using Rng = std::mt19937_64;

// A sentence mapped through the vocabulary.
struct TaggerInput {
  std::vector<int> word_ids;
  std::vector<std::vector<int>> char_ids;

  std::size_t size() const { return word_ids.size(); }
};

TaggerInput encode_words(std::span<const std::string> words, const Vocabulary& vocab);
TaggerInput encode_sentence(const Sentence& sentence, const Vocabulary& vocab);

// Softmax output kept in both linear and log space.
struct Distribution {
  std::vector<double> prob;
  std::vector<double> log_prob;

  std::size_t size() const { return prob.size(); }
  // First maximum, i.e. lowest index on ties.
  std::size_t argmax() const;
};

// Log-sum-exp stabilized softmax.
Distribution softmax(std::span<const double> logits);

// ---- character encoder -------------------------------------------------

struct CharForward {
  std::vector<int> ids;  // after character dropout
  std::vector<double> embedded;  // m x char_dim
  std::vector<double> embedded_reversed;
  LstmTrace fwd;
  LstmTrace bwd;  // over the reversed sequence
  std::vector<double> v;  // [fwd final; bwd final], 2H
};

// Throws DataError on an empty word or an id outside the char vocabulary.
CharForward char_forward(std::span<const int> chars, const ModelParams& params, ForwardMode mode,
                         Rng& rng);
void char_backward(const CharForward& fw, std::span<const double> dv, const ModelParams& params,
                   Gradients& grads);

// v_c: concatenated final states of the forward and backward char LSTMs.
std::vector<double> char_encode(std::span<const int> chars, const ModelParams& params,
                                ForwardMode mode, Rng& rng);

// ---- word context encoder ----------------------------------------------

struct SentenceForward {
  std::vector<CharForward> chars;
  std::vector<int> word_ids;
  std::size_t input_dim = 0;
  std::vector<double> inputs;           // n x (word_dim + 2H), after noise
  std::vector<double> inputs_reversed;  // same rows, reversed order
  LstmTrace fwd;
  LstmTrace bwd;
  std::vector<double> states;  // n x 2H, row i = [fwd after 1..i; bwd after n..i]

  std::size_t size() const { return word_ids.size(); }
  std::span<const double> state(std::size_t i) const;
};

SentenceForward sentence_forward(const TaggerInput& input, const ModelParams& params,
                                 ForwardMode mode, Rng& rng);
// d_states is n x 2H.
void sentence_backward(const SentenceForward& fw, std::span<const double> d_states,
                       const ModelParams& params, Gradients& grads);

std::vector<std::vector<double>> word_context_encode(const TaggerInput& input,
                                                     const ModelParams& params, ForwardMode mode,
                                                     Rng& rng);

// ---- heads -------------------------------------------------------------

// Affine map of a 2H vector through (w, b), written into `out`.
void affine(const Tensor& w, const Tensor& b, std::span<const double> x, std::span<double> out);

// softmax(TagW v_w + TagB) over the 17 tags.
Distribution classify(std::span<const double> v_w, const ModelParams& params);

// ---- character decoder ---------------------------------------------------

struct DecoderForward {
  std::vector<int> prev_ids;  // BOS, y_1 .. y_m
  std::vector<int> targets;   // y_1 .. y_m, EOS
  std::vector<double> h0;
  std::vector<double> c0;
  std::size_t input_dim = 0;
  std::vector<double> inputs;  // steps x (char_dim + 2H): [emb(prev); v_c]
  LstmTrace lstm;
  std::vector<Distribution> outputs;
};

// Teacher-forced pass: initial state is an affine projection of v_c, every
// step also sees v_c.
DecoderForward decoder_forward(std::span<const double> v_c, std::span<const int> target,
                               const ModelParams& params);
// d_logits is steps x char_vocab. Returns the gradient on v_c.
std::vector<double> decoder_backward(const DecoderForward& fw, std::span<const double> v_c,
                                     std::span<const double> d_logits, const ModelParams& params,
                                     Gradients& grads);

std::vector<Distribution> decode_chars(std::span<const double> v_c, std::span<const int> target,
                                       const ModelParams& params);

// Feeds back the argmax character until EOS or max_len characters.
std::vector<int> greedy_decode(std::span<const double> v_c, const ModelParams& params,
                               std::size_t max_len);

// ---- inference -----------------------------------------------------------

// Eval-mode argmax per token, ties by PosTag order.
std::vector<PosTag> predict_tags(const TaggerInput& input, const ModelParams& params);
std::vector<PosTag> predict_tags(const Sentence& sentence, const ModelParams& params,
                                 const Vocabulary& vocab);

}  // namespace lrtag

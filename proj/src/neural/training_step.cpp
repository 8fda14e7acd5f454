#include "lrtag/neural/training_step.hpp"

#include <algorithm>

#include "lrtag/error.hpp"
#include "lrtag/simd/kernels.hpp"

namespace lrtag {

TaggedExample make_tagged_example(const SilverSentence& sentence, const Vocabulary& vocab) {
  TaggedExample ex;
  std::vector<std::string> words;
  words.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) {
    words.push_back(t.surface);
    ex.silver.push_back(t.supervision);
  }
  ex.input = encode_words(words, vocab);
  ex.logfreq = sentence.logfreq;
  return ex;
}

AutoencodeExample make_autoencode_example(const AuxExample& example, const Vocabulary& vocab) {
  return AutoencodeExample{vocab.char_ids(example.input), vocab.char_ids(example.target)};
}

namespace {

// Backpropagates d_logits of a head (rows x out) into d_states (rows x 2H).
void head_backward(const Tensor& w, const SentenceForward& fw, std::span<const double> d_logits,
                   Tensor& gw, Tensor& gb, std::vector<double>& d_states) {
  const auto& k = simd::active();
  const std::size_t out = w.rows;
  const std::size_t width = w.cols;
  for (std::size_t i = 0; i < fw.size(); ++i) {
    const double* dl = d_logits.data() + i * out;
    if (std::all_of(dl, dl + out, [](double x) { return x == 0.0; })) continue;
    k.axpy(1.0, dl, gb.data.data(), out);
    k.ger(gw.data.data(), out, width, dl, fw.state(i).data());
    k.gemv_t(w.data.data(), out, width, dl, d_states.data() + i * width);
  }
}

std::vector<Distribution> head_forward(const Tensor& w, const Tensor& b, const SentenceForward& fw) {
  std::vector<Distribution> out;
  out.reserve(fw.size());
  std::vector<double> logits(w.rows);
  for (std::size_t i = 0; i < fw.size(); ++i) {
    affine(w, b, fw.state(i), logits);
    out.push_back(softmax(logits));
  }
  return out;
}

}  // namespace

LossComponents joint_step(std::span<const TaggedExample> pos_batch,
                          std::span<const AutoencodeExample> aux_batch, const ModelParams& params,
                          ForwardMode mode, Rng& rng, Gradients& grads) {
  if (pos_batch.empty() && aux_batch.empty()) throw UsageError("joint_step needs a non-empty batch");
  grads.zero();
  LossComponents loss;
  const std::size_t H = params.shape().hidden;

  for (const auto& ex : pos_batch) {
    if (ex.silver.size() != ex.input.size()) {
      throw UsageError("supervision length does not match sentence length");
    }
    const SentenceForward fw = sentence_forward(ex.input, params, mode, rng);
    std::vector<double> d_states(fw.size() * 2 * H, 0.0);

    const auto dists = head_forward(params[Block::TagW], params[Block::TagB], fw);
    const LossTerms tag_terms = tagging_terms(dists, ex.silver);
    loss.tagging += tag_terms.loss;
    head_backward(params[Block::TagW], fw, tag_terms.d_logits, grads[Block::TagW],
                  grads[Block::TagB], d_states);

    if (!ex.logfreq.empty()) {
      const std::size_t top = params.shape().logfreq_buckets - 1;
      std::vector<int> classes;
      classes.reserve(ex.logfreq.size());
      for (int b : ex.logfreq) classes.push_back(std::min<int>(b, static_cast<int>(top)));
      const auto lf = head_forward(params[Block::LogFreqW], params[Block::LogFreqB], fw);
      const LossTerms lf_terms = class_nll_terms(lf, classes);
      loss.logfreq += lf_terms.loss;
      head_backward(params[Block::LogFreqW], fw, lf_terms.d_logits, grads[Block::LogFreqW],
                    grads[Block::LogFreqB], d_states);
    }
    sentence_backward(fw, d_states, params, grads);
  }

  for (const auto& ex : aux_batch) {
    const CharForward enc = char_forward(ex.input_chars, params, mode, rng);
    const DecoderForward dec = decoder_forward(enc.v, ex.target_chars, params);
    const LossTerms terms = loss_autoencode_terms(dec.outputs, dec.targets);
    loss.autoencode += terms.loss;
    const std::vector<double> dv = decoder_backward(dec, enc.v, terms.d_logits, params, grads);
    char_backward(enc, dv, params, grads);
  }
  return loss;
}

std::pair<LossComponents, Gradients> joint_step(std::span<const TaggedExample> pos_batch,
                                                std::span<const AutoencodeExample> aux_batch,
                                                const ModelParams& params, ForwardMode mode,
                                                Rng& rng) {
  Gradients grads = Gradients::zeros_like(params);
  LossComponents loss = joint_step(pos_batch, aux_batch, params, mode, rng, grads);
  return {loss, std::move(grads)};
}

}  // namespace lrtag

#include "lrtag/neural/model.hpp"

#include <algorithm>
#include <cmath>

#include "lrtag/error.hpp"
#include "lrtag/simd/kernels.hpp"

namespace lrtag {
namespace {

bool all_zero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

void add_into_row(Tensor& t, std::size_t row, std::span<const double> values) {
  simd::axpy(1.0, values, t.row(row));
}

}  // namespace

TaggerInput encode_words(std::span<const std::string> words, const Vocabulary& vocab) {
  TaggerInput input;
  input.word_ids.reserve(words.size());
  input.char_ids.reserve(words.size());
  for (const auto& w : words) {
    input.word_ids.push_back(vocab.word_id(w));
    input.char_ids.push_back(vocab.char_ids(w));
  }
  return input;
}

TaggerInput encode_sentence(const Sentence& sentence, const Vocabulary& vocab) {
  std::vector<std::string> words;
  words.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) words.push_back(t.surface);
  return encode_words(words, vocab);
}

std::size_t Distribution::argmax() const {
  return static_cast<std::size_t>(std::max_element(prob.begin(), prob.end()) - prob.begin());
}

Distribution softmax(std::span<const double> logits) {
  Distribution d;
  const double m = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double x : logits) sum += std::exp(x - m);
  const double log_z = m + std::log(sum);
  d.log_prob.resize(logits.size());
  d.prob.resize(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    d.log_prob[i] = logits[i] - log_z;
    d.prob[i] = std::exp(d.log_prob[i]);
  }
  return d;
}

// ---- character encoder -----------------------------------------------------

CharForward char_forward(std::span<const int> chars, const ModelParams& params, ForwardMode mode,
                         Rng& rng) {
  const ModelShape& shape = params.shape();
  if (chars.empty()) throw DataError("cannot encode an empty character sequence");
  for (int id : chars) {
    if (id < 0 || static_cast<std::size_t>(id) >= shape.char_vocab) {
      throw DataError("character id " + std::to_string(id) + " is outside the character vocabulary");
    }
  }

  CharForward fw;
  fw.ids.assign(chars.begin(), chars.end());
  if (mode.train && mode.char_dropout > 0.0) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int& id : fw.ids) {
      if (coin(rng) < mode.char_dropout) id = Vocabulary::kUnkChar;
    }
  }

  const Tensor& emb = params[Block::CharEmbedding];
  const std::size_t m = fw.ids.size();
  const std::size_t C = shape.char_dim;
  fw.embedded.resize(m * C);
  fw.embedded_reversed.resize(m * C);
  for (std::size_t t = 0; t < m; ++t) {
    const auto row = emb.row(static_cast<std::size_t>(fw.ids[t]));
    std::copy(row.begin(), row.end(), fw.embedded.begin() + static_cast<std::ptrdiff_t>(t * C));
    std::copy(row.begin(), row.end(),
              fw.embedded_reversed.begin() + static_cast<std::ptrdiff_t>((m - 1 - t) * C));
  }
  fw.fwd = lstm_forward(params[Block::CharFwdW], params[Block::CharFwdB], fw.embedded, C);
  fw.bwd = lstm_forward(params[Block::CharBwdW], params[Block::CharBwdB], fw.embedded_reversed, C);

  const std::size_t H = shape.hidden;
  fw.v.resize(2 * H);
  std::copy_n(fw.fwd.final_h().begin(), H, fw.v.begin());
  std::copy_n(fw.bwd.final_h().begin(), H, fw.v.begin() + static_cast<std::ptrdiff_t>(H));
  return fw;
}

void char_backward(const CharForward& fw, std::span<const double> dv, const ModelParams& params,
                   Gradients& grads) {
  if (all_zero(dv)) return;
  const std::size_t H = params.shape().hidden;
  const std::size_t C = params.shape().char_dim;
  const std::size_t m = fw.ids.size();

  std::vector<double> dh(m * H, 0.0);
  std::copy_n(dv.begin(), H, dh.begin() + static_cast<std::ptrdiff_t>((m - 1) * H));
  const auto back_f = lstm_backward(params[Block::CharFwdW], fw.fwd, dh, grads[Block::CharFwdW],
                                    grads[Block::CharFwdB]);
  std::copy_n(dv.begin() + static_cast<std::ptrdiff_t>(H), H,
              dh.begin() + static_cast<std::ptrdiff_t>((m - 1) * H));
  const auto back_b = lstm_backward(params[Block::CharBwdW], fw.bwd, dh, grads[Block::CharBwdW],
                                    grads[Block::CharBwdB]);

  Tensor& g_emb = grads[Block::CharEmbedding];
  for (std::size_t t = 0; t < m; ++t) {
    const auto row = static_cast<std::size_t>(fw.ids[t]);
    grads.mark_row(Block::CharEmbedding, row);
    add_into_row(g_emb, row, std::span<const double>(back_f.dx).subspan(t * C, C));
    add_into_row(g_emb, row, std::span<const double>(back_b.dx).subspan((m - 1 - t) * C, C));
  }
}

std::vector<double> char_encode(std::span<const int> chars, const ModelParams& params,
                                ForwardMode mode, Rng& rng) {
  return char_forward(chars, params, mode, rng).v;
}

// ---- word context encoder ----------------------------------------------------

std::span<const double> SentenceForward::state(std::size_t i) const {
  const std::size_t width = fwd.hidden * 2;
  return {states.data() + i * width, width};
}

SentenceForward sentence_forward(const TaggerInput& input, const ModelParams& params,
                                 ForwardMode mode, Rng& rng) {
  const ModelShape& shape = params.shape();
  const std::size_t n = input.size();
  if (n == 0) throw DataError("cannot encode an empty sentence");
  const std::size_t W = shape.word_dim;
  const std::size_t H = shape.hidden;

  SentenceForward fw;
  fw.word_ids = input.word_ids;
  fw.input_dim = W + 2 * H;
  fw.inputs.resize(n * fw.input_dim);
  fw.inputs_reversed.resize(n * fw.input_dim);
  fw.chars.reserve(n);

  const Tensor& emb = params[Block::WordEmbedding];
  std::normal_distribution<double> noise(0.0, mode.word_noise > 0.0 ? mode.word_noise : 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const int id = input.word_ids[i];
    if (id < 0 || static_cast<std::size_t>(id) >= shape.word_vocab) {
      throw DataError("word id " + std::to_string(id) + " is outside the word vocabulary");
    }
    fw.chars.push_back(char_forward(input.char_ids[i], params, mode, rng));

    double* row = fw.inputs.data() + i * fw.input_dim;
    const auto e = emb.row(static_cast<std::size_t>(id));
    std::copy(e.begin(), e.end(), row);
    if (mode.train && mode.word_noise > 0.0) {
      for (std::size_t j = 0; j < W; ++j) row[j] += noise(rng);
    }
    std::copy(fw.chars.back().v.begin(), fw.chars.back().v.end(), row + W);
    std::copy_n(row, fw.input_dim, fw.inputs_reversed.data() + (n - 1 - i) * fw.input_dim);
  }

  fw.fwd = lstm_forward(params[Block::WordFwdW], params[Block::WordFwdB], fw.inputs, fw.input_dim);
  fw.bwd = lstm_forward(params[Block::WordBwdW], params[Block::WordBwdB], fw.inputs_reversed,
                        fw.input_dim);

  fw.states.resize(n * 2 * H);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = fw.states.data() + i * 2 * H;
    const auto hf = fw.fwd.h(i);
    const auto hb = fw.bwd.h(n - 1 - i);
    std::copy(hf.begin(), hf.end(), row);
    std::copy(hb.begin(), hb.end(), row + H);
  }
  return fw;
}

void sentence_backward(const SentenceForward& fw, std::span<const double> d_states,
                       const ModelParams& params, Gradients& grads) {
  if (all_zero(d_states)) return;
  const std::size_t n = fw.size();
  const std::size_t H = params.shape().hidden;
  const std::size_t W = params.shape().word_dim;

  std::vector<double> dh_f(n * H);
  std::vector<double> dh_b(n * H);
  for (std::size_t i = 0; i < n; ++i) {
    const double* d = d_states.data() + i * 2 * H;
    std::copy_n(d, H, dh_f.data() + i * H);
    std::copy_n(d + H, H, dh_b.data() + (n - 1 - i) * H);
  }
  const auto back_f = lstm_backward(params[Block::WordFwdW], fw.fwd, dh_f, grads[Block::WordFwdW],
                                    grads[Block::WordFwdB]);
  const auto back_b = lstm_backward(params[Block::WordBwdW], fw.bwd, dh_b, grads[Block::WordBwdW],
                                    grads[Block::WordBwdB]);

  std::vector<double> dx(fw.input_dim);
  Tensor& g_emb = grads[Block::WordEmbedding];
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(back_f.dx.data() + i * fw.input_dim, fw.input_dim, dx.begin());
    simd::axpy(1.0, std::span<const double>(back_b.dx).subspan((n - 1 - i) * fw.input_dim, fw.input_dim),
               dx);
    const auto row = static_cast<std::size_t>(fw.word_ids[i]);
    grads.mark_row(Block::WordEmbedding, row);
    add_into_row(g_emb, row, std::span<const double>(dx).first(W));
    char_backward(fw.chars[i], std::span<const double>(dx).subspan(W, 2 * H), params, grads);
  }
}

std::vector<std::vector<double>> word_context_encode(const TaggerInput& input,
                                                     const ModelParams& params, ForwardMode mode,
                                                     Rng& rng) {
  const SentenceForward fw = sentence_forward(input, params, mode, rng);
  std::vector<std::vector<double>> out;
  out.reserve(fw.size());
  for (std::size_t i = 0; i < fw.size(); ++i) {
    const auto s = fw.state(i);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

// ---- heads -------------------------------------------------------------------

void affine(const Tensor& w, const Tensor& b, std::span<const double> x, std::span<double> out) {
  std::copy(b.data.begin(), b.data.end(), out.begin());
  simd::active().gemv(w.data.data(), w.rows, w.cols, x.data(), out.data());
}

Distribution classify(std::span<const double> v_w, const ModelParams& params) {
  std::array<double, kTagCount> logits{};
  affine(params[Block::TagW], params[Block::TagB], v_w, logits);
  return softmax(logits);
}

// ---- character decoder ---------------------------------------------------------

namespace {

void decoder_initial_state(std::span<const double> v_c, const ModelParams& params,
                           std::vector<double>& h0, std::vector<double>& c0) {
  const std::size_t H = params.shape().hidden;
  h0.assign(H, 0.0);
  c0.assign(H, 0.0);
  affine(params[Block::DecInitHW], params[Block::DecInitHB], v_c, h0);
  affine(params[Block::DecInitCW], params[Block::DecInitCB], v_c, c0);
}

void decoder_input_row(const ModelParams& params, int prev, std::span<const double> v_c,
                       double* row) {
  const auto e = params[Block::CharEmbedding].row(static_cast<std::size_t>(prev));
  std::copy(e.begin(), e.end(), row);
  std::copy(v_c.begin(), v_c.end(), row + e.size());
}

}  // namespace

DecoderForward decoder_forward(std::span<const double> v_c, std::span<const int> target,
                               const ModelParams& params) {
  const ModelShape& shape = params.shape();
  if (target.empty()) throw DataError("decoder target must be non-empty");
  for (int id : target) {
    if (id < 0 || static_cast<std::size_t>(id) >= shape.char_vocab) {
      throw DataError("character id " + std::to_string(id) + " is outside the character vocabulary");
    }
  }

  DecoderForward fw;
  fw.prev_ids.push_back(Vocabulary::kBos);
  fw.prev_ids.insert(fw.prev_ids.end(), target.begin(), target.end());
  fw.targets.assign(target.begin(), target.end());
  fw.targets.push_back(Vocabulary::kEos);

  decoder_initial_state(v_c, params, fw.h0, fw.c0);
  const std::size_t steps = fw.prev_ids.size();
  fw.input_dim = shape.char_dim + 2 * shape.hidden;
  fw.inputs.resize(steps * fw.input_dim);
  for (std::size_t t = 0; t < steps; ++t) {
    decoder_input_row(params, fw.prev_ids[t], v_c, fw.inputs.data() + t * fw.input_dim);
  }
  fw.lstm = lstm_forward(params[Block::DecW], params[Block::DecB], fw.inputs, fw.input_dim, fw.h0,
                         fw.c0);

  std::vector<double> logits(shape.char_vocab);
  fw.outputs.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    affine(params[Block::DecOutW], params[Block::DecOutB], fw.lstm.h(t), logits);
    fw.outputs.push_back(softmax(logits));
  }
  return fw;
}

std::vector<double> decoder_backward(const DecoderForward& fw, std::span<const double> v_c,
                                     std::span<const double> d_logits, const ModelParams& params,
                                     Gradients& grads) {
  const auto& k = simd::active();
  const ModelShape& shape = params.shape();
  const std::size_t H = shape.hidden;
  const std::size_t C = shape.char_dim;
  const std::size_t V = shape.char_vocab;
  const std::size_t steps = fw.prev_ids.size();

  const Tensor& out_w = params[Block::DecOutW];
  std::vector<double> dh(steps * H, 0.0);
  for (std::size_t t = 0; t < steps; ++t) {
    const double* dl = d_logits.data() + t * V;
    k.axpy(1.0, dl, grads[Block::DecOutB].data.data(), V);
    k.ger(grads[Block::DecOutW].data.data(), V, H, dl, fw.lstm.h(t).data());
    k.gemv_t(out_w.data.data(), V, H, dl, dh.data() + t * H);
  }

  const auto back = lstm_backward(params[Block::DecW], fw.lstm, dh, grads[Block::DecW],
                                  grads[Block::DecB]);

  std::vector<double> dv(2 * H, 0.0);
  Tensor& g_emb = grads[Block::CharEmbedding];
  for (std::size_t t = 0; t < steps; ++t) {
    const auto dx = std::span<const double>(back.dx).subspan(t * fw.input_dim, fw.input_dim);
    const auto row = static_cast<std::size_t>(fw.prev_ids[t]);
    grads.mark_row(Block::CharEmbedding, row);
    add_into_row(g_emb, row, dx.first(C));
    simd::axpy(1.0, dx.subspan(C, 2 * H), dv);
  }

  k.axpy(1.0, back.dh0.data(), grads[Block::DecInitHB].data.data(), H);
  k.ger(grads[Block::DecInitHW].data.data(), H, 2 * H, back.dh0.data(), v_c.data());
  k.gemv_t(params[Block::DecInitHW].data.data(), H, 2 * H, back.dh0.data(), dv.data());
  k.axpy(1.0, back.dc0.data(), grads[Block::DecInitCB].data.data(), H);
  k.ger(grads[Block::DecInitCW].data.data(), H, 2 * H, back.dc0.data(), v_c.data());
  k.gemv_t(params[Block::DecInitCW].data.data(), H, 2 * H, back.dc0.data(), dv.data());
  return dv;
}

std::vector<Distribution> decode_chars(std::span<const double> v_c, std::span<const int> target,
                                       const ModelParams& params) {
  return decoder_forward(v_c, target, params).outputs;
}

std::vector<int> greedy_decode(std::span<const double> v_c, const ModelParams& params,
                               std::size_t max_len) {
  const ModelShape& shape = params.shape();
  std::vector<double> h;
  std::vector<double> c;
  decoder_initial_state(v_c, params, h, c);
  std::vector<double> input(shape.char_dim + 2 * shape.hidden);
  std::vector<double> logits(shape.char_vocab);
  std::vector<int> out;
  int prev = Vocabulary::kBos;
  while (out.size() < max_len) {
    decoder_input_row(params, prev, v_c, input.data());
    const LstmTrace step =
        lstm_forward(params[Block::DecW], params[Block::DecB], input, input.size(), h, c);
    h.assign(step.h(0).begin(), step.h(0).end());
    c.assign(step.c(0).begin(), step.c(0).end());
    affine(params[Block::DecOutW], params[Block::DecOutB], h, logits);
    const int next = static_cast<int>(std::max_element(logits.begin(), logits.end()) - logits.begin());
    if (next == Vocabulary::kEos) break;
    out.push_back(next);
    prev = next;
  }
  return out;
}

// ---- inference -------------------------------------------------------------------

std::vector<PosTag> predict_tags(const TaggerInput& input, const ModelParams& params) {
  Rng unused(0);
  const SentenceForward fw = sentence_forward(input, params, ForwardMode::eval(), unused);
  std::vector<PosTag> tags;
  tags.reserve(fw.size());
  for (std::size_t i = 0; i < fw.size(); ++i) {
    tags.push_back(tag_at(classify(fw.state(i), params).argmax()));
  }
  return tags;
}

std::vector<PosTag> predict_tags(const Sentence& sentence, const ModelParams& params,
                                 const Vocabulary& vocab) {
  return predict_tags(encode_sentence(sentence, vocab), params);
}

}  // namespace lrtag

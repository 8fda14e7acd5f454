#include "lrtag/neural/lstm.hpp"

#include <algorithm>
#include <cmath>

#include "lrtag/simd/kernels.hpp"

namespace lrtag {
namespace {

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

LstmTrace lstm_forward(const Tensor& w, const Tensor& b, std::span<const double> inputs,
                       std::size_t input_dim, std::span<const double> h0,
                       std::span<const double> c0) {
  const auto& k = simd::active();
  LstmTrace tr;
  tr.input_dim = input_dim;
  tr.hidden = w.rows / 4;
  tr.steps = input_dim == 0 ? 0 : inputs.size() / input_dim;
  const std::size_t H = tr.hidden;
  const std::size_t width = input_dim + H;

  tr.xh.assign(tr.steps * width, 0.0);
  tr.gates.assign(tr.steps * 4 * H, 0.0);
  tr.cell.assign((tr.steps + 1) * H, 0.0);
  tr.state.assign((tr.steps + 1) * H, 0.0);
  tr.tanh_cell.assign(tr.steps * H, 0.0);
  if (!h0.empty()) std::copy(h0.begin(), h0.end(), tr.state.begin());
  if (!c0.empty()) std::copy(c0.begin(), c0.end(), tr.cell.begin());

  for (std::size_t t = 0; t < tr.steps; ++t) {
    double* xh = tr.xh.data() + t * width;
    std::copy_n(inputs.data() + t * input_dim, input_dim, xh);
    std::copy_n(tr.state.data() + t * H, H, xh + input_dim);

    double* z = tr.gates.data() + t * 4 * H;
    std::copy(b.data.begin(), b.data.end(), z);
    k.gemv(w.data.data(), 4 * H, width, xh, z);

    const double* c_prev = tr.cell.data() + t * H;
    double* c = tr.cell.data() + (t + 1) * H;
    double* h = tr.state.data() + (t + 1) * H;
    double* tc = tr.tanh_cell.data() + t * H;
    for (std::size_t j = 0; j < H; ++j) {
      const double i = sigmoid(z[j]);
      const double f = sigmoid(z[H + j]);
      const double g = std::tanh(z[2 * H + j]);
      const double o = sigmoid(z[3 * H + j]);
      z[j] = i;
      z[H + j] = f;
      z[2 * H + j] = g;
      z[3 * H + j] = o;
      c[j] = f * c_prev[j] + i * g;
      tc[j] = std::tanh(c[j]);
      h[j] = o * tc[j];
    }
  }
  return tr;
}

LstmInputGrads lstm_backward(const Tensor& w, const LstmTrace& tr, std::span<const double> dh_out,
                             Tensor& gw, Tensor& gb) {
  const auto& k = simd::active();
  const std::size_t H = tr.hidden;
  const std::size_t width = tr.input_dim + H;

  LstmInputGrads out;
  out.dx.assign(tr.steps * tr.input_dim, 0.0);
  std::vector<double> dh_next(H, 0.0);
  std::vector<double> dc_next(H, 0.0);
  std::vector<double> dz(4 * H);
  std::vector<double> dxh(width);

  for (std::size_t step = tr.steps; step-- > 0;) {
    const double* gates = tr.gates.data() + step * 4 * H;
    const double* c_prev = tr.cell.data() + step * H;
    const double* tc = tr.tanh_cell.data() + step * H;
    const double* dh_in = dh_out.data() + step * H;

    for (std::size_t j = 0; j < H; ++j) {
      const double i = gates[j];
      const double f = gates[H + j];
      const double g = gates[2 * H + j];
      const double o = gates[3 * H + j];
      const double dh = dh_in[j] + dh_next[j];
      const double dc = dc_next[j] + dh * o * (1.0 - tc[j] * tc[j]);
      dz[j] = dc * g * i * (1.0 - i);
      dz[H + j] = dc * c_prev[j] * f * (1.0 - f);
      dz[2 * H + j] = dc * i * (1.0 - g * g);
      dz[3 * H + j] = dh * tc[j] * o * (1.0 - o);
      dc_next[j] = dc * f;
    }

    const double* xh = tr.xh.data() + step * width;
    k.axpy(1.0, dz.data(), gb.data.data(), 4 * H);
    k.ger(gw.data.data(), 4 * H, width, dz.data(), xh);
    std::fill(dxh.begin(), dxh.end(), 0.0);
    k.gemv_t(w.data.data(), 4 * H, width, dz.data(), dxh.data());
    std::copy_n(dxh.begin(), tr.input_dim, out.dx.begin() + static_cast<std::ptrdiff_t>(step * tr.input_dim));
    std::copy_n(dxh.begin() + static_cast<std::ptrdiff_t>(tr.input_dim), H, dh_next.begin());
  }
  out.dh0 = std::move(dh_next);
  out.dc0 = std::move(dc_next);
  return out;
}

}  // namespace lrtag

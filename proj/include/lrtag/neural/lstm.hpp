#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrtag/neural/params.hpp"

namespace lrtag {

// Everything a single-layer LSTM pass keeps for backpropagation through time.
// Per-step arrays are flattened row-major by step.
struct LstmTrace {
  std::size_t input_dim = 0;
  std::size_t hidden = 0;
  std::size_t steps = 0;
  std::vector<double> xh;     // steps x (input_dim + hidden): [x_t; h_{t-1}]
  std::vector<double> gates;  // steps x 4H, activated i, f, g, o
  std::vector<double> cell;   // (steps + 1) x H, row 0 is c_0
  std::vector<double> state;  // (steps + 1) x H, row 0 is h_0
  std::vector<double> tanh_cell;  // steps x H

  // Hidden state after step t (0-based).
  std::span<const double> h(std::size_t t) const { return {state.data() + (t + 1) * hidden, hidden}; }
  std::span<const double> c(std::size_t t) const { return {cell.data() + (t + 1) * hidden, hidden}; }
  std::span<const double> final_h() const { return {state.data() + steps * hidden, hidden}; }
};

// inputs is steps x input_dim. h0/c0 may be empty for zero initial state.
LstmTrace lstm_forward(const Tensor& w, const Tensor& b, std::span<const double> inputs,
                       std::size_t input_dim, std::span<const double> h0 = {},
                       std::span<const double> c0 = {});

struct LstmInputGrads {
  std::vector<double> dx;  // steps x input_dim
  std::vector<double> dh0;
  std::vector<double> dc0;
};

// dh_out is steps x H (gradient arriving at every step's output); gw/gb
// accumulate.
LstmInputGrads lstm_backward(const Tensor& w, const LstmTrace& trace, std::span<const double> dh_out,
                             Tensor& gw, Tensor& gb);

}  // namespace lrtag

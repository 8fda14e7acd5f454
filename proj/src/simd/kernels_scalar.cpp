#include "kernels_internal.hpp"

namespace lrtag::simd::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv_scalar(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] += dot_scalar(w + r * cols, x, cols);
}

void gemv_t_scalar(const double* w, std::size_t rows, std::size_t cols, const double* y_grad,
                   double* x_grad) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (y_grad[r] != 0.0) axpy_scalar(y_grad[r], w + r * cols, x_grad, cols);
  }
}

void ger_scalar(double* g, std::size_t rows, std::size_t cols, const double* y_grad,
                const double* x) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (y_grad[r] != 0.0) axpy_scalar(y_grad[r], x, g + r * cols, cols);
  }
}

}  // namespace

const KernelTable kScalarTable{Isa::Scalar, "scalar", dot_scalar, axpy_scalar,
                               gemv_scalar, gemv_t_scalar, ger_scalar};

}  // namespace lrtag::simd::detail

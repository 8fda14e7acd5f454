#pragma once

// Dense double-precision kernels used by the LSTM forward and backward passes.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2+FMA
// variant is compiled into a separate translation unit and chosen at runtime
// when the CPU advertises both features. Setting LRTAG_SIMD=scalar in the
// environment pins the scalar path. Matrices are row-major.

#include <cstddef>
#include <span>
#include <string_view>

namespace lrtag::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y += W x, W is rows x cols
  void (*gemv)(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y);
  // x_grad += W^T y_grad
  void (*gemv_t)(const double* w, std::size_t rows, std::size_t cols, const double* y_grad,
                 double* x_grad);
  // G += y_grad x^T
  void (*ger)(double* g, std::size_t rows, std::size_t cols, const double* y_grad, const double* x);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

// Kernel table used by the library. Resolved once on first use.
const KernelTable& active();

// Overrides the runtime choice. Throws UsageError if the ISA is unavailable.
void select(Isa isa);

std::string_view isa_name(Isa isa);

// Span conveniences over the active table.
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace lrtag::simd

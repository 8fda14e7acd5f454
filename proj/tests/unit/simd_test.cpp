#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lrtag/error.hpp"
#include "lrtag/neural/lstm.hpp"
#include "lrtag/simd/kernels.hpp"

using namespace lrtag;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Sizes straddling the 4-wide vector width and the 4-row blocking.
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 100, 203};

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  const auto& k = simd::scalar_kernels();
  std::mt19937_64 rng(3);
  const auto w = random_vector(3 * 4, rng);
  const auto x = random_vector(4, rng);
  std::vector<double> y(3, 1.0);
  k.gemv(w.data(), 3, 4, x.data(), y.data());
  for (std::size_t r = 0; r < 3; ++r) {
    double expect = 1.0;
    for (std::size_t c = 0; c < 4; ++c) expect += w[r * 4 + c] * x[c];
    CHECK(y[r] == doctest::Approx(expect).epsilon(1e-14));
  }
  std::vector<double> xg(4, 0.0);
  const std::vector<double> yg{1.0, 0.0, -2.0};
  k.gemv_t(w.data(), 3, 4, yg.data(), xg.data());
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(xg[c] == doctest::Approx(w[c] - 2.0 * w[8 + c]).epsilon(1e-14));
  }
  std::vector<double> g(12, 0.0);
  k.ger(g.data(), 3, 4, yg.data(), x.data());
  CHECK(g[0] == doctest::Approx(x[0]));
  CHECK(g[4] == 0.0);
  CHECK(g[9] == doctest::Approx(-2.0 * x[1]));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* v = simd::avx2_kernels();
  if (v == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto& s = simd::scalar_kernels();
  std::mt19937_64 rng(11);
  for (std::size_t n : kSizes) {
    CAPTURE(n);
    const auto a = random_vector(n, rng);
    const auto b = random_vector(n, rng);
    CHECK(v->dot(a.data(), b.data(), n) == doctest::Approx(s.dot(a.data(), b.data(), n)).epsilon(1e-12));

    auto y1 = random_vector(n, rng);
    auto y2 = y1;
    s.axpy(0.37, a.data(), y1.data(), n);
    v->axpy(0.37, a.data(), y2.data(), n);
    CHECK(max_abs_diff(y1, y2) < 1e-14);

    for (std::size_t rows : {std::size_t{1}, std::size_t{3}, std::size_t{4}, std::size_t{9}, std::size_t{20}}) {
      CAPTURE(rows);
      const auto w = random_vector(rows * n, rng);
      auto out1 = random_vector(rows, rng);
      auto out2 = out1;
      s.gemv(w.data(), rows, n, a.data(), out1.data());
      v->gemv(w.data(), rows, n, a.data(), out2.data());
      CHECK(max_abs_diff(out1, out2) < 1e-12);

      auto yg = random_vector(rows, rng);
      yg[0] = 0.0;  // exercises the zero-row skip
      auto xg1 = random_vector(n, rng);
      auto xg2 = xg1;
      s.gemv_t(w.data(), rows, n, yg.data(), xg1.data());
      v->gemv_t(w.data(), rows, n, yg.data(), xg2.data());
      CHECK(max_abs_diff(xg1, xg2) < 1e-12);

      auto g1 = random_vector(rows * n, rng);
      auto g2 = g1;
      s.ger(g1.data(), rows, n, yg.data(), a.data());
      v->ger(g2.data(), rows, n, yg.data(), a.data());
      CHECK(max_abs_diff(g1, g2) < 1e-14);
    }
  }
}

TEST_CASE("lstm forward and backward agree across kernel tables") {
  if (simd::avx2_kernels() == nullptr) return;
  std::mt19937_64 rng(5);
  const std::size_t in = 7, H = 9, steps = 6;
  Tensor w(4 * H, in + H), b(4 * H, 1);
  w.data = random_vector(w.size(), rng);
  b.data = random_vector(b.size(), rng);
  const auto inputs = random_vector(steps * in, rng);
  const auto dh = random_vector(steps * H, rng);

  auto run = [&](simd::Isa isa) {
    simd::select(isa);
    auto trace = lstm_forward(w, b, inputs, in);
    Tensor gw(w.rows, w.cols), gb(b.rows, 1);
    auto grads = lstm_backward(w, trace, dh, gw, gb);
    return std::make_tuple(trace.state, grads.dx, gw.data);
  };
  const auto scalar = run(simd::Isa::Scalar);
  const auto vec = run(simd::Isa::Avx2);
  simd::select(simd::cpu_supports(simd::Isa::Avx2) ? simd::Isa::Avx2 : simd::Isa::Scalar);
  CHECK(max_abs_diff(std::get<0>(scalar), std::get<0>(vec)) < 1e-12);
  CHECK(max_abs_diff(std::get<1>(scalar), std::get<1>(vec)) < 1e-12);
  CHECK(max_abs_diff(std::get<2>(scalar), std::get<2>(vec)) < 1e-12);
}

TEST_CASE("dispatch reports and selects kernel tables") {
  CHECK(simd::cpu_supports(simd::Isa::Scalar));
  CHECK(simd::isa_name(simd::Isa::Scalar) == "scalar");
  CHECK(simd::isa_name(simd::Isa::Avx2) == "avx2");
  simd::select(simd::Isa::Scalar);
  CHECK(simd::active().isa == simd::Isa::Scalar);
  if (simd::avx2_kernels() == nullptr) {
    CHECK_THROWS_AS(simd::select(simd::Isa::Avx2), UsageError);
  } else {
    simd::select(simd::Isa::Avx2);
    CHECK(simd::active().isa == simd::Isa::Avx2);
  }
}

#include "lrtag/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"
#include "lrtag/error.hpp"

namespace lrtag::simd {
namespace {

const KernelTable* resolve_default() {
  const char* forced = std::getenv("LRTAG_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") return &detail::kScalarTable;
  if (const KernelTable* avx2 = avx2_kernels()) return avx2;
  return &detail::kScalarTable;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{resolve_default()};
  return slot;
}

}  // namespace

const KernelTable& scalar_kernels() { return detail::kScalarTable; }

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(LRTAG_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* avx2_kernels() {
#if defined(LRTAG_HAVE_AVX2_KERNELS)
  if (cpu_supports(Isa::Avx2)) return &detail::kAvx2Table;
#endif
  return nullptr;
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

void select(Isa isa) {
  const KernelTable* table = nullptr;
  if (isa == Isa::Scalar) table = &detail::kScalarTable;
  if (isa == Isa::Avx2) table = avx2_kernels();
  if (table == nullptr) {
    throw UsageError("SIMD variant '" + std::string(isa_name(isa)) + "' is not available");
  }
  active_slot().store(table, std::memory_order_release);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace lrtag::simd

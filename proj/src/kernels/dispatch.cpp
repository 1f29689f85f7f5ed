#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lieforge/kernels.hpp"

namespace lieforge::kernels {

namespace {

constexpr RowOps kScalar{&axpy_scalar, &scale_scalar, Backend::Scalar};
constexpr RowOps kAvx2{&axpy_avx2, &scale_avx2, Backend::Avx2};

const RowOps* detect() {
  const char* env = std::getenv("LIEFORGE_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return &kScalar;
  return avx2_available() ? &kAvx2 : &kScalar;
}

std::atomic<const RowOps*>& slot() {
  static std::atomic<const RowOps*> ops{detect()};
  return ops;
}

}  // namespace

const RowOps& active() { return *slot().load(std::memory_order_relaxed); }

void select(Backend b) {
  if (b == Backend::Avx2) {
    if (!avx2_available()) throw std::invalid_argument("AVX2 backend not available on this CPU");
    slot().store(&kAvx2);
  } else {
    slot().store(&kScalar);
  }
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace lieforge::kernels

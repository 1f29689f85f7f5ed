#include "lieforge/kernels.hpp"

namespace lieforge::kernels {

void axpy_scalar(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue q) {
  if (c == 0) return;
  const std::uint64_t cc = c;
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Residue>((dst[i] + cc * src[i]) % q);
  }
}

void scale_scalar(std::span<Residue> dst, Residue c, Residue q) {
  const std::uint64_t cc = c;
  for (auto& x : dst) x = static_cast<Residue>((cc * x) % q);
}

}  // namespace lieforge::kernels

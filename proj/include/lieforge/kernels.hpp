#pragma once
// Row kernels for modular linear algebra.
//
// Every elimination step in the library reduces to one of two operations on
// a row of canonical residues in [0, q):
//
//   axpy:  dst[i] = (dst[i] + c * src[i]) mod q
//   scale: dst[i] = (c * dst[i]) mod q
//
// A scalar reference implementation is always available. On x86-64 an AVX2
// variant is compiled with a function-level target attribute and chosen at
// runtime when the CPU supports it. Both variants must produce bit-identical
// results; the test suite checks this on random inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lieforge::kernels {

using Residue = std::uint32_t;

enum class Backend { Scalar, Avx2 };

struct RowOps {
  void (*axpy)(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue q);
  void (*scale)(std::span<Residue> dst, Residue c, Residue q);
  Backend backend;
};

// Reference implementations.
void axpy_scalar(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue q);
void scale_scalar(std::span<Residue> dst, Residue c, Residue q);

// AVX2 variants. Only callable when avx2_available() is true; moduli at or
// above kMaxSimdModulus fall back to the scalar path internally.
bool avx2_available();
void axpy_avx2(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue q);
void scale_avx2(std::span<Residue> dst, Residue c, Residue q);

// Products c*src + dst stay exact in a double below 2^53.
inline constexpr Residue kMaxSimdModulus = Residue{1} << 26;

// The dispatch table in use. Selected once: AVX2 when available unless the
// environment variable LIEFORGE_SIMD=scalar is set.
const RowOps& active();

// Force a backend (tests). Throws std::invalid_argument if unavailable.
void select(Backend b);

std::string_view backend_name(Backend b);

}  // namespace lieforge::kernels

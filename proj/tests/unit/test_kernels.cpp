#include <random>

#include "doctest.h"
#include "lieforge/kernels.hpp"

using namespace lieforge::kernels;

TEST_CASE("avx2 row kernels agree with scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 unavailable; scalar path only");
    return;
  }
  std::mt19937_64 rng(99);
  for (Residue q : {2u, 3u, 4u, 5u, 8u, 9u, 125u, 243u, 65521u, 1594323u, (1u << 26) - 5u, 1u << 25, 1u << 30}) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 17u, 64u, 101u}) {
      std::vector<Residue> src(n), a(n);
      for (std::size_t i = 0; i < n; ++i) {
        src[i] = static_cast<Residue>(rng() % q);
        a[i] = static_cast<Residue>(rng() % q);
      }
      for (Residue c : {Residue{0}, Residue{1}, q - 1, static_cast<Residue>(rng() % q)}) {
        auto s1 = a, s2 = a;
        axpy_scalar(s1, src, c, q);
        axpy_avx2(s2, src, c, q);
        CHECK(s1 == s2);
        auto t1 = a, t2 = a;
        scale_scalar(t1, c, q);
        scale_avx2(t2, c, q);
        CHECK(t1 == t2);
      }
    }
  }
}

TEST_CASE("backend selection") {
  const Backend before = active().backend;
  select(Backend::Scalar);
  CHECK(active().backend == Backend::Scalar);
  if (avx2_available()) {
    select(Backend::Avx2);
    CHECK(active().backend == Backend::Avx2);
  } else {
    CHECK_THROWS(select(Backend::Avx2));
  }
  select(before);
  CHECK(backend_name(Backend::Avx2) == "avx2");
}

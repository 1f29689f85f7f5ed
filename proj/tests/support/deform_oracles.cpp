#include "deform_oracles.hpp"

namespace lieforge::testing {

namespace {

struct Brackets {
  const ArtinLocalAlgebra& a;
  std::size_t n;
  const Constants& c;
  std::size_t r() const { return a.rank(); }

  // s * v for s in A, v in Lbar (x) A
  Vec times(const Vec& s, const Vec& v) const {
    const Scalar l = a.ring().modulus();
    Vec out(n * r(), 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < r(); ++p) {
        if (v[k * r() + p] == 0) continue;
        for (std::size_t q = 0; q < r(); ++q) {
          if (s[q] == 0) continue;
          const Vec& prod = a.product(p, q);
          for (std::size_t t = 0; t < r(); ++t)
            out[k * r() + t] = static_cast<Scalar>((out[k * r() + t] + std::uint64_t(v[k * r() + p]) * s[q] % l * prod[t]) % l);
        }
      }
    return out;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    const Scalar l = a.ring().modulus();
    Vec out(n * r(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < r(); ++p) {
        if (x[i * r() + p] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t q = 0; q < r(); ++q) {
            if (y[j * r() + q] == 0) continue;
            Vec s(r(), 0);
            const Vec& prod = a.product(p, q);
            for (std::size_t t = 0; t < r(); ++t)
              s[t] = static_cast<Scalar>(std::uint64_t(x[i * r() + p]) * y[j * r() + q] % l * prod[t] % l);
            Vec term = times(s, c[i * n + j]);
            for (std::size_t t = 0; t < out.size(); ++t) out[t] = (out[t] + term[t]) % l;
          }
      }
    return out;
  }

  Vec basis(std::size_t i) const {
    Vec v(n * r(), 0);
    v[i * r() + a.unit()] = 1;
    return v;
  }
};

bool next_vector(Vec& v, Scalar l) {
  for (auto& x : v) {
    if (++x < l) return true;
    x = 0;
  }
  return false;
}

std::size_t bounded_power(std::size_t l, std::size_t k, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= l;
    if (out > limit) return limit + 1;
  }
  return out;
}

}  // namespace

bool jacobi_holds(const ArtinLocalAlgebra& a, const GradedLieAlgebra& lbar, const Constants& c) {
  const std::size_t n = lbar.dim();
  const Scalar l = a.ring().modulus();
  Brackets br{a, n, c};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec j1 = br.bracket(br.bracket(br.basis(x), br.basis(y)), br.basis(z));
        Vec j2 = br.bracket(br.bracket(br.basis(y), br.basis(z)), br.basis(x));
        Vec j3 = br.bracket(br.bracket(br.basis(z), br.basis(x)), br.basis(y));
        for (std::size_t t = 0; t < j1.size(); ++t)
          if ((j1[t] + j2[t] + j3[t]) % l != 0) return false;
      }
  return true;
}

std::vector<std::array<std::size_t, 3>> grade0_slots(const GradedLieAlgebra& lbar) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t a = 0; a < lbar.dim(); ++a)
    for (std::size_t b = a + 1; b < lbar.dim(); ++b)
      for (std::size_t k = 0; k < lbar.dim(); ++k)
        if (lbar.degree(k) == lbar.degree(a) + lbar.degree(b)) out.push_back({a, b, k});
  return out;
}

std::optional<bool> extension_exists_bruteforce(const GradedLieAlgebra& lbar, const Constants& c,
                                                const AlgExtension& ext, std::size_t limit) {
  const auto& A = *ext.base();
  const auto& B = *ext.total();
  const std::size_t n = lbar.dim(), r = A.rank(), rb = B.rank(), e = ext.kernel_rank();
  const Scalar l = A.ring().modulus();
  auto slots = grade0_slots(lbar);
  if (bounded_power(l, e * slots.size(), limit) > limit) return std::nullopt;
  // Section by search: for each basis element of A some element of B over it.
  std::vector<Vec> section(r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec cand(rb, 0);
    do {
      if (ext.projection.apply(cand) == A.basis_element(j)) {
        section[j] = cand;
        break;
      }
    } while (next_vector(cand, l));
  }
  Constants base(n * n, Vec(n * rb, 0));
  for (std::size_t ab = 0; ab < n * n; ++ab)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < r; ++j) {
        const Scalar v = c[ab][k * r + j];
        for (std::size_t t = 0; t < rb; ++t)
          base[ab][k * rb + t] = static_cast<Scalar>((base[ab][k * rb + t] + std::uint64_t(v) * section[j][t]) % l);
      }
  Vec free(e * slots.size(), 0);
  do {
    Constants trial = base;
    for (std::size_t s = 0; s < e; ++s)
      for (std::size_t i = 0; i < slots.size(); ++i) {
        const Scalar v = free[s * slots.size() + i];
        if (v == 0) continue;
        auto [a, b, k] = slots[i];
        for (std::size_t t = 0; t < rb; ++t) {
          const Scalar add = static_cast<Scalar>(std::uint64_t(v) * ext.embedding(s, t) % l);
          trial[a * n + b][k * rb + t] = (trial[a * n + b][k * rb + t] + add) % l;
          trial[b * n + a][k * rb + t] = (trial[b * n + a][k * rb + t] + l - add) % l;
        }
      }
    if (jacobi_holds(B, lbar, trial)) return true;
  } while (next_vector(free, l));
  return false;
}

std::optional<std::vector<Constants>> all_deformations_bruteforce(const GradedLieAlgebra& lbar,
                                                                  const ArtinLocalAlgebra& a, std::size_t limit) {
  const std::size_t n = lbar.dim(), r = a.rank();
  const Scalar l = a.ring().modulus();
  auto slots = grade0_slots(lbar);
  const auto& m = a.maximal();
  if (bounded_power(l, m.size() * slots.size(), limit) > limit) return std::nullopt;
  Constants base(n * n, Vec(n * r, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto v = lbar.bracket(x, y);
      for (std::size_t k = 0; k < n; ++k) base[x * n + y][k * r + a.unit()] = v[k];
    }
  std::vector<Constants> out;
  Vec free(m.size() * slots.size(), 0);
  do {
    Constants trial = base;
    for (std::size_t s = 0; s < m.size(); ++s)
      for (std::size_t i = 0; i < slots.size(); ++i) {
        const Scalar v = free[s * slots.size() + i];
        auto [x, y, k] = slots[i];
        trial[x * n + y][k * r + m[s]] = v;
        trial[y * n + x][k * r + m[s]] = (l - v) % l;
      }
    if (jacobi_holds(a, lbar, trial)) out.push_back(trial);
  } while (next_vector(free, l));
  return out;
}

bool gauge_maps(const GradedLieAlgebra& lbar, const ArtinLocalAlgebra& a, const Constants& first,
                const Constants& second, const std::vector<Mat>& nu) {
  const std::size_t n = lbar.dim(), r = a.rank();
  const Scalar l = a.ring().modulus();
  Brackets b1{a, n, first}, b2{a, n, second};
  auto g = [&](const Vec& x) {
    // x = sum x[i,p] e_i (x) a_p; g(e_i) = e_i (x) 1 + sum_j nu_j(e_i) (x) a_{m_j}
    Vec out = x;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < r; ++p) {
        const Scalar c = x[i * r + p];
        if (c == 0) continue;
        for (std::size_t j = 0; j < nu.size(); ++j) {
          const Vec& prod = a.product(p, a.maximal()[j]);
          for (std::size_t k = 0; k < n; ++k) {
            const Scalar v = nu[j](i, k);
            if (v == 0) continue;
            for (std::size_t t = 0; t < r; ++t)
              out[k * r + t] = static_cast<Scalar>((out[k * r + t] + std::uint64_t(c) * v % l * prod[t]) % l);
          }
        }
      }
    return out;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g(b1.bracket(b1.basis(x), b1.basis(y))) != b2.bracket(g(b2.basis(x)), g(b2.basis(y)))) return false;
  return true;
}

std::optional<bool> equivalent_bruteforce(const GradedLieAlgebra& lbar, const ArtinLocalAlgebra& a,
                                          const Constants& first, const Constants& second, std::size_t limit) {
  const std::size_t n = lbar.dim();
  const Scalar l = a.ring().modulus();
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (lbar.degree(i) == lbar.degree(k)) entries.push_back({i, k});
  const std::size_t e = a.maximal().size();
  if (bounded_power(l, e * entries.size(), limit) > limit) return std::nullopt;
  Vec free(e * entries.size(), 0);
  do {
    std::vector<Mat> nu(e, Mat(a.ring(), n, n));
    for (std::size_t j = 0; j < e; ++j)
      for (std::size_t i = 0; i < entries.size(); ++i)
        nu[j].set(entries[i].first, entries[i].second, free[j * entries.size() + i]);
    if (gauge_maps(lbar, a, first, second, nu)) return true;
  } while (next_vector(free, l));
  return false;
}

}  // namespace lieforge::testing

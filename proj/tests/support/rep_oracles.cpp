#include "rep_oracles.hpp"

namespace lieforge::testing {

namespace {

Vec bracket_over(const GradedLieAlgebra& l, const ArtinLocalAlgebra& a, const Vec& u, const Vec& v) {
  const auto& ring = l.ring();
  const std::size_t n = l.dim(), r = a.rank();
  Vec out(n * r, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < r; ++i) {
      const Scalar x = u[p * r + i];
      if (x == 0) continue;
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i2 = 0; i2 < r; ++i2) {
          const Scalar y = v[q * r + i2];
          if (y == 0) continue;
          const Scalar xy = ring.mul(x, y);
          auto c = l.bracket(p, q);
          const Vec& prod = a.product(i, i2);
          for (std::size_t k = 0; k < n; ++k) {
            if (c[k] == 0) continue;
            for (std::size_t j = 0; j < r; ++j)
              if (prod[j] != 0)
                out[k * r + j] = ring.add(out[k * r + j], ring.mul(xy, ring.mul(c[k], prod[j])));
          }
        }
    }
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<Vec>>> rep_lifts_bruteforce(const GradedLieAlgebra& g,
                                                                  const GradedLieAlgebra& lbar,
                                                                  const std::vector<Vec>& rho,
                                                                  const ArtinLocalAlgebra& a, std::size_t limit) {
  const auto& ring = g.ring();
  const std::size_t n = lbar.dim(), r = a.rank();
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (basis of G, coordinate)
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t k = 0; k < n; ++k)
      if (lbar.degree(k) == g.degree(x))
        for (std::size_t j = 0; j < r; ++j)
          if (j != a.unit()) slots.push_back({x, k * r + j});
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    total *= ring.modulus();
    if (total > limit) return std::nullopt;
  }
  std::vector<Vec> base(g.dim(), Vec(n * r, 0));
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t k = 0; k < n; ++k) base[x][k * r + a.unit()] = rho[x][k];
  std::vector<std::vector<Vec>> out;
  std::vector<Scalar> digits(slots.size(), 0);
  while (true) {
    auto img = base;
    for (std::size_t i = 0; i < slots.size(); ++i) img[slots[i].first][slots[i].second] = digits[i];
    bool ok = true;
    for (std::size_t x = 0; x < g.dim() && ok; ++x)
      for (std::size_t y = x + 1; y < g.dim() && ok; ++y) {
        Vec lhs(n * r, 0);
        auto c = g.bracket(x, y);
        for (std::size_t k = 0; k < g.dim(); ++k)
          for (std::size_t i = 0; i < n * r; ++i) lhs[i] = ring.add(lhs[i], ring.mul(c[k], img[k][i]));
        ok = lhs == bracket_over(lbar, a, img[x], img[y]);
      }
    if (ok) out.push_back(img);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == ring.modulus()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace lieforge::testing

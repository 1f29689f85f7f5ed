#include "fixtures.hpp"

#include "lieforge/error.hpp"
#include "random_algebra.hpp"
#include "suites.hpp"

namespace lieforge::testing {

ArtinPtr trunc(std::uint32_t l, std::size_t n, const std::string& var) {
  return share(ArtinLocalAlgebra::truncated_polynomial(l, n, var));
}

AlgExtension truncation_extension(std::uint32_t l, std::size_t n) {
  auto big = trunc(l, n + 1), small = trunc(l, n);
  Mat m(CoeffRing(l), n + 1, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return extension_from_surjection(ArtinMorphism(big, small, m));
}

ArtinMorphism artin_morphism_from_images(const ArtinPtr& d1, const ArtinPtr& a, const std::vector<Vec>& images) {
  Mat m(a->ring(), d1->rank(), a->rank());
  m.set(d1->unit(), a->unit(), 1);
  for (std::size_t s = 0; s < images.size(); ++s)
    for (std::size_t j = 0; j < a->rank(); ++j) m.set(1 + s, j, images[s][j]);
  return ArtinMorphism(d1, a, m);
}

GradedMorphism graded_morphism_from_images(const LiePtr& g, const LiePtr& t, const std::vector<Vec>& images) {
  std::vector<Mat> blocks;
  for (int d = 1; d <= static_cast<int>(g->truncation()); ++d) {
    Mat b(g->ring(), g->rank(d), t->rank(d));
    for (std::size_t i = 0; i < g->rank(d); ++i)
      for (std::size_t j = 0; j < t->rank(d); ++j) b.set(i, j, images[g->index(d, i)][t->index(d, j)]);
    blocks.push_back(std::move(b));
  }
  return GradedMorphism(g, t, std::move(blocks));
}

std::vector<Vec> rho_images(const GradedRep& rep) {
  std::vector<Vec> out;
  for (std::size_t x = 0; x < rep.source()->dim(); ++x) out.push_back(rep.rho().image(x));
  return out;
}

std::size_t power(std::size_t l, std::size_t e) {
  std::size_t p = 1;
  while (e-- > 0) p *= l;
  return p;
}

bool next_vector(Vec& v, Scalar l) {
  for (auto& x : v) {
    if (++x < l) return true;
    x = 0;
  }
  return false;
}

std::vector<LiePtr> small_suite(std::uint32_t l, std::size_t random_count, std::uint64_t seed, std::size_t max_dim) {
  std::vector<LiePtr> out{share(abelian_21(l)), share(heisenberg(l))};
  Rng rng(seed);
  RandomLieParams p;
  p.max_dim = max_dim;
  p.truncation = 3;
  while (out.size() < 2 + random_count) out.push_back(share(random_lie(rng, CoeffRing(l), p)));
  return out;
}

std::vector<Mat> gauge_matrices(const LiePtr& lbar, const std::vector<Vec>& gauge) {
  auto ad = share(adjoint_module(lbar));
  CochainSpace c1(ad, 1, 0);
  std::vector<Mat> out;
  for (const auto& nu : gauge) {
    Mat m(lbar->ring(), lbar->dim(), lbar->dim());
    for (std::size_t i = 0; i < lbar->dim(); ++i) {
      Vec v = c1.evaluate(nu, Tuple{i});
      for (std::size_t k = 0; k < v.size(); ++k) m.set(i, k, v[k]);
    }
    out.push_back(m);
  }
  return out;
}

RepPtr random_free_rep(std::mt19937_64& rng, std::uint32_t l) {
  const CoeffRing k(l);
  while (true) {
    const std::size_t d = 2 + rng() % 3;
    const std::size_t ngen = 1 + rng() % 3;
    std::vector<FreeGenerator> gens;
    for (std::size_t i = 0; i < ngen; ++i)
      gens.push_back({std::string(1, static_cast<char>('a' + i)), 1 + static_cast<int>(rng() % 2)});
    auto g = share(free_lie_truncated(k, gens, d));
    if (g->dim() > 10) continue;
    RandomLieParams p;
    p.truncation = d;
    p.max_dim = 6;
    auto lbar = share(random_lie(rng, k, p).padded(d));
    GeneratorSystem sys(g);
    std::vector<Vec> gen_images;
    for (std::size_t x : sys.generators()) gen_images.push_back(random_homogeneous(rng, *lbar, g->degree(x)));
    auto all = sys.morphism_from(gen_images, [&](const Vec& u, const Vec& v) { return lbar->bracket(u, v); }, k);
    if (!all) throw InternalError("generator images of a free algebra violated a relation");
    return share(GradedRep(graded_morphism_from_images(g, lbar, *all)));
  }
}

}  // namespace lieforge::testing

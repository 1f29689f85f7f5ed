#include "doctest.h"
#include "deform_oracles.hpp"
#include "fixtures.hpp"
#include "lieforge/deformation.hpp"
#include "lieforge/error.hpp"
#include "lieforge/harrison.hpp"
#include "random_algebra.hpp"
#include "suites.hpp"

using namespace lieforge;
using namespace lieforge::testing;

TEST_CASE("eta: worked examples") {
  auto heis = share(heisenberg(5));
  auto e = eta_zero(heis);
  CHECK(e.deformation.base()->rank() == 1);
  CHECK(e.deformation.describe() == std::vector<std::string>{"[x,y] = z"});
  auto ab = share(abelian_21(5));
  auto f = eta_zero(ab);
  CHECK(f.deformation.base()->presentation() == "F_5[t]/(t^2)");
  CHECK(f.deformation.describe() == std::vector<std::string>{"[x,y] = t*z"});
  CHECK_THROWS_AS(eta_zero(share(heisenberg(5).lifted_to(CoeffRing(5, 2)))), InvalidArgument);
}

TEST_CASE("eta: Jacobi over D1 on random algebras, grade 0 and mixed grades") {
  std::size_t checked = 0;
  for (std::uint32_t l : {2u, 3u, 5u}) {
    for (const auto& lbar : small_suite(l, 8, 11 + l, 5)) {
      auto e = eta_zero(lbar);
      CHECK(jacobi_holds(*e.deformation.base(), *lbar, e.deformation.all_constants()));
      auto mixed = eta(lbar, {-1, 0, 1});
      CHECK(jacobi_holds(*mixed.deformation.base(), *lbar, mixed.deformation.all_constants()));
      if (mixed.deformation.base()->rank() > e.deformation.base()->rank())
        CHECK_THROWS_AS(push_forward(mixed.deformation, ArtinMorphism::identity(mixed.deformation.base())),
                        InvalidArgument);
      ++checked;
    }
  }
  CHECK(checked == 30);
}

TEST_CASE("eta: independence of the cocycle section") {
  Rng rng(7);
  std::vector<LiePtr> cases{share(abelian_21(5)), share(heisenberg(3))};
  RandomLieParams p;
  p.max_dim = 5;
  p.truncation = 3;
  while (cases.size() < 6) {
    auto l = share(random_lie(rng, CoeffRing(3), p));
    if (l->rank(3) > 0 && l->rank(2) > 0) cases.push_back(l);
  }
  for (const auto& lbar : cases) {
    auto ad = share(adjoint_module(lbar));
    auto cs = cohomology_space(ad, 2, 0);
    Mat mu = cs.homology.representatives();
    Mat shifted = mu;
    for (std::size_t i = 0; i < mu.rows(); ++i) {
      Vec nu = random_vec(rng, lbar->ring(), cs.delta_in.rows());
      Vec dnu = vec_mat(nu, cs.delta_in);
      axpy(lbar->ring(), shifted.row(i), dnu, 1);
    }
    auto e1 = eta_zero(lbar, mu), e2 = eta_zero(lbar, shifted);
    auto gauge = find_equivalence(e1.deformation, e2.deformation);
    REQUIRE(gauge.has_value());
    CHECK(gauge_maps(*lbar, *e1.deformation.base(), e1.deformation.all_constants(), e2.deformation.all_constants(),
                     gauge_matrices(lbar, *gauge)));
  }
  // a non-cocycle section is rejected
  auto ab = share(abelian_obstructed(3));
  auto heis = share(heisenberg(3));
  auto cs = cohomology_space(share(adjoint_module(heis)), 2, 0);
  CHECK(cs.dimension() == 0);
  auto ab_cs = cohomology_space(share(adjoint_module(ab)), 2, 0);
  Mat zero(ab->ring(), ab_cs.dimension(), ab_cs.cochains.dim());
  CHECK_THROWS_AS(eta_zero(ab, zero), InvalidArgument);
}

TEST_CASE("push_forward: examples") {
  auto ab = share(abelian_21(5));
  auto e = eta_zero(ab);
  const auto& d1 = e.deformation.base();
  CHECK(push_forward(e.deformation, ArtinMorphism::identity(d1)) == e.deformation);
  auto k = push_forward(e.deformation, ArtinMorphism::to_residue_field(d1));
  CHECK(k.describe().empty());
  auto eps = trunc(5, 2, "e");
  auto two = push_forward(e.deformation, artin_morphism_from_images(d1, eps, {Vec{0, 2}}));
  CHECK(two.describe() == std::vector<std::string>{"[x,y] = 2*e*z"});
  // t |-> 1 is not local
  CHECK_THROWS_AS(artin_morphism_from_images(d1, eps, {Vec{1, 0}}), InvalidArgument);
}

TEST_CASE("classify_square_zero: examples") {
  auto ab = share(abelian_21(5));
  auto e = eta_zero(ab);
  const auto& d1 = e.deformation.base();
  auto eps = trunc(5, 2, "e");
  auto triv = LieDeformation::trivial(ab, eps);
  CHECK(classify_square_zero(e, triv).morphism == artin_morphism_from_images(d1, eps, {Vec{0, 0}}));
  auto three = push_forward(e.deformation, artin_morphism_from_images(d1, eps, {Vec{0, 3}}));
  CHECK(classify_square_zero(e, three).morphism.matrix()(1, 1) == 3);
  auto a2 = share(ArtinLocalAlgebra::square_zero(5, 2, "e"));
  auto first = push_forward(e.deformation, artin_morphism_from_images(d1, a2, {Vec{0, 1, 0}}));
  CHECK(first.describe() == std::vector<std::string>{"[x,y] = e1*z"});
  CHECK(classify_square_zero(e, first).morphism == artin_morphism_from_images(d1, a2, {Vec{0, 1, 0}}));
  CHECK_THROWS_AS(classify_square_zero(e, LieDeformation::trivial(ab, trunc(5, 3))), InvalidArgument);
}

TEST_CASE("classify_square_zero: bijection with morphisms D1 -> A, exhaustive") {
  std::size_t morphisms_checked = 0, deformations_checked = 0, pairs_checked = 0;
  for (std::uint32_t l : {2u, 3u}) {
    std::vector<ArtinPtr> bases{share(ArtinLocalAlgebra::residue_field(l)), trunc(l, 2),
                                share(ArtinLocalAlgebra::square_zero(l, 2))};
    for (const auto& lbar : small_suite(l, 8, 100 + l)) {
      auto e = eta_zero(lbar);
      const auto& d1 = e.deformation.base();
      const std::size_t h = d1->rank() - 1;
      for (const auto& a : bases) {
        INFO("l=" << l << " dim=" << lbar->dim() << " rank A=" << a->rank());
        // Every morphism is recovered from its push-forward.
        std::vector<ArtinMorphism> morphisms;
        Vec coords(h * a->maximal().size(), 0);
        do {
          std::vector<Vec> images(h, Vec(a->rank(), 0));
          for (std::size_t s = 0; s < h; ++s)
            for (std::size_t j = 0; j < a->maximal().size(); ++j)
              images[s][a->maximal()[j]] = coords[s * a->maximal().size() + j];
          auto phi = artin_morphism_from_images(d1, a, images);
          auto pushed = push_forward(e.deformation, phi);
          CHECK(classify_square_zero(e, pushed).morphism == phi);
          morphisms.push_back(phi);
          ++morphisms_checked;
        } while (next_vector(coords, l));
        // Distinct morphisms give inequivalent deformations.
        for (std::size_t i = 0; i < morphisms.size() && i < 9; ++i)
          for (std::size_t j = i + 1; j < morphisms.size() && j < 9; ++j) {
            auto eq = equivalent_bruteforce(*lbar, *a, push_forward(e.deformation, morphisms[i]).all_constants(),
                                            push_forward(e.deformation, morphisms[j]).all_constants(), 1u << 16);
            if (!eq) continue;
            CHECK_FALSE(*eq);
            ++pairs_checked;
          }
        // Every deformation is equivalent to the push-forward along its class.
        auto all = all_deformations_bruteforce(*lbar, *a, 1u << 14);
        if (!all) continue;
        for (const auto& c : *all) {
          LieDeformation d(lbar, a, c);
          auto cls = classify_square_zero(e, d);
          auto pushed = push_forward(e.deformation, cls.morphism);
          CHECK(gauge_maps(*lbar, *a, pushed.all_constants(), c, gauge_matrices(lbar, cls.gauge)));
          ++deformations_checked;
        }
      }
    }
  }
  CHECK(morphisms_checked > 50);
  CHECK(deformations_checked > 50);
  CHECK(pairs_checked > 10);
}

TEST_CASE("obstruction: worked examples") {
  auto ab = share(abelian_21(5));
  auto e = eta_zero(ab);
  auto d = push_forward(e.deformation, artin_morphism_from_images(e.deformation.base(), trunc(5, 2), {Vec{0, 1}}));
  auto ext = truncation_extension(5, 2);
  CHECK(is_zero_vec(obstruction_class(d, ext)));
  auto res = extend_deformation(d, ext);
  REQUIRE(res.ok());
  CHECK(res.lifted->describe() == std::vector<std::string>{"[x,y] = t*z"});
  // trivial deformation extends to the trivial one
  auto triv = LieDeformation::trivial(ab, trunc(5, 2));
  auto tr = extend_deformation(triv, ext);
  REQUIRE(tr.ok());
  CHECK(*tr.lifted == LieDeformation::trivial(ab, trunc(5, 3)));
}

TEST_CASE("obstruction: engineered obstructed instance over F_2") {
  auto lbar = share(abelian_obstructed(2));
  LieDeformation d(lbar, trunc(2, 2), obstructed_constants(2));
  auto ext = truncation_extension(2, 2);
  auto cls = obstruction_class(d, ext);
  CHECK_FALSE(is_zero_vec(cls));
  auto res = extend_deformation(d, ext);
  CHECK_FALSE(res.ok());
  auto brute = extension_exists_bruteforce(*lbar, d.all_constants(), ext, 1u << 16);
  REQUIRE(brute.has_value());
  CHECK_FALSE(*brute);
  // The Jacobi defect is t^2 v on (x, y, z).
  auto j = jacobiator(d, 0, 1, 2);
  CHECK(j.size() == 10);
}

TEST_CASE("obstruction: extension succeeds iff the class vanishes, against exhaustive search") {
  std::size_t instances = 0, obstructed = 0, unobstructed = 0;
  auto check = [&](const LiePtr& lbar, const LieDeformation& d, const AlgExtension& ext) {
    auto brute = extension_exists_bruteforce(*lbar, d.all_constants(), ext, 1u << 16);
    if (!brute) return std::optional<LieDeformation>{};
    auto res = extend_deformation(d, ext);
    CHECK(res.ok() == res.obstruction.vanishes());
    CHECK(res.ok() == *brute);
    ++instances;
    (res.ok() ? unobstructed : obstructed) += 1;
    return res.lifted;
  };
  for (std::uint32_t l : {2u, 3u}) {
    Rng rng(500 + l);
    auto lbar = share(abelian_obstructed(l));
    LieDeformation d(lbar, trunc(l, 2), obstructed_constants(l));
    check(lbar, d, truncation_extension(l, 2));
    auto eo = eta_zero(lbar);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Vec> images(5, Vec(2, 0));
      for (auto& im : images) im[1] = static_cast<Scalar>(rng() % l);
      check(lbar, push_forward(eo.deformation, artin_morphism_from_images(eo.deformation.base(), trunc(l, 2), images)),
            truncation_extension(l, 2));
    }
    for (const auto& lb : small_suite(l, 14, 900 + l, 5)) {
      auto e = eta_zero(lb);
      const std::size_t h = e.deformation.base()->rank() - 1;
      // Along a random line into F_l[t]/t^2, then up the truncation tower.
      std::vector<Vec> images(h, Vec(2, 0));
      for (auto& im : images) im[1] = static_cast<Scalar>(rng() % l);
      auto cur = push_forward(e.deformation, artin_morphism_from_images(e.deformation.base(), trunc(l, 2), images));
      for (std::size_t n = 2; n <= 4; ++n) {
        auto next = check(lb, cur, truncation_extension(l, n));
        if (!next) break;
        cur = *next;
      }
      // Into k[x,y]/(x,y)^2 and then along a random pushout of the universal extension.
      auto a2 = share(ArtinLocalAlgebra::square_zero(l, 2));
      std::vector<Vec> im2(h, Vec(3, 0));
      for (auto& im : im2) im[1 + rng() % 2] = static_cast<Scalar>(rng() % l);
      auto d2 = push_forward(e.deformation, artin_morphism_from_images(e.deformation.base(), a2, im2));
      auto uni = universal_extension(a2);
      Mat f(a2->ring(), 3, 3);
      for (const auto& fs : uni.cocycles) {
        const Scalar c = static_cast<Scalar>(rng() % l);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) f.set(i, j, a2->ring().add(f(i, j), a2->ring().mul(c, fs(i, j))));
      }
      check(lb, d2, extension_from_cocycles(a2, {f}));
    }
  }
  CHECK(instances >= 40);
  CHECK(obstructed >= 1);
  CHECK(unobstructed >= 1);
  MESSAGE("instances " << instances << ", obstructed " << obstructed);
}

TEST_CASE("obstruction: class does not depend on the lift") {
  Rng rng(77);
  std::size_t nontrivial = 0;
  for (std::uint32_t l : {2u, 3u}) {
    std::vector<LiePtr> lbars{share(abelian_obstructed(l))};
    for (const auto& x : small_suite(l, 6, 40 + l, 5)) lbars.push_back(x);
    for (const auto& lbar : lbars) {
      auto e = eta_zero(lbar);
      const std::size_t h = e.deformation.base()->rank() - 1;
      std::vector<Vec> images(h, Vec(2, 0));
      for (auto& im : images) im[1] = static_cast<Scalar>(rng() % l);
      auto d = push_forward(e.deformation, artin_morphism_from_images(e.deformation.base(), trunc(l, 2), images));
      auto ext = truncation_extension(l, 2);
      auto base = obstruction(d, ext);
      for (int trial = 0; trial < 4; ++trial) {
        Mat s = linear_section(ext.projection);
        // shift the image of t by a kernel element
        for (std::size_t c = 0; c < ext.total()->rank(); ++c)
          s.add_to(1, c, ext.embedding(0, c) * static_cast<Scalar>(rng() % l) % l);
        auto other = obstruction(d, ext, s);
        CHECK(other.classes == base.classes);
      }
      if (!base.vanishes()) ++nontrivial;
    }
  }
  CHECK(nontrivial >= 1);
}

TEST_CASE("tower: Ab(2,1) over F_5 and Heis_5") {
  auto tower = miniversal_tower(share(abelian_21(5)), 5);
  REQUIRE(tower.size() == 5);
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto& st = tower[k - 1];
    CHECK(st.k == k);
    CHECK(st.base()->presentation() == "F_5[t]/(t^" + std::to_string(k + 1) + ")");
    CHECK(st.eta.describe() == std::vector<std::string>{"[x,y] = t*z"});
    if (k > 1) {
      CHECK(st.link->kernel_rank() == st.ext_rank - st.obstruction_rank);
      CHECK_FALSE(st.link->defect(true).has_value());
    }
  }
  auto heis = miniversal_tower(share(heisenberg(5)), 4);
  for (const auto& st : heis) {
    CHECK(st.base()->rank() == 1);
    CHECK(st.eta.describe() == std::vector<std::string>{"[x,y] = z"});
  }
}

TEST_CASE("tower: obstructed instance cuts the base") {
  // Over F_3 the engineered algebra has H^2(0) of dimension 5 and H^3(0) of
  // dimension 1, so D_2 is the universal extension of D_1 modulo a line.
  auto tower = miniversal_tower(share(abelian_obstructed(3)), 2);
  const auto& st = tower[1];
  CHECK(tower[0].base()->rank() == 6);
  CHECK(st.ext_rank == 15);
  CHECK(st.obstruction_rank == 1);
  CHECK(st.base()->rank() == 6 + 14);
}

TEST_CASE("quadratic map: examples and order-2 lifting by brute force") {
  auto ab = quadratic_map(share(abelian_21(5)));
  CHECK(ab.h2 == 1);
  CHECK(ab.h3 == 0);
  CHECK(ab.bilinear.size() == 1);
  CHECK(ab.bilinear[0].empty());
  auto heis = quadratic_map(share(heisenberg(5)));
  CHECK(heis.h2 == 0);
  CHECK(heis.bilinear.empty());
  for (std::uint32_t l : {2u, 3u}) {
    auto lbar = share(abelian_obstructed(l));
    auto q = quadratic_map(lbar);
    REQUIRE(q.h2 == 5);
    REQUIRE(q.h3 == 1);
    const auto& ring = lbar->ring();
    // symmetric pairing; for odd l the diagonal is twice the square
    for (std::size_t a = 0; a < q.h2; ++a)
      for (std::size_t b = 0; b < q.h2; ++b) {
        CHECK(q.bilinear[a * q.h2 + b] == q.bilinear[b * q.h2 + a]);
        if (a == b && l != 2) CHECK(q.bilinear[a * q.h2 + a][0] == ring.mul(2, q.quadratic[a][0]));
      }
    auto e = eta_zero(lbar);
    std::size_t zeros = 0, nonzeros = 0;
    Vec c(q.h2, 0);
    do {
      std::vector<Vec> images;
      for (auto x : c) images.push_back(Vec{0, x});
      auto d = push_forward(e.deformation, artin_morphism_from_images(e.deformation.base(), trunc(l, 2), images));
      auto brute = extension_exists_bruteforce(*lbar, d.all_constants(), truncation_extension(l, 2), 1u << 16);
      REQUIRE(brute.has_value());
      const bool vanishes = is_zero_vec(q.evaluate(c));
      CHECK(vanishes == *brute);
      (vanishes ? zeros : nonzeros) += 1;
    } while (next_vector(c, l));
    CHECK(zeros > 1);
    CHECK(nonzeros > 0);
  }
}

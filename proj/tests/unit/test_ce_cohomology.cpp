#include "doctest.h"
#include "lieforge/ce_cohomology.hpp"
#include "oracles.hpp"
#include "random_algebra.hpp"

using namespace lieforge;

namespace {

GradedLieAlgebra heis(const CoeffRing& R) {
  GradedLieAlgebra h(R, {2, 1}, {{"x", "y"}, {"z"}});
  h.set_antisymmetric(0, 1, Vec{0, 0, 1});
  return h;
}

ModulePtr ad(const GradedLieAlgebra& l) { return share(adjoint_module(share(l))); }

// Grade window in which some cochain of arity <= qmax can be nonzero.
std::pair<int, int> grade_window(const GradedLieAlgebra& l, int qmax) {
  const int d = static_cast<int>(l.truncation());
  return {-d, qmax * d - 1};
}

}  // namespace

TEST_CASE("cochain bases") {
  CoeffRing f5(5);
  auto ab = ad(GradedLieAlgebra(f5, {2, 1}, {{"x", "y"}, {"z"}}));
  CochainSpace c2(ab, 2, 0);
  REQUIRE(c2.dim() == 1);
  CHECK(c2.describe(0) == "g(x,y) -> z");
  CHECK(CochainSpace(ab, 0, -1).dim() == 2);
  CHECK(CochainSpace(ad(heis(f5)), 3, 0).dim() == 0);
}

TEST_CASE("differential on the Heisenberg algebra") {
  CoeffRing f5(5);
  auto m = ad(heis(f5));
  CochainSpace c1(m, 1, 0), c2(m, 2, 0);
  Vec g = c1.from_function([&](const Tuple& t) {
    Vec v(3, 0);
    if (t[0] == 0) v[0] = 1;
    return v;
  });
  Vec dg = vec_mat(g, delta_matrix(c1, c2));
  CHECK(c2.evaluate(dg, Tuple{0, 1}) == Vec{0, 0, 1});
  CHECK(c2.evaluate(dg, Tuple{1, 0}) == Vec{0, 0, 4});
}

TEST_CASE("differential vanishes on abelian algebras") {
  CoeffRing f3(3);
  auto m = ad(GradedLieAlgebra(f3, {2, 1, 1}));
  for (int q = 0; q <= 3; ++q)
    for (int g = -3; g <= 6; ++g) CHECK(delta_matrix(CochainSpace(m, q, g), CochainSpace(m, q + 1, g)).is_zero());
}

TEST_CASE("cohomology: fixed examples") {
  CoeffRing f5(5);
  auto ab = ad(GradedLieAlgebra(f5, {2, 1}, {{"x", "y"}, {"z"}}));
  auto h2 = cohomology_space(ab, 2, 0);
  REQUIRE(h2.dimension() == 1);
  CHECK(h2.cochains.evaluate(h2.homology.representatives().row(0), Tuple{0, 1}) == Vec{0, 0, 1});
  CHECK(cohomology_space(ad(heis(f5)), 2, 0).dimension() == 0);
  CHECK(lieforge::testing::ce_dimension_bruteforce(heis(f5), 2, 0) == 0);
  CHECK(cohomology_space(ad(GradedLieAlgebra(f5, {1})), 1, 0).dimension() == 1);
  CHECK_THROWS_AS(cohomology_space(ab, -1, 0), InvalidArgument);
}

TEST_CASE("d^2 = 0 and grade preservation on random algebras") {
  lieforge::testing::Rng rng(101);
  for (Scalar p : {2u, 3u, 5u}) {
    CoeffRing F(p);
    for (int trial = 0; trial < 12; ++trial) {
      auto l = lieforge::testing::random_lie(rng, F, {});
      auto m = ad(l);
      auto [lo, hi] = grade_window(l, 4);
      for (int g = lo; g <= hi; ++g) {
        for (int q = 0; q <= 2; ++q) {
          CochainSpace a(m, q, g), b(m, q + 1, g), c(m, q + 2, g);
          if (a.dim() == 0 || c.dim() == 0) continue;
          CHECK((delta_matrix(a, b) * delta_matrix(b, c)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("cohomology dimensions agree with the dense oracle") {
  lieforge::testing::Rng rng(7);
  for (Scalar p : {2u, 3u}) {
    CoeffRing F(p);
    for (int trial = 0; trial < 10; ++trial) {
      auto l = lieforge::testing::random_lie(rng, F, {4, 3, 3, 2});
      auto m = ad(l);
      for (int q = 0; q <= 3; ++q)
        for (int g = -3; g <= 6; ++g)
          CHECK(cohomology_space(m, q, g).dimension() == lieforge::testing::ce_dimension_bruteforce(l, q, g));
    }
  }
}

TEST_CASE("Euler characteristic per grade") {
  lieforge::testing::Rng rng(8);
  CoeffRing F(3);
  for (int trial = 0; trial < 8; ++trial) {
    auto l = lieforge::testing::random_lie(rng, F, {5, 3, 2, 1});
    auto m = ad(l);
    const int top = static_cast<int>(l.dim());
    for (int g = -3; g <= 6; ++g) {
      long chi_c = 0, chi_h = 0;
      for (int q = 0; q <= top; ++q) {
        const long sign = q % 2 == 0 ? 1 : -1;
        chi_c += sign * static_cast<long>(CochainSpace(m, q, g).dim());
        chi_h += sign * static_cast<long>(cohomology_space(m, q, g).dimension());
      }
      CHECK(chi_c == chi_h);
    }
  }
}

TEST_CASE("cochain bracket: the bracket cochain against the differential") {
  CoeffRing f5(5);
  auto m = ad(heis(f5));
  CochainSpace c1(m, 1, 0), c2(m, 2, 0);
  Vec mu = bracket_cochain(c2);
  lieforge::testing::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Vec g = lieforge::testing::random_vec(rng, f5, c1.dim());
    CHECK(nr_bracket(c2, mu, c1, g, c2) == vec_mat(g, delta_matrix(c1, c2)));
  }
  CHECK(is_zero_vec(nr_bracket(c2, mu, c1, Vec(c1.dim(), 0), c2)));
}

TEST_CASE("cochain bracket: d = [mu, -] up to an arity sign on random algebras") {
  lieforge::testing::Rng rng(19);
  for (Scalar p : {3u, 5u}) {
    CoeffRing F(p);
    for (int trial = 0; trial < 8; ++trial) {
      auto l = lieforge::testing::random_lie(rng, F, {5, 3, 2, 1});
      auto m = ad(l);
      CochainSpace c2(m, 2, 0);
      Vec mu = bracket_cochain(c2);
      for (int q = 1; q <= 3; ++q) {
        for (int g = -2; g <= 3; ++g) {
          CochainSpace a(m, q, g), b(m, q + 1, g);
          if (a.dim() == 0 || b.dim() == 0) continue;
          Vec x = lieforge::testing::random_vec(rng, F, a.dim());
          Vec dx = vec_mat(x, delta_matrix(a, b));
          Vec br = nr_bracket(c2, mu, a, x, b);
          // [mu, g] = (-1)^(q-1) d g
          if (q % 2 == 0)
            for (auto& v : br) v = F.neg(v);
          CHECK(br == dx);
        }
      }
    }
  }
}

TEST_CASE("cochain bracket: graded antisymmetry") {
  lieforge::testing::Rng rng(29);
  CoeffRing f3(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto l = lieforge::testing::random_lie(rng, f3, {5, 3, 2, 1});
    auto m = ad(l);
    for (auto [p, q] : {std::pair{1, 2}, {2, 2}, {1, 1}, {2, 3}}) {
      CochainSpace a(m, p, 0), b(m, q, -1), t(m, p + q - 1, -1);
      Vec x = lieforge::testing::random_vec(rng, f3, a.dim());
      Vec y = lieforge::testing::random_vec(rng, f3, b.dim());
      Vec xy = nr_bracket(a, x, b, y, t);
      Vec yx = nr_bracket(b, y, a, x, t);
      const bool odd = ((p - 1) * (q - 1)) % 2 != 0;
      for (std::size_t i = 0; i < yx.size(); ++i) CHECK(xy[i] == (odd ? yx[i] : f3.neg(yx[i])));
    }
  }
  auto m0 = share(adjoint_module(share(GradedLieAlgebra(f3, {1}))));
  CochainSpace z(m0, 0, -1), o(m0, 1, 0);
  const Vec vz(z.dim(), 0), vo(o.dim(), 0);
  CHECK_THROWS_AS(nr_bracket(z, vz, o, vo, z), InvalidArgument);
}

TEST_CASE("cochain bracket detects Jacobi failures") {
  CoeffRing f3(3);
  GradedLieAlgebra good = heis(f3).padded(3);
  GradedLieAlgebra bad(f3, {3, 1, 1}, {{"a", "b", "c"}, {"u"}, {"v"}});
  bad.set_antisymmetric(0, 1, Vec{0, 0, 0, 1, 0});
  bad.set_antisymmetric(3, 2, Vec{0, 0, 0, 0, 1});
  for (const auto& [l, ok] : {std::pair{good, true}, {bad, false}}) {
    auto m = ad(l);
    CochainSpace c2(m, 2, 0), c3(m, 3, 0);
    Vec mu = bracket_cochain(c2);
    CHECK(is_zero_vec(nr_bracket(c2, mu, c2, mu, c3)) == ok);
    CHECK(is_zero_vec(compose(c2, mu, c2, mu, c3)) == ok);
  }
  // In characteristic 2 the bracket [mu, mu] = 2 (mu o mu) always vanishes,
  // so mu o mu is the tester there.
  CoeffRing f2(2);
  GradedLieAlgebra bad2(f2, {3, 1, 1}, {{"a", "b", "c"}, {"u"}, {"v"}});
  bad2.set_antisymmetric(0, 1, Vec{0, 0, 0, 1, 0});
  bad2.set_antisymmetric(3, 2, Vec{0, 0, 0, 0, 1});
  auto m2 = ad(bad2);
  CochainSpace c2(m2, 2, 0), c3(m2, 3, 0);
  Vec mu = bracket_cochain(c2);
  CHECK(is_zero_vec(nr_bracket(c2, mu, c2, mu, c3)));
  CHECK(!is_zero_vec(compose(c2, mu, c2, mu, c3)));
}

TEST_CASE("cup product of 1-cochains") {
  CoeffRing f5(5);
  GradedLieAlgebra l(f5, {2, 1}, {{"x", "y"}, {"z"}});
  auto lp = share(heis(f5));
  auto m = ad(*lp);
  CochainSpace c1(m, 1, 0), c2(m, 2, 0);
  lieforge::testing::Rng rng(2);
  Vec a = lieforge::testing::random_vec(rng, f5, c1.dim());
  Vec b = lieforge::testing::random_vec(rng, f5, c1.dim());
  auto pair = [&](const Vec& u, const Vec& v) { return lp->bracket(u, v); };
  Vec ab = cup_product(c1, a, c1, b, c2, pair);
  CHECK(ab == cup_product(c1, b, c1, a, c2, pair));
  Vec ax = c1.evaluate(a, Tuple{0}), ay = c1.evaluate(a, Tuple{1});
  Vec bx = c1.evaluate(b, Tuple{0}), by = c1.evaluate(b, Tuple{1});
  Vec expect = lp->bracket(ax, by);
  axpy(f5, expect, lp->bracket(ay, bx), f5.neg(1));
  CHECK(c2.evaluate(ab, Tuple{0, 1}) == expect);
}

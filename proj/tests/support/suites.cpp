#include "suites.hpp"

namespace lieforge::testing {

ArtinLocalAlgebra artin_two_squares(std::uint32_t l) {
  // 0 = 1, 1 = x, 2 = y, 3 = s = x^2 = y^2
  const std::size_t n = 4;
  std::vector<Vec> table(n * n, Vec(n, 0));
  auto put = [&](std::size_t i, std::size_t j, std::size_t k) {
    table[i * n + j][k] = 1;
    table[j * n + i][k] = 1;
  };
  for (std::size_t i = 0; i < n; ++i) put(0, i, i);
  put(1, 1, 3);
  put(2, 2, 3);
  return ArtinLocalAlgebra(CoeffRing(l), n, 0, table, {1, 2, 3}, {"1", "x", "y", "x^2"});
}

std::vector<NamedArtin> artin_suite(std::uint32_t l) {
  using A = ArtinLocalAlgebra;
  const std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"};
  std::vector<NamedArtin> out;
  out.push_back({"k", share(A::residue_field(l)), 0});
  out.push_back({"k[t]/t^2", share(A::truncated_polynomial(l, 2)), 1});
  out.push_back({"k[t]/t^3", share(A::truncated_polynomial(l, 3)), 1});
  out.push_back({"k[t]/t^4", share(A::truncated_polynomial(l, 4)), 1});
  out.push_back({"k[t]/t^5", share(A::truncated_polynomial(l, 5)), 1});
  out.push_back({"k[x,y]/(x,y)^2", share(A::monomial_quotient(l, xy, {{2, 0}, {1, 1}, {0, 2}})), 2});
  out.push_back({"k[x,y,z]/(x,y,z)^2", share(A::square_zero(l, 3)), 3});
  out.push_back({"k[x,y]/(x^2,y^2)", share(A::monomial_quotient(l, xy, {{2, 0}, {0, 2}})), 2});
  out.push_back({"k[x,y]/(x^2,xy,y^3)", share(A::monomial_quotient(l, xy, {{2, 0}, {1, 1}, {0, 3}})), 2});
  out.push_back({"k[x,y]/(x^2,y^3)", share(A::monomial_quotient(l, xy, {{2, 0}, {0, 3}})), 2});
  out.push_back({"k[x,y,z]/(x^2,y^2,z^2,xy,xz)",
                 share(A::monomial_quotient(l, xyz, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}})), 3});
  out.push_back({"k[x,y]/(x^2-y^2,xy)", share(artin_two_squares(l)), 2});
  return out;
}

GradedLieAlgebra heisenberg(std::uint32_t l) {
  GradedLieAlgebra h(CoeffRing(l), {2, 1}, {{"x", "y"}, {"z"}});
  h.set_antisymmetric(0, 1, Vec{0, 0, 1});
  return h;
}

GradedLieAlgebra abelian_21(std::uint32_t l) { return GradedLieAlgebra(CoeffRing(l), {2, 1}, {{"x", "y"}, {"z"}}); }

GradedLieAlgebra abelian_obstructed(std::uint32_t l) {
  return GradedLieAlgebra(CoeffRing(l), {2, 1, 1, 1}, {{"x", "y"}, {"z"}, {"w"}, {"v"}});
}

std::vector<Vec> obstructed_constants(std::uint32_t l) {
  // basis x=0 y=1 z=2 w=3 v=4 over F_l[t]/t^2 (r = 2), coordinate k*2 + j
  const std::size_t n = 5, r = 2;
  std::vector<Vec> c(n * n, Vec(n * r, 0));
  auto put = [&](std::size_t a, std::size_t b, std::size_t k) {
    c[a * n + b][k * r + 1] = 1;
    c[b * n + a][k * r + 1] = l - 1;
  };
  put(0, 1, 2);
  put(1, 2, 3);
  put(3, 0, 4);
  return c;
}

std::vector<NamedRep> rep_suite(std::uint32_t l) {
  const CoeffRing k(l);
  auto heis = share(heisenberg(l));
  auto ab2 = share(GradedLieAlgebra(k, {2, 0}, {{"a", "b"}, {}}));
  auto free3 = share(free_lie_truncated(k, {{"x", 1}, {"y", 1}}, 3));
  auto ab2_3 = share(GradedLieAlgebra(k, {2, 0, 0}, {{"a", "b"}, {}, {}}));
  auto free_ab = share(free_lie_truncated(k, {{"a", 1}, {"b", 1}}, 3));
  // free(a,b) / ([a,[a,b]]) truncated at 3
  Element rel(free_ab->dim(), 0);
  rel[free_ab->index(3, 0)] = 1;
  auto rel_ab = share(quotient_by_ideal(free_ab, {rel}).algebra.padded(3));

  auto block = [&](std::size_t rows, std::size_t cols, std::vector<std::vector<std::int64_t>> entries) {
    return entries.empty() ? Mat(k, rows, cols) : Mat::from_rows(k, cols, entries);
  };
  auto make = [&](const LiePtr& g, const LiePtr& t, std::vector<Mat> blocks) {
    return share(GradedRep(GradedMorphism(g, t, std::move(blocks))));
  };
  std::vector<NamedRep> out;
  out.push_back({"Ab(a,b) -> Heis, 0", make(ab2, heis, {block(2, 2, {}), block(0, 1, {})}), false});
  out.push_back({"Ab(a,b) -> Heis, a -> x", make(ab2, heis, {block(2, 2, {{1, 0}, {0, 0}}), block(0, 1, {})}), false});
  out.push_back({"Ab(a,b) -> F(x,y;3), 0",
                 make(ab2_3, free3, {block(2, 2, {}), block(0, 1, {}), block(0, 2, {})}), false});
  out.push_back({"Ab(a,b) -> F(x,y;3), a -> x",
                 make(ab2_3, free3, {block(2, 2, {{1, 0}, {0, 0}}), block(0, 1, {}), block(0, 2, {})}), false});
  out.push_back({"F(a,b;3)/[a,[a,b]] -> F(x,y;3), 0",
                 make(rel_ab, free3, {block(2, 2, {}), block(1, 1, {}), block(rel_ab->rank(3), 2, {})}), false});
  out.push_back({"Heis -> Heis, id", share(GradedRep(GradedMorphism::identity(heis))), true});
  out.push_back({"F(a,b;3) -> F(x,y;3), a -> x + y",
                 make(free_ab, free3, {block(2, 2, {{1, 1}, {0, 0}}), block(1, 1, {}), block(2, 2, {})}), true});
  return out;
}

std::vector<NamedCategory> schlessinger_categories(std::uint32_t l) {
  const CoeffRing k(l);
  auto mat = [&](std::size_t rows, std::size_t cols, std::vector<std::vector<std::int64_t>> e) {
    return e.empty() ? Mat(k, rows, cols) : Mat::from_rows(k, cols, e);
  };
  std::vector<NamedCategory> out;
  {
    auto heis = share(heisenberg(l));
    auto ab = share(GradedLieAlgebra(k, {2, 0}, {{"x", "y"}, {}}));
    auto zero = TestCategory::zero_object(k, 2);
    auto eps = TestCategory::eps_object(k, 2);
    std::vector<CatObject> objs{zero, eps, {"Heis", heis, std::nullopt}, {"Ab(x,y)", ab, std::nullopt}};
    std::vector<CatArrow> arrows{
        {"Heis->Ab", 2, 3, GradedMorphism(heis, ab, {mat(2, 2, {{1, 0}, {0, 1}}), mat(1, 0, {})})},
        {"Ab->eps:x", 3, 1, GradedMorphism(ab, eps.lie, {mat(2, 1, {{1}, {0}}), mat(0, 0, {})})},
        {"Ab->eps:y", 3, 1, GradedMorphism(ab, eps.lie, {mat(2, 1, {{0}, {1}}), mat(0, 0, {})})},
        {"eps->Ab:x", 1, 3, GradedMorphism(eps.lie, ab, {mat(1, 2, {{1, 0}}), mat(0, 0, {})})},
        {"Heis->eps:x", 2, 1, GradedMorphism(heis, eps.lie, {mat(2, 1, {{1}, {0}}), mat(1, 0, {})})},
    };
    out.push_back({"heisenberg", std::make_shared<const TestCategory>(std::nullopt, objs, arrows)});
  }
  {
    auto f3 = share(free_lie_truncated(k, {{"x", 1}, {"y", 1}}, 3));
    // basis of f3: x, y | [x,y] | [x,[x,y]], [[x,y],y]
    Element rel(f3->dim(), 0);
    rel[f3->index(3, 0)] = 1;
    auto quo = quotient_by_ideal(f3, {rel});
    auto q = quo.projection.target();
    auto heis3 = share(heisenberg(l).padded(3));
    auto ab3 = share(GradedLieAlgebra(k, {2, 0, 0}, {{"x", "y"}, {}, {}}));
    auto zero = TestCategory::zero_object(k, 3);
    auto eps = TestCategory::eps_object(k, 3);
    std::vector<CatObject> objs{zero, eps, {"F(x,y;3)", f3, std::nullopt}, {"F/[x,[x,y]]", q, std::nullopt},
                                {"Heis", heis3, std::nullopt}, {"Ab(x,y)", ab3, std::nullopt}};
    std::vector<CatArrow> arrows{
        {"F->Q", 2, 3, quo.projection},
        {"Q->Heis", 3, 4, GradedMorphism(q, heis3, {mat(2, 2, {{1, 0}, {0, 1}}), mat(1, 1, {{1}}), mat(q->rank(3), 0, {})})},
        {"Heis->Ab", 4, 5, GradedMorphism(heis3, ab3, {mat(2, 2, {{1, 0}, {0, 1}}), mat(1, 0, {}), mat(0, 0, {})})},
        {"Ab->eps:x", 5, 1, GradedMorphism(ab3, eps.lie, {mat(2, 1, {{1}, {0}}), mat(0, 0, {}), mat(0, 0, {})})},
        {"eps->Ab:y", 1, 5, GradedMorphism(eps.lie, ab3, {mat(1, 2, {{0, 1}}), mat(0, 0, {}), mat(0, 0, {})})},
    };
    out.push_back({"free-3", std::make_shared<const TestCategory>(std::nullopt, objs, arrows)});
  }
  {
    auto base = share(GradedLieAlgebra(k, {1, 0}, {{"b"}, {}}));
    auto heis = share(heisenberg(l));
    auto ab = share(GradedLieAlgebra(k, {2, 0}, {{"x", "y"}, {}}));
    auto zero = TestCategory::zero_object(k, 2, base);
    auto eps = TestCategory::eps_object(k, 2, base);
    auto b_to_x = [&](const LiePtr& t) {
      return GradedMorphism(base, t, {mat(1, t->rank(1), {{1, 0}}), mat(0, t->rank(2), {})});
    };
    std::vector<CatObject> objs{zero, eps, {"Heis", heis, b_to_x(heis)}, {"Ab(x,y)", ab, b_to_x(ab)}};
    std::vector<CatArrow> arrows{
        {"Heis->Ab", 2, 3, GradedMorphism(heis, ab, {mat(2, 2, {{1, 0}, {0, 1}}), mat(1, 0, {})})},
        {"Ab->eps:y", 3, 1, GradedMorphism(ab, eps.lie, {mat(2, 1, {{0}, {1}}), mat(0, 0, {})})},
    };
    out.push_back({"pairs-under-b", std::make_shared<const TestCategory>(base, objs, arrows)});
  }
  return out;
}

}  // namespace lieforge::testing

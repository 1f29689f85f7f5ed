#pragma once
// Low-degree Harrison cohomology of Artin algebras and the universal small
// extension.
//
// Cochains: Hom(A, M) -> Hom(S^2 A, M) -> Hom(A^3, M) with
//   (d1 psi)(a, b)    = a psi(b) - psi(ab) + b psi(a)
//   (d2 f)(a, b, c)   = a f(b, c) - f(ab, c) + f(a, bc) - c f(a, b)
// Symmetric 2-cochains are stored by their values on pairs (i <= j) of basis
// indices, pair-major, then module coordinate.

#include <optional>
#include <string>
#include <vector>

#include "lieforge/artin.hpp"

namespace lieforge {

// Finite A-module on F_l^dim; actions[i] is the matrix of e_i (v |-> v * actions[i]).
class ArtinModule {
 public:
  ArtinModule(ArtinPtr algebra, std::size_t dim, std::vector<Mat> actions);
  // F_l^dim with m acting by zero.
  static ArtinModule trivial(ArtinPtr algebra, std::size_t dim);

  const ArtinPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t i) const { return actions_[i]; }
  // a . v
  Vec act(std::span<const Scalar> a, std::span<const Scalar> v) const;

 private:
  ArtinPtr algebra_;
  std::size_t dim_;
  std::vector<Mat> actions_;
};

struct HarrisonComplex {
  std::size_t rank = 0;       // rank(A)
  std::size_t module_dim = 0;
  Mat d1{CoeffRing(2), 0, 0};  // Hom(A,M) -> Hom(S^2 A, M)
  Mat d2{CoeffRing(2), 0, 0};  // Hom(S^2 A, M) -> Hom(A^3, M)

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::size_t pair_count() const { return rank * (rank + 1) / 2; }
};

HarrisonComplex harrison_complex(const ArtinModule& module);

// Harr^i(A, M) for i in {1, 2}.
Subquotient harrison_cohomology(const ArtinModule& module, int i);

// A symmetric bilinear map A x A -> F_l^e, as e matrices of size rank x rank.
using BilinearFamily = std::vector<Mat>;

// Table of a 2-cochain with values in F_l^e given in harrison coordinates.
BilinearFamily cochain_to_family(const HarrisonComplex& complex, std::span<const Scalar> cochain);
// Replace f by f - d1(psi) with psi(1) = f(1,1), psi(m) = 0, so f(1, -) = 0.
BilinearFamily normalize_cocycle(const ArtinLocalAlgebra& a, const BilinearFamily& f);

// C = A + F_l^e with (a,u)(b,v) = (ab, res(a) v + res(b) u + f(a,b)).
// The cocycles must be normalized 2-cocycles. Basis of C: basis of A then u1..ue.
AlgExtension extension_from_cocycles(const ArtinPtr& a, const BilinearFamily& f);

struct UniversalExtension {
  AlgExtension extension;
  BilinearFamily cocycles;  // normalized representatives of a basis of Harr^2(A, F_l)
};

// 0 -> Harr^2(A, F_l)^* -> C -> A -> 0; every small extension of A by F_l is
// a pushout of it along a unique linear map.
UniversalExtension universal_extension(const ArtinPtr& a);

}  // namespace lieforge

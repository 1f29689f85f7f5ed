#pragma once
// Graded Chevalley-Eilenberg cochains C^q(L, M)(m).
//
// A cochain of arity q and internal grade m is stored by its values on
// strictly increasing q-tuples of basis indices of L; on inputs of total
// degree g it takes values in M(g - m). Values on other tuples follow by
// alternation (zero on repeated arguments, which is the right notion in
// characteristic 2 as well).
//
// Differential, with hats marking omitted arguments and 0-based positions:
//   (d g)(x_0..x_q) = sum_{s<t} (-1)^(s+t) g([x_s,x_t], x_0..^s..^t..x_q)
//                   + sum_u (-1)^u x_u . g(x_0..^u..x_q)

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/graded_lie.hpp"

namespace lieforge {

using ModulePtr = std::shared_ptr<const LieModule>;
using Tuple = std::vector<std::size_t>;

inline ModulePtr share(LieModule m) { return std::make_shared<const LieModule>(std::move(m)); }

class CochainSpace {
 public:
  // C^q(L, M)(m); C^0(L, M)(m) = M(-m).
  CochainSpace(ModulePtr module, int arity, int grade);

  const ModulePtr& module() const { return module_; }
  const LiePtr& algebra() const { return module_->algebra(); }
  const CoeffRing& ring() const { return module_->ring(); }
  int arity() const { return arity_; }
  int grade() const { return grade_; }
  std::size_t dim() const { return basis_.size(); }

  // Increasing tuples with a nonzero target piece, lexicographic.
  const std::vector<Tuple>& tuples() const { return tuples_; }
  // Basis coordinate i is (tuples()[entry(i).first], module index entry(i).second).
  const std::pair<std::size_t, std::size_t>& entry(std::size_t i) const { return basis_[i]; }
  // Coordinate of (increasing tuple, module basis index), if any.
  std::optional<std::size_t> coordinate(const Tuple& t, std::size_t m) const;
  // Index into tuples() of an increasing tuple, if it carries coordinates.
  std::optional<std::size_t> tuple_index(const Tuple& t) const;
  // Coordinates of tuple ti are tuple_start(ti) + j for j < piece(ti).size(),
  // paired with the module basis indices piece(ti)[j].
  std::size_t tuple_start(std::size_t ti) const { return tuple_start_[ti]; }
  const std::vector<std::size_t>& piece(std::size_t ti) const {
    return module_->basis_of_degree(target_degree_[ti]);
  }

  // Value (a vector in M) of the cochain on an arbitrary tuple of basis indices.
  Vec evaluate(std::span<const Scalar> cochain, const Tuple& args) const;
  // Multilinear value on arbitrary elements of L.
  Vec evaluate(std::span<const Scalar> cochain, const std::vector<Vec>& args) const;
  // Coordinates of the cochain whose value on each increasing tuple is f(tuple).
  // Components of f outside the allowed target piece must vanish.
  Vec from_function(const std::function<Vec(const Tuple&)>& f) const;

  // "g(x,y) -> z" style name of a basis coordinate.
  std::string describe(std::size_t i) const;
  std::string describe_tuple(const Tuple& t) const;

 private:
  ModulePtr module_;
  int arity_;
  int grade_;
  std::vector<Tuple> tuples_;
  std::vector<std::size_t> tuple_start_;  // first coordinate of each tuple
  std::vector<int> target_degree_;        // per tuple
  std::vector<std::pair<std::size_t, std::size_t>> basis_;
  std::map<Tuple, std::size_t> index_;
};

// Sort a tuple of basis indices in place; returns 0 when an index repeats,
// otherwise the sign (+1 or -1) of the sorting permutation.
int sort_with_sign(Tuple& t);

// Matrix of d: C^q(L,M)(m) -> C^{q+1}(L,M)(m) in the canonical bases.
Mat delta_matrix(const CochainSpace& from, const CochainSpace& to);

struct CohomologySpace {
  CochainSpace cochains;
  CochainSpace next;  // arity q + 1, same grade
  Mat delta_in;       // C^{q-1} -> C^q (zero rows when q = 0)
  Mat delta_out;      // C^q -> C^{q+1}
  Subquotient homology;
  std::size_t dimension() const { return homology.dimension(); }
};

CohomologySpace cohomology_space(const ModulePtr& module, int q, int m);

// The bracket of L as a 2-cochain in C^2(L, L)(0) with adjoint coefficients.
Vec bracket_cochain(const CochainSpace& c2);

// Composition product phi o psi for adjoint coefficients:
//   (phi o psi)(x_1..x_{p+q-1}) = sum over (q, p-1)-shuffles s of
//                                 sign(s) phi(psi(x_s1..x_sq), x_s(q+1)..)
// The result lies in the space `to` (arity p+q-1, grade m_phi + m_psi).
Vec compose(const CochainSpace& sphi, std::span<const Scalar> phi, const CochainSpace& spsi,
            std::span<const Scalar> psi, const CochainSpace& to);

// Nijenhuis-Richardson bracket [phi, psi] = phi o psi - (-1)^((p-1)(q-1)) psi o phi.
// Adjoint coefficients only; arity-0 operands are rejected.
Vec nr_bracket(const CochainSpace& sphi, std::span<const Scalar> phi, const CochainSpace& spsi,
               std::span<const Scalar> psi, const CochainSpace& to);

using PairingFn = std::function<Vec(const Vec&, const Vec&)>;

// Shuffle product with a bilinear pairing on coefficient values:
//   (a u b)(x_1..x_{p+q}) = sum over (p, q)-shuffles s of sign(s) pair(a(x_S), b(x_R)).
// For 1-cochains: (a u b)(x, y) = pair(a x, b y) - pair(a y, b x).
Vec cup_product(const CochainSpace& sa, std::span<const Scalar> a, const CochainSpace& sb,
                std::span<const Scalar> b, const CochainSpace& to, const PairingFn& pair);

// Dimension of the cochain space for every q in [0, qmax] at grade m.
std::vector<std::size_t> cochain_dimensions(const ModulePtr& module, int qmax, int m);

}  // namespace lieforge

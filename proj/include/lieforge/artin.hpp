#pragma once
// Finite local commutative F_l-algebras with residue field F_l, given by a
// multiplication table on a basis {1, m_1, .., m_{r-1}} where the m_i span the
// maximal ideal. Elements are coordinate vectors of length rank().

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/coeff.hpp"

namespace lieforge {

class ArtinLocalAlgebra {
 public:
  // table[i * rank + j] = e_i * e_j. `maximal` must list exactly the non-unit
  // basis indices. Throws InvalidArgument unless the table describes a
  // commutative, associative, unital local algebra with nilpotent maximal
  // ideal spanned by `maximal`.
  ArtinLocalAlgebra(CoeffRing ring, std::size_t rank, std::size_t unit, std::vector<Vec> table,
                    std::vector<std::size_t> maximal, std::vector<std::string> labels = {});

  static ArtinLocalAlgebra residue_field(std::uint32_t l);
  // F_l[t]/t^n with basis 1, t, .., t^(n-1).
  static ArtinLocalAlgebra truncated_polynomial(std::uint32_t l, std::size_t n, const std::string& var = "t");
  // F_l + F_l^e with m^2 = 0; basis 1, t1..te.
  static ArtinLocalAlgebra square_zero(std::uint32_t l, std::size_t e, const std::string& var = "t");
  // F_l[x_1..x_n] / (monomials), e.g. {{2,0},{1,1},{0,3}} for (x^2, xy, y^3).
  // Every variable needs a pure power among the monomials.
  static ArtinLocalAlgebra monomial_quotient(std::uint32_t l, const std::vector<std::string>& vars,
                                             const std::vector<std::vector<int>>& monomials);

  const CoeffRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t unit() const { return unit_; }
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  const std::vector<Vec>& table() const { return table_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * rank_ + j]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec one() const;
  Vec basis_element(std::size_t i) const;
  Vec multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  // Image in the residue field.
  Scalar residue(std::span<const Scalar> a) const { return a[unit_]; }

  // Smallest k with m^k = 0.
  std::size_t nilpotency_index() const;
  // Howell (RREF) basis of m^k as rows.
  Mat maximal_power(std::size_t k) const;
  bool is_square_zero() const { return nilpotency_index() <= 2; }
  // dim m / m^2.
  std::size_t cotangent_dimension() const;
  // True iff isomorphic to F_l[t]/t^rank (a principal maximal ideal).
  bool is_truncated_polynomial() const { return cotangent_dimension() <= 1; }

  // "F_5[t]/(t^3)"-style presentation: generators lift a basis of m/m^2 and
  // relations are a minimal generating set of the kernel of the monomial map.
  std::string presentation(const std::string& var = "t") const;

  // Pretty-printed element, e.g. "1 + 3*t".
  std::string format(std::span<const Scalar> a) const;

  friend bool operator==(const ArtinLocalAlgebra& a, const ArtinLocalAlgebra& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.unit_ == b.unit_ && a.table_ == b.table_ &&
           a.maximal_ == b.maximal_;
  }

 private:
  void check() const;

  CoeffRing ring_;
  std::size_t rank_;
  std::size_t unit_;
  std::vector<Vec> table_;
  std::vector<std::size_t> maximal_;
  std::vector<std::string> labels_;
};

using ArtinPtr = std::shared_ptr<const ArtinLocalAlgebra>;

inline ArtinPtr share(ArtinLocalAlgebra a) { return std::make_shared<const ArtinLocalAlgebra>(std::move(a)); }

// F_l-linear map A -> B given by a rank(A) x rank(B) matrix (row i = image of e_i).
class ArtinMorphism {
 public:
  // Throws InvalidArgument unless unital, multiplicative and local.
  ArtinMorphism(ArtinPtr source, ArtinPtr target, Mat matrix);
  static ArtinMorphism identity(ArtinPtr a);
  // A -> F_l, a |-> residue(a).
  static ArtinMorphism to_residue_field(ArtinPtr a);

  const ArtinPtr& source() const { return source_; }
  const ArtinPtr& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }
  Vec apply(std::span<const Scalar> a) const { return vec_mat(a, matrix_); }
  ArtinMorphism then(const ArtinMorphism& next) const;
  bool is_surjective() const;
  // Basis (rows, source coordinates) of the kernel.
  Mat kernel() const { return kernel_basis(matrix_); }

  friend bool operator==(const ArtinMorphism& a, const ArtinMorphism& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  ArtinPtr source_;
  ArtinPtr target_;
  Mat matrix_;
};

// Checks only; returns a reason when the matrix is not a local algebra map.
std::optional<std::string> artin_morphism_defect(const ArtinLocalAlgebra& a, const ArtinLocalAlgebra& b,
                                                 const Mat& matrix);

// 0 -> M -> B -> A -> 0 with M = F_l^e embedded by `embedding` (e x rank(B)).
struct AlgExtension {
  ArtinMorphism projection;  // B -> A
  Mat embedding;             // kernel basis in B coordinates

  const ArtinPtr& total() const { return projection.source(); }
  const ArtinPtr& base() const { return projection.target(); }
  std::size_t kernel_rank() const { return embedding.rows(); }

  // Checks exactness, that the kernel squares to zero, and (when small is
  // set) that m_B annihilates the kernel. Returns a reason on failure.
  std::optional<std::string> defect(bool small = true) const;
};

// Build the extension B -> A for a surjection, embedding a basis of its kernel.
AlgExtension extension_from_surjection(const ArtinMorphism& projection);

// Deterministic F_l-linear section of the projection of an extension:
// rank(A) x rank(B), row i a preimage of e_i (1 maps to 1).
Mat linear_section(const ArtinMorphism& projection);

}  // namespace lieforge

#pragma once
// Positively graded Lie algebras L = L(1) + ... + L(d) with finite free pieces,
// truncated at degree d: brackets landing above d are zero, so every algebra
// here is nilpotent.
//
// Basis elements are numbered globally, degree by degree. Structure constants
// are stored densely: bracket(a, b) is a coordinate vector of length dim().

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieforge/coeff.hpp"

namespace lieforge {

using Element = Vec;

struct ValidationIssue {
  enum class Kind { Grading, Antisymmetry, Jacobi };
  Kind kind;
  std::vector<std::size_t> indices;  // basis indices of the offending pair/triple
  Element residual;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

class GradedLieAlgebra {
 public:
  // Abelian algebra with the given piece ranks n_1..n_d. Labels default to
  // "e<deg>_<i>"; when given, one list per degree.
  GradedLieAlgebra(CoeffRing ring, std::vector<std::size_t> ranks,
                   std::vector<std::vector<std::string>> labels = {});

  const CoeffRing& ring() const { return ring_; }
  std::size_t truncation() const { return ranks_.size(); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(int degree) const;
  std::size_t dim() const { return degree_of_.size(); }
  std::size_t offset(int degree) const { return offsets_[static_cast<std::size_t>(degree) - 1]; }
  std::size_t index(int degree, std::size_t i) const { return offset(degree) + i; }
  int degree(std::size_t idx) const { return degree_of_[idx]; }
  const std::string& label(std::size_t idx) const { return labels_[idx]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  std::span<const Scalar> bracket(std::size_t a, std::size_t b) const {
    return {constants_.data() + (a * dim() + b) * dim(), dim()};
  }
  // Raw store; does not touch [b, a].
  void set_bracket(std::size_t a, std::size_t b, std::span<const Scalar> value);
  // [a, b] = value and [b, a] = -value.
  void set_antisymmetric(std::size_t a, std::size_t b, std::span<const Scalar> value);

  // Bilinear extension of the structure constants.
  Element bracket(std::span<const Scalar> u, std::span<const Scalar> v) const;

  Element zero() const { return Element(dim(), 0); }
  Element basis_element(std::size_t idx) const;

  ValidationReport validate() const;
  bool is_abelian() const;

  // Entrywise reduction of the constants to F_l.
  GradedLieAlgebra reduce_mod_l() const;
  // Same constants over Z/l^N (requires this algebra over F_l): the inverse
  // of reduce_mod_l on algebras defined over F_l.
  GradedLieAlgebra lifted_to(const CoeffRing& ring) const;
  // Append zero pieces up to truncation d (d >= truncation()).
  GradedLieAlgebra padded(std::size_t d) const;

  std::string describe_issue(const ValidationIssue& issue) const;

  friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
    return a.ring_ == b.ring_ && a.ranks_ == b.ranks_ && a.labels_ == b.labels_ && a.constants_ == b.constants_;
  }

 private:
  CoeffRing ring_;
  std::vector<std::size_t> ranks_;
  std::vector<std::size_t> offsets_;
  std::vector<int> degree_of_;
  std::vector<std::string> labels_;
  std::vector<Scalar> constants_;
};

using LiePtr = std::shared_ptr<const GradedLieAlgebra>;

inline LiePtr share(GradedLieAlgebra l) { return std::make_shared<const GradedLieAlgebra>(std::move(l)); }

// Degree-preserving linear map given by one block per degree: block i is
// rank_src(i) x rank_tgt(i), row j the image of the j-th basis element.
class GradedMorphism {
 public:
  GradedMorphism(LiePtr source, LiePtr target, std::vector<Mat> blocks);
  static GradedMorphism identity(LiePtr l);
  static GradedMorphism zero(LiePtr source, LiePtr target);

  const LiePtr& source() const { return source_; }
  const LiePtr& target() const { return target_; }
  const std::vector<Mat>& blocks() const { return blocks_; }
  const Mat& block(int degree) const { return blocks_[static_cast<std::size_t>(degree) - 1]; }

  Element image(std::size_t source_idx) const;
  Element apply(std::span<const Scalar> x) const;
  // Dense dim(source) x dim(target) matrix.
  Mat full_matrix() const;

  // Basis pairs (a, b) with phi([a,b]) != [phi a, phi b].
  std::vector<std::pair<std::size_t, std::size_t>> bracket_violations() const;
  bool respects_brackets() const { return bracket_violations().empty(); }

  // this followed by next (next o this).
  GradedMorphism then(const GradedMorphism& next) const;
  bool is_surjective() const;
  bool is_injective() const;
  // Howell basis (rows in source coordinates) of the kernel.
  Mat kernel() const;

  // Flattened entries; equal morphisms between the same objects give equal keys.
  std::vector<Scalar> key() const;

  friend bool operator==(const GradedMorphism& a, const GradedMorphism& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.blocks_ == b.blocks_;
  }

 private:
  LiePtr source_;
  LiePtr target_;
  std::vector<Mat> blocks_;
};

// A graded module over a graded Lie algebra: basis elements with integer
// degrees (any sign) and action constants x . m.
class LieModule {
 public:
  LieModule(LiePtr algebra, std::vector<int> degrees, std::vector<std::string> labels = {});

  const LiePtr& algebra() const { return algebra_; }
  const CoeffRing& ring() const { return algebra_->ring(); }
  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t m) const { return degrees_[m]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::string& label(std::size_t m) const { return labels_[m]; }
  // Module basis indices of the given degree, ascending.
  const std::vector<std::size_t>& basis_of_degree(int degree) const;
  int min_degree() const;
  int max_degree() const;

  std::span<const Scalar> action(std::size_t x, std::size_t m) const {
    return {action_.data() + (x * dim() + m) * dim(), dim()};
  }
  void set_action(std::size_t x, std::size_t m, std::span<const Scalar> value);
  Vec act(std::span<const Scalar> x, std::span<const Scalar> m) const;

  // Triples (x, y, m) where [x,y].m != x.(y.m) - y.(x.m).
  std::vector<std::array<std::size_t, 3>> action_identity_violations() const;

 private:
  void index_degrees();

  LiePtr algebra_;
  std::vector<int> degrees_;
  std::vector<std::string> labels_;
  std::vector<Scalar> action_;
  std::vector<int> degree_keys_;
  std::vector<std::vector<std::size_t>> by_degree_;
};

LieModule adjoint_module(const LiePtr& l);

struct FreeGenerator {
  std::string label;
  int degree;
};

// Free Lie algebra on weighted generators modulo everything of degree > d,
// with the Lyndon basis (standard bracketing of Lyndon words in generator
// order) sorted by degree and then lexicographically by word.
GradedLieAlgebra free_lie_truncated(const CoeffRing& ring, const std::vector<FreeGenerator>& generators,
                                    std::size_t d);

struct Quotient {
  GradedLieAlgebra algebra;   // the quotient itself
  GradedMorphism projection;  // into the quotient padded to the source truncation
};

// L / L(>= n), retruncated at n - 1. Requires 1 <= n <= d + 1.
Quotient central_quotient(const LiePtr& l, std::size_t n);

// L / I where I is the smallest graded ideal containing the homogeneous
// components of the given elements. Field coefficients only.
Quotient quotient_by_ideal(const LiePtr& l, const std::vector<Element>& generators);

// N' + N'' with componentwise bracket; requires equal rings and truncations.
GradedLieAlgebra direct_sum(const GradedLieAlgebra& a, const GradedLieAlgebra& b);

// Generating system of a graded Lie algebra over a field: basis vectors
// complementing [L, L] in each degree, plus a choice of basis brackets that
// spans [L, L]. A Lie morphism out of L is determined by generator images.
class GeneratorSystem {
 public:
  explicit GeneratorSystem(LiePtr l);

  const LiePtr& algebra() const { return algebra_; }
  // Basis indices of the chosen generators, ascending.
  const std::vector<std::size_t>& generators() const { return generators_; }

  using BracketFn = std::function<Vec(const Vec&, const Vec&)>;

  // Images of all basis elements determined by generator images (one per
  // generator, in order). target_ring is the scalar ring of the target
  // coordinates. Does not check the bracket relations; see morphism_from.
  std::vector<Vec> extend(const std::vector<Vec>& generator_images, const BracketFn& bracket,
                          const CoeffRing& target_ring) const;

  // extend() followed by a check of every basis bracket; nullopt when the
  // generator images violate a relation of L.
  std::optional<std::vector<Vec>> morphism_from(const std::vector<Vec>& generator_images,
                                                const BracketFn& bracket, const CoeffRing& target_ring) const;

 private:
  struct Slot {
    bool is_generator;
    std::size_t a;
    std::size_t b;  // unused for generators
  };
  LiePtr algebra_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<Slot>> slots_;  // per degree
  std::vector<Mat> change_;               // per degree: basis in terms of slots
};

}  // namespace lieforge

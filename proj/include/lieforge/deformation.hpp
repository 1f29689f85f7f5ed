#pragma once
// Deformations of a graded Lie algebra Lbar over Artin local bases.
//
// A deformation over A is an A-bilinear bracket on Lbar (x) A that reduces to
// Lbar modulo m_A. Elements of Lbar (x) A are vectors of length dim(Lbar) *
// rank(A) with coordinate k * rank(A) + j for (basis k of Lbar) (x) (basis j of A).

#include <optional>
#include <string>
#include <vector>

#include "lieforge/artin.hpp"
#include "lieforge/ce_cohomology.hpp"

namespace lieforge {

class LieDeformation {
 public:
  // constants[a * n + b] = [a (x) 1, b (x) 1]. parameter_grades[j] is the
  // internal grade carried by the A-basis element j (all 0 by default): the
  // component along e_j of [a, b] must lie in degree deg a + deg b - grade.
  // Throws InvalidArgument when antisymmetry, Jacobi, grading or the
  // reduction to Lbar fails.
  LieDeformation(LiePtr reduction, ArtinPtr base, std::vector<Vec> constants, std::vector<int> parameter_grades = {});
  static LieDeformation trivial(LiePtr reduction, ArtinPtr base);

  const LiePtr& reduction() const { return lbar_; }
  const ArtinPtr& base() const { return base_; }
  const CoeffRing& ring() const { return base_->ring(); }
  std::size_t dim() const { return lbar_->dim(); }
  std::size_t rank() const { return base_->rank(); }
  std::size_t size() const { return dim() * rank(); }
  const std::vector<int>& parameter_grades() const { return grades_; }
  bool grade_zero() const;

  const Vec& constants(std::size_t a, std::size_t b) const { return constants_[a * dim() + b]; }
  const std::vector<Vec>& all_constants() const { return constants_; }

  // a (x) 1
  Vec basis_element(std::size_t a) const;
  // v * s for v in Lbar (x) A and s in A.
  Vec scale(std::span<const Scalar> v, std::span<const Scalar> s) const;
  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  // The component along the m-basis element j as a 2-cochain of the given space.
  Vec component(const CochainSpace& c2, std::size_t j) const;

  // One line per nonzero bracket of basis elements a < b, e.g. "[x,y] = t*z".
  std::vector<std::string> describe() const;

  friend bool operator==(const LieDeformation& a, const LieDeformation& b) {
    return *a.lbar_ == *b.lbar_ && *a.base_ == *b.base_ && a.constants_ == b.constants_ && a.grades_ == b.grades_;
  }

 private:
  std::optional<std::string> defect() const;

  LiePtr lbar_;
  ArtinPtr base_;
  std::vector<Vec> constants_;
  std::vector<int> grades_;
};

// Residual of the Jacobi identity over the base on a basis triple.
Vec jacobiator(const LieDeformation& d, std::size_t a, std::size_t b, std::size_t c);

// eta over D1 = k + (+)_m H^2(Lbar,Lbar)(m)' with m^2 = 0: the bracket
// [a, b] + sum_s mu_s(a, b) t_s where mu_s runs over a cocycle section.
struct EtaDeformation {
  LieDeformation deformation;
  std::vector<int> grades;              // grade per requested block
  std::vector<Mat> sections;            // per block: rows are cocycles mu(alpha)
  std::vector<std::size_t> first_param; // A-basis index of the first t_s of each block
};

// `sections`, when given, must hold one matrix per grade whose rows are
// cocycles whose classes form a basis of H^2(m). Lbar must be over F_l.
EtaDeformation eta(LiePtr lbar, std::vector<int> grades = {0}, std::vector<std::optional<Mat>> sections = {});
EtaDeformation eta_zero(LiePtr lbar, std::optional<Mat> section = std::nullopt);

// Coefficients pushed through a local algebra map; parameter grades must be 0.
LieDeformation push_forward(const LieDeformation& d, const ArtinMorphism& phi);

// Gauge for two deformations over the same square-zero base: nu[j] is the
// grade-0 1-cochain with g = id + sum_j nu[j] e_j satisfying g[x,y]_1 = [gx,gy]_2.
std::optional<std::vector<Vec>> find_equivalence(const LieDeformation& first, const LieDeformation& second);

struct Classification {
  ArtinMorphism morphism;   // D1 -> A
  std::vector<Vec> gauge;   // push_forward(eta, morphism) ~ d through this gauge
};

// The unique D1 -> A inducing d up to equivalence (A square-zero, grade 0).
Classification classify_square_zero(const EtaDeformation& eta, const LieDeformation& d);

struct ObstructionData {
  Mat section;                   // lift A -> B used for the constants
  std::vector<Vec> cocycles;     // J_s in C^3(0), one per kernel basis element
  std::vector<Vec> classes;      // coordinates of [J_s] in H^3(0)
  std::size_t h3 = 0;
  bool vanishes() const;
};

// Lift the constants through `section` (linear_section by default), take the
// Jacobiator and split it along the kernel basis of the extension, which must
// be small. d must have grade-0 parameters.
ObstructionData obstruction(const LieDeformation& d, const AlgExtension& ext,
                            const std::optional<Mat>& section = std::nullopt);
// For an extension with one-dimensional kernel: the class in H^3(0).
Vec obstruction_class(const LieDeformation& d, const AlgExtension& ext);

struct ExtensionResult {
  std::optional<LieDeformation> lifted;  // set iff every class vanishes
  ObstructionData obstruction;
  bool ok() const { return lifted.has_value(); }
};

ExtensionResult extend_deformation(const LieDeformation& d, const AlgExtension& ext);

struct DeformationStage {
  std::size_t k = 1;
  LieDeformation eta;                  // over D_k
  std::optional<AlgExtension> link;    // D_k -> D_{k-1}; absent at k = 1
  std::size_t ext_rank = 0;            // dim Ext(D_{k-1}, k) used for this step
  std::size_t obstruction_rank = 0;    // rank of Phi_{k-1}
  const ArtinPtr& base() const { return eta.base(); }
};

DeformationStage first_stage(LiePtr lbar);
DeformationStage miniversal_step(const DeformationStage& stage);
// Stages D_1 .. D_count.
std::vector<DeformationStage> miniversal_tower(LiePtr lbar, std::size_t count);

struct QuadraticMap {
  std::size_t h2 = 0;
  std::size_t h3 = 0;
  Mat section{CoeffRing(2), 0, 0};     // rows mu(alpha)
  // bilinear[a * h2 + b] = class of [mu(a), mu(b)] in H^3(0) coordinates.
  std::vector<Vec> bilinear;
  // quadratic[a] = class of mu(a) o mu(a) (= half of bilinear[a * h2 + a] for odd l).
  std::vector<Vec> quadratic;
  // Class of (sum_a c_a mu(a)) o (sum_a c_a mu(a)).
  Vec evaluate(std::span<const Scalar> c) const;
};

QuadraticMap quadratic_map(LiePtr lbar);

}  // namespace lieforge

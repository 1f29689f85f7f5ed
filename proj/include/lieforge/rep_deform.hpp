#pragma once
// Deformations of a graded representation rho: G -> Lbar over Artin bases.
//
// Coefficients are Lbar with G acting through rho and the adjoint action,
// x . m = [rho x, m]. A lift over A sends each basis element of G to an
// element of Lbar (x) A of the same degree (layout as in deformation.hpp).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/artin.hpp"
#include "lieforge/ce_cohomology.hpp"
#include "lieforge/deformation.hpp"

namespace lieforge {

class GradedRep {
 public:
  // Throws InvalidArgument unless G and Lbar are over the same F_l with equal
  // truncation and rho respects brackets.
  explicit GradedRep(GradedMorphism rho);

  const LiePtr& source() const { return rho_.source(); }
  const LiePtr& target() const { return rho_.target(); }
  const GradedMorphism& rho() const { return rho_; }
  const ModulePtr& module() const { return module_; }
  const CoeffRing& ring() const { return source()->ring(); }

 private:
  GradedMorphism rho_;
  ModulePtr module_;
};

using RepPtr = std::shared_ptr<const GradedRep>;
inline RepPtr share(GradedRep r) { return std::make_shared<const GradedRep>(std::move(r)); }

class RepDeformation {
 public:
  // images[x] in Lbar (x) A for every basis element x of G. Throws
  // InvalidArgument when degrees, the reduction or a bracket fail.
  RepDeformation(RepPtr rep, ArtinPtr base, std::vector<Vec> images);
  // rho (x) 1
  static RepDeformation trivial(RepPtr rep, ArtinPtr base);

  const RepPtr& rep() const { return rep_; }
  const ArtinPtr& base() const { return base_; }
  const std::vector<Vec>& images() const { return images_; }
  const Vec& image(std::size_t x) const { return images_[x]; }
  // Component along the A-basis element j as a 1-cochain in C^1(G, Ad rho)(0).
  Vec component(const CochainSpace& c1, std::size_t j) const;
  // "x -> x + t*y" lines, one per basis element of G.
  std::vector<std::string> describe() const;

  friend bool operator==(const RepDeformation& a, const RepDeformation& b) {
    return a.rep_ == b.rep_ && *a.base_ == *b.base_ && a.images_ == b.images_;
  }

 private:
  std::optional<std::string> defect() const;

  RepPtr rep_;
  ArtinPtr base_;
  std::vector<Vec> images_;
};

struct TangentSpace {
  CohomologySpace h1;  // H^1(G, Ad rho)(0)
  std::size_t dimension() const { return h1.dimension(); }
};

TangentSpace tangent_space(const RepPtr& rep);
// rho + eps c over F_l[eps]/eps^2 for a 1-cocycle c of grade 0.
RepDeformation first_order_lift(const RepPtr& rep, std::span<const Scalar> cocycle, const std::string& var = "t");

struct ObstructionCertificate {
  Mat section{CoeffRing(2), 0, 0};  // lift A0 -> A1 used for the images
  std::vector<Vec> cocycles;         // bracket defect D_s in C^2(G, Ad rho)(0) per kernel basis element
  std::vector<Vec> classes;          // coordinates in H^2(G, Ad rho)(0)
  std::size_t h2 = 0;
  bool vanishes() const;
};

// The extension must be small (I . m_1 = 0).
ObstructionCertificate rep_obstruction(const RepDeformation& rho0, const AlgExtension& ext);

struct RepLiftResult {
  std::optional<RepDeformation> lifted;
  ObstructionCertificate certificate;
  bool ok() const { return lifted.has_value(); }
};

RepLiftResult lift_representation(const RepDeformation& rho0, const AlgExtension& ext);

struct LiftEnumeration {
  std::vector<RepDeformation> lifts;  // deterministic order
  std::size_t search_log = 0;         // log_l of the candidate count
  // Equivalence is conjugation by degree-0 inner automorphisms, which are
  // trivial for positively graded Lbar: every lift is its own class.
  std::size_t classes() const { return lifts.size(); }
};

// All lifts of rho over A, by enumerating generator images reducing to rho.
// Throws InvalidArgument when l^(free coordinates) exceeds the bound.
LiftEnumeration enumerate_lifts(const RepPtr& rep, const ArtinPtr& a, std::size_t bound);

struct QuadraticRelations {
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  Mat section{CoeffRing(2), 0, 0};  // rows: representative 1-cocycles c_i
  // bilinear[i * h1 + j] = class of c_i u c_j, (c u c')(x,y) = [c x, c' y] - [c y, c' x].
  std::vector<Vec> bilinear;
  // quadratic[i] = class of (x,y) |-> [c_i x, c_i y]; the order-2 obstruction.
  std::vector<Vec> quadratic;
  // Class of (x,y) |-> [c x, c y] for c = sum_i v_i c_i.
  Vec evaluate(std::span<const Scalar> v) const;
  // "F_3[[s1,..]] / (relations) to order 2"
  std::string presentation() const;
};

QuadraticRelations quadratic_relations(const RepPtr& rep);

}  // namespace lieforge

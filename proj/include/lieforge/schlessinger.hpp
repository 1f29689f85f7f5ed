#pragma once
// Schlessinger-type criteria for set-valued functors on nilpotent graded Lie
// algebras over F_l, tested on finite categories.
//
// Objects optionally carry a structure morphism from a fixed base algebra B
// (the category of pairs B -> N); with no base every object is plain. L(eps)
// is the one-dimensional abelian algebra spanned by eps in degree 1.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/graded_lie.hpp"
#include "lieforge/rep_deform.hpp"

namespace lieforge {

struct CatObject {
  std::string name;
  LiePtr lie;
  std::optional<GradedMorphism> structure;  // B -> lie, when the category has a base
};

struct CatArrow {
  std::string name;
  std::size_t from = 0;
  std::size_t to = 0;
  GradedMorphism map;
};

class TestCategory {
 public:
  // All objects share ring and truncation. Identities and the zero maps to
  // the zero object are added automatically. Throws InvalidArgument when an
  // arrow fails to be a Lie morphism, does not commute with structure maps,
  // or the zero and eps objects are missing.
  TestCategory(std::optional<LiePtr> base, std::vector<CatObject> objects, std::vector<CatArrow> arrows);

  // The zero object and L(eps), with zero structure maps when a base is given.
  static CatObject zero_object(const CoeffRing& ring, std::size_t d, const std::optional<LiePtr>& base = std::nullopt);
  static CatObject eps_object(const CoeffRing& ring, std::size_t d, const std::optional<LiePtr>& base = std::nullopt);

  const std::optional<LiePtr>& base() const { return base_; }
  const CoeffRing& ring() const { return objects_.front().lie->ring(); }
  std::size_t truncation() const { return objects_.front().lie->truncation(); }
  const std::vector<CatObject>& objects() const { return objects_; }
  const std::vector<CatArrow>& arrows() const { return arrows_; }
  std::size_t zero() const { return zero_; }
  std::size_t eps() const { return eps_; }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::optional<LiePtr> base_;
  std::vector<CatObject> objects_;
  std::vector<CatArrow> arrows_;
  std::size_t zero_ = 0;
  std::size_t eps_ = 0;
};

// All Lie morphisms x -> y commuting with the structure maps, in a
// deterministic order. Throws InvalidArgument when l^(free coordinates)
// exceeds the limit.
std::vector<GradedMorphism> lie_homs(const CatObject& x, const CatObject& y, std::size_t limit);

struct FiberProduct {
  CatObject object;
  GradedMorphism first;   // P -> N'
  GradedMorphism second;  // P -> N''
};

// {(a, b) : f(a) = g(b)} inside N' + N''. Throws InvalidArgument unless f and
// g share their target and truncation.
FiberProduct fiber_product(const CatObject& n1, const GradedMorphism& f, const CatObject& n2, const GradedMorphism& g);

// Every cone X -> N', X -> N'' over N from an object of the category factors
// uniquely through P. Returns a description of the first failure.
std::optional<std::string> fiber_product_defect(const TestCategory& cat, const CatObject& n1, const GradedMorphism& f,
                                                const CatObject& n2, const GradedMorphism& g, std::size_t limit);

struct SmallSection {
  bool surjective = false;
  bool central = false;    // [N, ker] = 0
  bool principal = false;  // ker is the ideal generated by one homogeneous element
  bool degenerate = false; // zero kernel
  std::optional<Vec> generator;  // t, in source coordinates
  bool small() const { return surjective && central && principal; }
};

SmallSection is_small_section(const GradedMorphism& p);

using FunctorKey = std::vector<Scalar>;

class FunctorOracle {
 public:
  virtual ~FunctorOracle() = default;
  virtual std::string name() const = 0;
  // F(N) as a sorted list of distinct keys.
  virtual std::vector<FunctorKey> evaluate(const CatObject& n) const = 0;
  // F(f)(x) for f: source -> target, x in F(source).
  virtual FunctorKey apply(const CatObject& source, const CatObject& target, const GradedMorphism& f,
                           const FunctorKey& x) const = 0;
};

using OraclePtr = std::shared_ptr<const FunctorOracle>;

// h_L = Hom(L, -).
OraclePtr hom_oracle(CatObject l, std::size_t limit = 1 << 16);
// F(N) = {0, 1} on every object; fails the one-point axiom.
OraclePtr constant_oracle(std::size_t size = 2);
// h_L1 and h_L2 glued along their zero morphisms. Fails H1 at
// L(eps) x L(eps) over 0 whenever both Hom sets into L(eps) are nontrivial.
OraclePtr wedge_oracle(CatObject l1, CatObject l2, std::size_t limit = 1 << 16);
// Lifts of rho: G -> Lbar to G -> Lbar + N along the projection.
OraclePtr rep_transport_oracle(RepPtr rep, std::size_t limit = 1 << 16);

struct CriterionInstance {
  std::string criterion;  // "H1/H4" (small section) or "H2" (L(eps) -> 0)
  std::string description;
  std::size_t source_size = 0;  // |F(N' x_N N'')|
  std::size_t target_size = 0;  // |F(N') x_F(N) F(N'')|
  bool injective = false;
  bool surjective = false;
};

struct TowerStage {
  std::size_t n = 0;        // L / Gamma_n
  std::size_t size = 0;     // |F(L / Gamma_n)|
  bool consistent = false;  // F(pi_n) = F(q_n) o F(pi_(n+1))
};

struct SchlessingerReport {
  std::string functor;
  std::vector<CriterionInstance> instances;
  bool h1 = true;
  bool h2 = true;
  bool h3 = false;
  bool h4 = true;
  std::size_t tangent_size = 0;
  std::optional<std::size_t> tangent_dim;  // log_l |F(L(eps))| when a power of l
  bool has_hull() const { return h1 && h2 && h3; }
  bool pro_representable() const { return has_hull() && h4; }
  std::vector<std::string> lines() const;
};

// Checks the one-point axiom and functoriality on identities and composable
// arrows first (InvalidArgument on failure), then runs H1-H4.
SchlessingerReport check_criteria(const FunctorOracle& f, const TestCategory& cat);

// F along the lower central series tower of an object: sizes of F(L/Gamma_n)
// for n = 2 .. d+1 and whether the transition maps are compatible.
std::vector<TowerStage> completion_tower(const FunctorOracle& f, const CatObject& l);

}  // namespace lieforge

#include "lieforge/schlessinger.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lieforge/error.hpp"
#include "lieforge/parallel.hpp"

namespace lieforge {

namespace {

// Morphism from the images (target coordinates) of every source basis element.
GradedMorphism from_images(const LiePtr& s, const LiePtr& t, const std::vector<Vec>& images) {
  std::vector<Mat> blocks;
  for (int d = 1; d <= static_cast<int>(s->truncation()); ++d) {
    Mat b(s->ring(), s->rank(d), t->rank(d));
    for (std::size_t i = 0; i < s->rank(d); ++i)
      for (std::size_t j = 0; j < t->rank(d); ++j) b.set(i, j, images[s->index(d, i)][t->index(d, j)]);
    blocks.push_back(std::move(b));
  }
  return GradedMorphism(s, t, std::move(blocks));
}

// Inverse of GradedMorphism::key.
GradedMorphism from_key(const LiePtr& s, const LiePtr& t, const FunctorKey& key) {
  std::vector<Mat> blocks;
  std::size_t pos = 0;
  for (int d = 1; d <= static_cast<int>(s->truncation()); ++d) {
    Mat b(s->ring(), s->rank(d), t->rank(d));
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b.set(i, j, key.at(pos++));
    blocks.push_back(std::move(b));
  }
  if (pos != key.size()) throw InvalidArgument("functor key does not match the morphism shape");
  return GradedMorphism(s, t, std::move(blocks));
}

bool is_zero_key(const FunctorKey& k) { return is_zero_vec(k); }

void require_compatible(const GradedLieAlgebra& a, const GradedLieAlgebra& b, const std::string& what) {
  if (!(a.ring() == b.ring()) || a.truncation() != b.truncation())
    throw InvalidArgument(what + ": ring or truncation mismatch");
}

// Odometer over generator images; calls visit(images) for every assignment.
template <class Visit>
void for_each_generator_assignment(const GeneratorSystem& gens, const GradedLieAlgebra& target, std::size_t offset,
                                   std::size_t width, const std::vector<Vec>& fixed, std::size_t limit,
                                   const std::string& what, Visit&& visit) {
  const auto& src = *gens.algebra();
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (generator, coordinate)
  for (std::size_t i = 0; i < gens.generators().size(); ++i) {
    const int d = src.degree(gens.generators()[i]);
    if (d > static_cast<int>(target.truncation())) continue;
    for (std::size_t j = 0; j < target.rank(d); ++j) slots.push_back({i, offset + target.index(d, j)});
  }
  const Scalar p = target.ring().modulus();
  std::size_t count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (count > limit / p)
      throw InvalidArgument(what + ": " + std::to_string(p) + "^" + std::to_string(slots.size()) +
                            " candidates exceed the limit " + std::to_string(limit));
    count *= p;
  }
  std::vector<Scalar> digits(slots.size(), 0);
  std::vector<Vec> images = fixed;
  for (auto& v : images) v.resize(width, 0);
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i) images[slots[i].first][slots[i].second] = digits[i];
    visit(images);
    std::size_t i = slots.size();
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) break;
  }
}

bool is_eps_shaped(const CatObject& o) {
  const auto& l = *o.lie;
  return l.dim() == 1 && l.rank(1) == 1 && (!o.structure || o.structure->full_matrix().is_zero());
}

// Smallest graded ideal containing the rows of s (Howell form).
Mat ideal_closure(const GradedLieAlgebra& n, Mat s) {
  s = howell_form(s);
  while (true) {
    Mat grown = s;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t e = 0; e < n.dim(); ++e) {
        Vec v = n.bracket(n.basis_element(e), s.row_vec(i));
        if (!is_zero_vec(v)) grown.append_row(v);
      }
    grown = howell_form(grown);
    if (grown.rows() == s.rows()) return s;
    s = std::move(grown);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Categories

CatObject TestCategory::zero_object(const CoeffRing& ring, std::size_t d, const std::optional<LiePtr>& base) {
  auto z = share(GradedLieAlgebra(ring, std::vector<std::size_t>(d, 0)));
  CatObject o{"0", z, std::nullopt};
  if (base) o.structure = GradedMorphism::zero(*base, z);
  return o;
}

CatObject TestCategory::eps_object(const CoeffRing& ring, std::size_t d, const std::optional<LiePtr>& base) {
  std::vector<std::size_t> ranks(d, 0);
  ranks[0] = 1;
  std::vector<std::vector<std::string>> labels(d);
  labels[0] = {"eps"};
  auto e = share(GradedLieAlgebra(ring, ranks, labels));
  CatObject o{"L(eps)", e, std::nullopt};
  if (base) o.structure = GradedMorphism::zero(*base, e);
  return o;
}

TestCategory::TestCategory(std::optional<LiePtr> base, std::vector<CatObject> objects, std::vector<CatArrow> arrows)
    : base_(std::move(base)), objects_(std::move(objects)) {
  if (objects_.empty()) throw InvalidArgument("test category: no objects");
  const auto& first = *objects_.front().lie;
  if (!first.ring().is_field()) throw InvalidArgument("test category: objects must be over F_l");
  std::optional<std::size_t> zero, eps;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const auto& o = objects_[i];
    require_compatible(first, *o.lie, "test category object " + o.name);
    if (!o.lie->validate().ok()) throw InvalidArgument("test category: object " + o.name + " is not a Lie algebra");
    if (base_) {
      if (!o.structure || !(*o.structure->source() == **base_) || !(*o.structure->target() == *o.lie) ||
          !o.structure->respects_brackets())
        throw InvalidArgument("test category: object " + o.name + " lacks a structure morphism from the base");
    } else if (o.structure) {
      throw InvalidArgument("test category: object " + o.name + " has a structure map but the category has no base");
    }
    if (!zero && o.lie->dim() == 0) zero = i;
    if (!eps && is_eps_shaped(o)) eps = i;
  }
  if (!zero) throw InvalidArgument("test category: the zero object is missing");
  if (!eps) throw InvalidArgument("test category: L(eps) is missing");
  zero_ = *zero;
  eps_ = *eps;
  for (std::size_t i = 0; i < objects_.size(); ++i)
    arrows_.push_back({"id_" + objects_[i].name, i, i, GradedMorphism::identity(objects_[i].lie)});
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (i != zero_)
      arrows_.push_back({objects_[i].name + "->0", i, zero_, GradedMorphism::zero(objects_[i].lie, objects_[zero_].lie)});
  for (auto& a : arrows) {
    if (a.from >= objects_.size() || a.to >= objects_.size())
      throw InvalidArgument("test category: arrow " + a.name + " has an unknown endpoint");
    const auto& s = objects_[a.from];
    const auto& t = objects_[a.to];
    if (!(*a.map.source() == *s.lie) || !(*a.map.target() == *t.lie))
      throw InvalidArgument("test category: arrow " + a.name + " does not match its endpoints");
    if (!a.map.respects_brackets()) throw InvalidArgument("test category: arrow " + a.name + " is not a Lie morphism");
    if (base_ && !(s.structure->then(a.map) == *t.structure))
      throw InvalidArgument("test category: arrow " + a.name + " does not commute with the structure maps");
    arrows_.push_back(std::move(a));
  }
}

std::optional<std::size_t> TestCategory::find(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].name == name) return i;
  return std::nullopt;
}

std::vector<GradedMorphism> lie_homs(const CatObject& x, const CatObject& y, std::size_t limit) {
  require_compatible(*x.lie, *y.lie, "lie_homs");
  GeneratorSystem gens(x.lie);
  const auto& target = *y.lie;
  std::vector<GradedMorphism> out;
  auto br = [&](const Vec& u, const Vec& v) { return target.bracket(u, v); };
  std::vector<Vec> fixed(gens.generators().size(), Vec(target.dim(), 0));
  for_each_generator_assignment(gens, target, 0, target.dim(), fixed, limit, "lie_homs", [&](const std::vector<Vec>& img) {
    auto all = gens.morphism_from(img, br, target.ring());
    if (!all) return;
    GradedMorphism phi = from_images(x.lie, y.lie, *all);
    if (x.structure && y.structure && !(x.structure->then(phi) == *y.structure)) return;
    out.push_back(std::move(phi));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Fiber products

FiberProduct fiber_product(const CatObject& n1, const GradedMorphism& f, const CatObject& n2, const GradedMorphism& g) {
  if (!(*f.target() == *g.target())) throw InvalidArgument("fiber_product: the maps have different targets");
  if (!(*f.source() == *n1.lie) || !(*g.source() == *n2.lie))
    throw InvalidArgument("fiber_product: maps do not start at the given objects");
  require_compatible(*n1.lie, *n2.lie, "fiber_product");
  const auto& a = *n1.lie;
  const auto& b = *n2.lie;
  const auto& ring = a.ring();
  const std::size_t d = a.truncation(), w = a.dim() + b.dim();
  // Rows of `basis` are elements of P in the concatenated coordinates [a | b].
  Mat basis(ring, 0, w);
  std::vector<std::size_t> ranks(d);
  std::vector<std::vector<std::string>> labels(d);
  for (std::size_t i = 0; i < d; ++i) {
    const int deg = static_cast<int>(i + 1);
    Mat neg_g = g.block(deg);
    for (std::size_t r = 0; r < neg_g.rows(); ++r)
      for (auto& x : neg_g.row(r)) x = ring.neg(x);
    Mat k = kernel_basis(f.block(deg).vstack(neg_g));
    ranks[i] = k.rows();
    for (std::size_t r = 0; r < k.rows(); ++r) {
      Vec row(w, 0);
      for (std::size_t j = 0; j < a.rank(deg); ++j) row[a.index(deg, j)] = k(r, j);
      for (std::size_t j = 0; j < b.rank(deg); ++j) row[a.dim() + b.index(deg, j)] = k(r, a.rank(deg) + j);
      basis.append_row(row);
      labels[i].push_back("p" + std::to_string(basis.rows()));
    }
  }
  GradedLieAlgebra p(ring, ranks, labels);
  LeftSolver coords(basis);
  auto split_bracket = [&](std::span<const Scalar> u, std::span<const Scalar> v) {
    Vec ua(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    Vec va(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    Vec ub(u.begin() + static_cast<std::ptrdiff_t>(a.dim()), u.end());
    Vec vb(v.begin() + static_cast<std::ptrdiff_t>(a.dim()), v.end());
    Vec out = a.bracket(ua, va);
    Vec ob = b.bracket(ub, vb);
    out.insert(out.end(), ob.begin(), ob.end());
    return out;
  };
  auto in_p = [&](std::span<const Scalar> v) {
    auto c = coords.solve(v);
    if (!c) throw InternalError("fiber_product: element outside the fiber product");
    return *c;
  };
  for (std::size_t x = 0; x < p.dim(); ++x)
    for (std::size_t y = 0; y < p.dim(); ++y) p.set_bracket(x, y, in_p(split_bracket(basis.row(x), basis.row(y))));
  auto pp = share(std::move(p));
  std::vector<Vec> first, second;
  for (std::size_t x = 0; x < pp->dim(); ++x) {
    auto row = basis.row(x);
    first.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    second.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(a.dim()), row.end());
  }
  CatObject obj{"(" + n1.name + " x " + n2.name + ")", pp, std::nullopt};
  if (n1.structure && n2.structure) {
    const auto& base = n1.structure->source();
    std::vector<Vec> images;
    for (std::size_t x = 0; x < base->dim(); ++x) {
      Vec v = n1.structure->image(x);
      Vec vb = n2.structure->image(x);
      v.insert(v.end(), vb.begin(), vb.end());
      images.push_back(in_p(v));
    }
    obj.structure = from_images(base, pp, images);
  }
  return FiberProduct{obj, from_images(pp, n1.lie, first), from_images(pp, n2.lie, second)};
}

std::optional<std::string> fiber_product_defect(const TestCategory& cat, const CatObject& n1, const GradedMorphism& f,
                                                const CatObject& n2, const GradedMorphism& g, std::size_t limit) {
  auto fp = fiber_product(n1, f, n2, g);
  for (const auto& x : cat.objects()) {
    std::map<std::pair<FunctorKey, FunctorKey>, std::size_t> factor_count;
    for (const auto& w : lie_homs(x, fp.object, limit))
      ++factor_count[{w.then(fp.first).key(), w.then(fp.second).key()}];
    auto us = lie_homs(x, n1, limit);
    auto vs = lie_homs(x, n2, limit);
    for (const auto& u : us) {
      auto fu = u.then(f).key();
      for (const auto& v : vs) {
        if (v.then(g).key() != fu) continue;
        auto it = factor_count.find({u.key(), v.key()});
        const std::size_t c = it == factor_count.end() ? 0 : it->second;
        if (c != 1)
          return "cone from " + x.name + " factors " + std::to_string(c) + " times through " + fp.object.name;
      }
    }
    for (const auto& [uv, c] : factor_count) {
      (void)uv;
      if (c != 1) return "two factorisations from " + x.name + " share their projections";
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Small sections

SmallSection is_small_section(const GradedMorphism& p) {
  const auto& n = *p.source();
  SmallSection out;
  out.surjective = p.is_surjective();
  Mat k = howell_form(p.kernel());
  out.degenerate = k.rows() == 0;
  out.central = true;
  for (std::size_t r = 0; r < k.rows() && out.central; ++r)
    for (std::size_t e = 0; e < n.dim() && out.central; ++e)
      out.central = is_zero_vec(n.bracket(n.basis_element(e), k.row_vec(r)));
  if (out.degenerate) {
    out.principal = true;
    return out;
  }
  // Rows of the Howell form of a graded subspace are homogeneous; search
  // homogeneous t degree by degree.
  const auto& ring = n.ring();
  for (int deg = 1; deg <= static_cast<int>(n.truncation()) && !out.principal; ++deg) {
    Mat rows(ring, 0, n.dim());
    for (std::size_t r = 0; r < k.rows(); ++r) {
      auto row = k.row(r);
      for (std::size_t j = 0; j < n.dim(); ++j)
        if (row[j] != 0) {
          if (n.degree(j) == deg) rows.append_row(row);
          break;
        }
    }
    if (rows.rows() == 0 || rows.rows() > 16) continue;
    Vec c(rows.rows(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == ring.modulus()) c[i++] = 0;
      if (i == c.size()) break;
      Vec t = vec_mat(c, rows);
      Mat single(ring, 0, n.dim());
      single.append_row(t);
      if (ideal_closure(n, single).rows() == k.rows()) {
        out.principal = true;
        out.generator = t;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

class HomOracle final : public FunctorOracle {
 public:
  HomOracle(CatObject l, std::size_t limit) : l_(std::move(l)), limit_(limit) {}
  std::string name() const override { return "Hom(" + l_.name + ", -)"; }
  std::vector<FunctorKey> evaluate(const CatObject& n) const override {
    std::vector<FunctorKey> out;
    for (const auto& h : lie_homs(l_, n, limit_)) out.push_back(h.key());
    std::sort(out.begin(), out.end());
    return out;
  }
  FunctorKey apply(const CatObject& source, const CatObject&, const GradedMorphism& f,
                   const FunctorKey& x) const override {
    return from_key(l_.lie, source.lie, x).then(f).key();
  }

 private:
  CatObject l_;
  std::size_t limit_;
};

class ConstantOracle final : public FunctorOracle {
 public:
  explicit ConstantOracle(std::size_t size) : size_(size) {}
  std::string name() const override { return "constant " + std::to_string(size_) + "-point set"; }
  std::vector<FunctorKey> evaluate(const CatObject&) const override {
    std::vector<FunctorKey> out;
    for (std::size_t i = 0; i < size_; ++i) out.push_back({static_cast<Scalar>(i)});
    return out;
  }
  FunctorKey apply(const CatObject&, const CatObject&, const GradedMorphism&, const FunctorKey& x) const override {
    return x;
  }

 private:
  std::size_t size_;
};

class WedgeOracle final : public FunctorOracle {
 public:
  WedgeOracle(CatObject l1, CatObject l2, std::size_t limit) : l_{std::move(l1), std::move(l2)}, limit_(limit) {}
  std::string name() const override { return "Hom(" + l_[0].name + ", -) v Hom(" + l_[1].name + ", -)"; }
  std::vector<FunctorKey> evaluate(const CatObject& n) const override {
    std::vector<FunctorKey> out{{0}};
    for (Scalar b = 0; b < 2; ++b)
      for (const auto& h : lie_homs(l_[b], n, limit_)) {
        FunctorKey k = h.key();
        if (is_zero_key(k)) continue;
        k.insert(k.begin(), b + 1);
        out.push_back(std::move(k));
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  FunctorKey apply(const CatObject& source, const CatObject&, const GradedMorphism& f,
                   const FunctorKey& x) const override {
    if (x.at(0) == 0) return x;
    const Scalar b = x[0];
    FunctorKey k = from_key(l_[b - 1].lie, source.lie, FunctorKey(x.begin() + 1, x.end())).then(f).key();
    if (is_zero_key(k)) return {0};
    k.insert(k.begin(), b);
    return k;
  }

 private:
  CatObject l_[2];
  std::size_t limit_;
};

class RepTransportOracle final : public FunctorOracle {
 public:
  RepTransportOracle(RepPtr rep, std::size_t limit) : rep_(std::move(rep)), limit_(limit) {}
  std::string name() const override { return "rep lifts to Lbar + N"; }
  std::vector<FunctorKey> evaluate(const CatObject& n) const override {
    const auto& g = *rep_->source();
    const auto& lbar = *rep_->target();
    const auto& nn = *n.lie;
    require_compatible(g, nn, "rep transport");
    const std::size_t nl = lbar.dim();
    GeneratorSystem gens(rep_->source());
    auto br = [&](const Vec& u, const Vec& v) {
      Vec out = lbar.bracket(std::span<const Scalar>(u).first(nl), std::span<const Scalar>(v).first(nl));
      Vec on = nn.bracket(std::span<const Scalar>(u).subspan(nl), std::span<const Scalar>(v).subspan(nl));
      out.insert(out.end(), on.begin(), on.end());
      return out;
    };
    std::vector<Vec> fixed;
    for (std::size_t x : gens.generators()) fixed.push_back(rep_->rho().image(x));
    std::vector<FunctorKey> out;
    for_each_generator_assignment(gens, nn, nl, nl + nn.dim(), fixed, limit_, "rep transport",
                                  [&](const std::vector<Vec>& img) {
                                    auto all = gens.morphism_from(img, br, nn.ring());
                                    if (!all) return;
                                    FunctorKey k;
                                    for (const auto& v : *all) k.insert(k.end(), v.begin() + static_cast<std::ptrdiff_t>(nl), v.end());
                                    out.push_back(std::move(k));
                                  });
    std::sort(out.begin(), out.end());
    return out;
  }
  FunctorKey apply(const CatObject& source, const CatObject&, const GradedMorphism& f,
                   const FunctorKey& x) const override {
    const std::size_t dn = source.lie->dim();
    FunctorKey out;
    for (std::size_t i = 0; i * dn < x.size(); ++i) {
      Vec v = f.apply(std::span<const Scalar>(x).subspan(i * dn, dn));
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

 private:
  RepPtr rep_;
  std::size_t limit_;
};

}  // namespace

OraclePtr hom_oracle(CatObject l, std::size_t limit) { return std::make_shared<HomOracle>(std::move(l), limit); }
OraclePtr constant_oracle(std::size_t size) { return std::make_shared<ConstantOracle>(size); }
OraclePtr wedge_oracle(CatObject l1, CatObject l2, std::size_t limit) {
  return std::make_shared<WedgeOracle>(std::move(l1), std::move(l2), limit);
}
OraclePtr rep_transport_oracle(RepPtr rep, std::size_t limit) {
  return std::make_shared<RepTransportOracle>(std::move(rep), limit);
}

// ---------------------------------------------------------------------------
// Criteria

namespace {

using KeySet = std::vector<FunctorKey>;

bool contains(const KeySet& s, const FunctorKey& k) { return std::binary_search(s.begin(), s.end(), k); }

void validate_oracle(const FunctorOracle& f, const TestCategory& cat, const std::vector<KeySet>& values) {
  const auto& objs = cat.objects();
  if (values[cat.zero()].size() != 1)
    throw InvalidArgument(f.name() + ": F(0) has " + std::to_string(values[cat.zero()].size()) +
                          " elements, a one-point set is required");
  for (const auto& a : cat.arrows()) {
    for (const auto& x : values[a.from]) {
      auto y = f.apply(objs[a.from], objs[a.to], a.map, x);
      if (!contains(values[a.to], y)) throw InvalidArgument(f.name() + ": F(" + a.name + ") leaves F(" + objs[a.to].name + ")");
      if (a.from == a.to && a.map == GradedMorphism::identity(objs[a.from].lie) && y != x)
        throw InvalidArgument(f.name() + ": F(" + a.name + ") is not the identity");
    }
  }
  for (const auto& a : cat.arrows())
    for (const auto& b : cat.arrows()) {
      if (a.to != b.from) continue;
      GradedMorphism ab = a.map.then(b.map);
      for (const auto& x : values[a.from]) {
        auto two = f.apply(objs[b.from], objs[b.to], b.map, f.apply(objs[a.from], objs[a.to], a.map, x));
        if (f.apply(objs[a.from], objs[b.to], ab, x) != two)
          throw InvalidArgument(f.name() + ": F(" + b.name + " o " + a.name + ") differs from F(" + b.name + ") o F(" +
                                a.name + ")");
      }
    }
}

CriterionInstance compare(const FunctorOracle& f, const TestCategory& cat, const std::vector<KeySet>& values,
                          const CatArrow& fa, const CatArrow& ga, const std::string& criterion) {
  const auto& objs = cat.objects();
  const auto& n1 = objs[fa.from];
  const auto& n2 = objs[ga.from];
  const auto& n = objs[fa.to];
  auto fp = fiber_product(n1, fa.map, n2, ga.map);
  auto src = f.evaluate(fp.object);
  std::set<std::pair<FunctorKey, FunctorKey>> image;
  bool injective = true;
  for (const auto& x : src) {
    auto pr = std::make_pair(f.apply(fp.object, n1, fp.first, x), f.apply(fp.object, n2, fp.second, x));
    injective = image.insert(std::move(pr)).second && injective;
  }
  std::size_t target = 0;
  bool surjective = true;
  for (const auto& a : values[fa.from]) {
    auto fa_a = f.apply(n1, n, fa.map, a);
    for (const auto& b : values[ga.from]) {
      if (f.apply(n2, n, ga.map, b) != fa_a) continue;
      ++target;
      surjective = surjective && image.count({a, b}) > 0;
    }
  }
  return CriterionInstance{criterion, fa.name + " , " + ga.name, src.size(), target, injective, surjective};
}

}  // namespace

SchlessingerReport check_criteria(const FunctorOracle& f, const TestCategory& cat) {
  const auto& objs = cat.objects();
  auto values = parallel_map<KeySet>(objs.size(), [&](std::size_t i) { return f.evaluate(objs[i]); });
  validate_oracle(f, cat, values);

  struct Job {
    std::size_t fa, ga;
    std::string criterion;
  };
  std::vector<Job> jobs;
  const auto& arrows = cat.arrows();
  for (std::size_t gi = 0; gi < arrows.size(); ++gi) {
    const auto& g = arrows[gi];
    auto s = is_small_section(g.map);
    const bool h2_shape = g.from == cat.eps() && g.to == cat.zero();
    if (!(s.small() && !s.degenerate) && !h2_shape) continue;
    for (std::size_t fi = 0; fi < arrows.size(); ++fi) {
      if (arrows[fi].to != g.to) continue;
      if (s.small() && !s.degenerate) jobs.push_back({fi, gi, "H1/H4"});
      if (h2_shape) jobs.push_back({fi, gi, "H2"});
    }
  }
  auto results = parallel_map<CriterionInstance>(jobs.size(), [&](std::size_t j) {
    return compare(f, cat, values, arrows[jobs[j].fa], arrows[jobs[j].ga], jobs[j].criterion);
  });

  SchlessingerReport rep;
  rep.functor = f.name();
  for (auto& r : results) {
    if (r.criterion == "H2") {
      rep.h2 = rep.h2 && r.injective && r.surjective;
    } else {
      rep.h1 = rep.h1 && r.surjective;
      rep.h4 = rep.h4 && r.injective && r.surjective;
    }
    rep.instances.push_back(std::move(r));
  }
  rep.tangent_size = values[cat.eps()].size();
  const std::size_t l = cat.ring().prime();
  std::size_t p = 1, e = 0;
  while (p < rep.tangent_size) {
    p *= l;
    ++e;
  }
  if (p == rep.tangent_size) rep.tangent_dim = e;
  rep.h3 = rep.tangent_dim.has_value();
  return rep;
}

std::vector<std::string> SchlessingerReport::lines() const {
  std::vector<std::string> out;
  out.push_back("functor: " + functor);
  for (const auto& i : instances)
    out.push_back(i.criterion + " [" + i.description + "] " + std::to_string(i.source_size) + " -> " +
                  std::to_string(i.target_size) + (i.surjective ? " surjective" : " not surjective") +
                  (i.injective ? ", injective" : ", not injective"));
  auto verdict = [](bool b) { return b ? std::string("pass") : std::string("FAIL"); };
  out.push_back("H1: " + verdict(h1));
  out.push_back("H2: " + verdict(h2));
  out.push_back("H3: " + verdict(h3) + " (|t_F| = " + std::to_string(tangent_size) +
                (tangent_dim ? ", dim " + std::to_string(*tangent_dim) : std::string(", not a power of l")) + ")");
  out.push_back("H4: " + verdict(h4));
  out.push_back(std::string("has hull: ") + (has_hull() ? "yes" : "no"));
  out.push_back(std::string("pro-representable: ") + (pro_representable() ? "yes" : "no"));
  return out;
}

// ---------------------------------------------------------------------------
// Completion tower

std::vector<TowerStage> completion_tower(const FunctorOracle& f, const CatObject& l) {
  const auto& lie = *l.lie;
  const std::size_t d = lie.truncation();
  // gamma[n] = Gamma_n as rows, n = 1 .. d+1.
  std::vector<Mat> gamma(d + 2, Mat(lie.ring(), 0, lie.dim()));
  gamma[1] = Mat::identity(lie.ring(), lie.dim());
  for (std::size_t n = 2; n <= d + 1; ++n) {
    Mat next(lie.ring(), 0, lie.dim());
    for (std::size_t r = 0; r < gamma[n - 1].rows(); ++r)
      for (std::size_t e = 0; e < lie.dim(); ++e) {
        Vec v = lie.bracket(lie.basis_element(e), gamma[n - 1].row_vec(r));
        if (!is_zero_vec(v)) next.append_row(v);
      }
    gamma[n] = howell_form(next);
  }
  // Quotients L / Gamma_n and projections, n = 2 .. d+1.
  std::vector<std::optional<GradedMorphism>> pi(d + 2);
  std::vector<CatObject> q(d + 2);
  for (std::size_t n = 2; n <= d + 1; ++n) {
    std::vector<Element> gens;
    for (std::size_t r = 0; r < gamma[n].rows(); ++r) gens.push_back(gamma[n].row_vec(r));
    auto quo = quotient_by_ideal(l.lie, gens);
    pi[n] = quo.projection;
    q[n] = CatObject{l.name + "/G" + std::to_string(n), quo.projection.target(), std::nullopt};
    if (l.structure) q[n].structure = l.structure->then(quo.projection);
  }
  std::vector<TowerStage> out;
  auto top = f.evaluate(l);
  for (std::size_t n = 2; n <= d + 1; ++n) {
    TowerStage st{n, f.evaluate(q[n]).size(), true};
    if (n < d + 1) {
      // q_n: L/Gamma_(n+1) -> L/Gamma_n through preimages in L.
      LeftSolver pre(pi[n + 1]->full_matrix());
      const auto& src = q[n + 1].lie;
      std::vector<Vec> images;
      for (std::size_t x = 0; x < src->dim(); ++x) {
        auto y = pre.solve(src->basis_element(x));
        if (!y) throw InternalError("completion_tower: projection is not surjective");
        images.push_back(pi[n]->apply(*y));
      }
      GradedMorphism qn = from_images(src, q[n].lie, images);
      for (const auto& x : top) {
        auto direct = f.apply(l, q[n], *pi[n], x);
        auto via = f.apply(q[n + 1], q[n], qn, f.apply(l, q[n + 1], *pi[n + 1], x));
        st.consistent = st.consistent && direct == via;
      }
    }
    out.push_back(st);
  }
  return out;
}

}  // namespace lieforge

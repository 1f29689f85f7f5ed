#include "lieforge/rep_deform.hpp"

#include <algorithm>

#include "lieforge/error.hpp"

namespace lieforge {

namespace {

// Bracket of Lbar extended A-bilinearly to Lbar (x) A.
GeneratorSystem::BracketFn base_bracket(const LiePtr& lbar, const ArtinPtr& a) {
  auto d = std::make_shared<const LieDeformation>(LieDeformation::trivial(lbar, a));
  return [d](const Vec& x, const Vec& y) { return d->bracket(x, y); };
}

std::string term(const ArtinLocalAlgebra& a, std::span<const Scalar> coef, const std::string& label) {
  std::size_t nonzero = 0;
  for (auto x : coef) nonzero += x != 0;
  if (nonzero == 1 && coef[a.unit()] == 1) return label;
  std::string s = a.format(coef);
  return nonzero == 1 ? s + "*" + label : "(" + s + ")*" + label;
}

std::string monomial(const std::vector<std::string>& vars, std::size_t i, std::size_t j) {
  return i == j ? vars[i] + "^2" : vars[i] + "*" + vars[j];
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedRep

GradedRep::GradedRep(GradedMorphism rho) : rho_(std::move(rho)) {
  const auto& g = *rho_.source();
  const auto& l = *rho_.target();
  if (!(g.ring() == l.ring())) throw InvalidArgument("representation: source and target rings differ");
  if (!g.ring().is_field()) throw InvalidArgument("representation: coefficients must be F_l");
  if (g.truncation() != l.truncation()) throw InvalidArgument("representation: truncations differ");
  auto bad = rho_.bracket_violations();
  if (!bad.empty())
    throw InvalidArgument("representation: rho does not respect [" + g.label(bad[0].first) + "," +
                          g.label(bad[0].second) + "]");
  std::vector<int> degrees(l.dim());
  for (std::size_t k = 0; k < l.dim(); ++k) degrees[k] = l.degree(k);
  LieModule m(rho_.source(), std::move(degrees), l.labels());
  for (std::size_t x = 0; x < g.dim(); ++x) {
    Vec rx = rho_.image(x);
    for (std::size_t k = 0; k < l.dim(); ++k) m.set_action(x, k, l.bracket(rx, l.basis_element(k)));
  }
  module_ = share(std::move(m));
}

// ---------------------------------------------------------------------------
// RepDeformation

RepDeformation::RepDeformation(RepPtr rep, ArtinPtr base, std::vector<Vec> images)
    : rep_(std::move(rep)), base_(std::move(base)), images_(std::move(images)) {
  if (auto d = defect()) throw InvalidArgument("representation lift: " + *d);
}

RepDeformation RepDeformation::trivial(RepPtr rep, ArtinPtr base) {
  const std::size_t r = base->rank(), n = rep->target()->dim();
  std::vector<Vec> images;
  for (std::size_t x = 0; x < rep->source()->dim(); ++x) {
    Vec v(n * r, 0);
    Vec rx = rep->rho().image(x);
    for (std::size_t k = 0; k < n; ++k) v[k * r + base->unit()] = rx[k];
    images.push_back(std::move(v));
  }
  return RepDeformation(std::move(rep), std::move(base), std::move(images));
}

std::optional<std::string> RepDeformation::defect() const {
  const auto& g = *rep_->source();
  const auto& l = *rep_->target();
  const auto& a = *base_;
  if (!(a.ring() == g.ring())) return "base over " + a.ring().name() + " but representation over " + g.ring().name();
  const std::size_t n = l.dim(), r = a.rank();
  if (images_.size() != g.dim()) return "expected " + std::to_string(g.dim()) + " images";
  for (std::size_t x = 0; x < g.dim(); ++x) {
    const Vec& v = images_[x];
    if (v.size() != n * r) return "image of " + g.label(x) + " has the wrong length";
    Vec rx = rep_->rho().image(x);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < r; ++j) {
        const Scalar c = v[k * r + j];
        if (c >= a.ring().modulus()) return "image of " + g.label(x) + " is not reduced";
        if (c != 0 && l.degree(k) != g.degree(x)) return "image of " + g.label(x) + " leaves degree " + std::to_string(g.degree(x));
      }
    for (std::size_t k = 0; k < n; ++k)
      if (v[k * r + a.unit()] != rx[k]) return "image of " + g.label(x) + " does not reduce to rho";
  }
  auto br = base_bracket(rep_->target(), base_);
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = x + 1; y < g.dim(); ++y) {
      Vec lhs(n * r, 0);
      auto c = g.bracket(x, y);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (c[k] != 0) axpy(a.ring(), lhs, images_[k], c[k]);
      if (lhs != br(images_[x], images_[y]))
        return "bracket [" + g.label(x) + "," + g.label(y) + "] is not preserved";
    }
  return std::nullopt;
}

Vec RepDeformation::component(const CochainSpace& c1, std::size_t j) const {
  const std::size_t n = rep_->target()->dim(), r = base_->rank();
  return c1.from_function([&](const Tuple& t) {
    Vec out(n, 0);
    for (std::size_t k = 0; k < n; ++k) out[k] = images_[t[0]][k * r + j];
    return out;
  });
}

std::vector<std::string> RepDeformation::describe() const {
  const auto& g = *rep_->source();
  const auto& l = *rep_->target();
  const std::size_t r = base_->rank();
  std::vector<std::string> out;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    std::string rhs;
    for (std::size_t k = 0; k < l.dim(); ++k) {
      std::span<const Scalar> coef(images_[x].data() + k * r, r);
      if (is_zero_vec(coef)) continue;
      if (!rhs.empty()) rhs += " + ";
      rhs += term(*base_, coef, l.label(k));
    }
    out.push_back(g.label(x) + " -> " + (rhs.empty() ? "0" : rhs));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tangent space

TangentSpace tangent_space(const RepPtr& rep) { return TangentSpace{cohomology_space(rep->module(), 1, 0)}; }

RepDeformation first_order_lift(const RepPtr& rep, std::span<const Scalar> cocycle, const std::string& var) {
  CochainSpace c1(rep->module(), 1, 0);
  if (cocycle.size() != c1.dim()) throw InvalidArgument("first_order_lift: cochain has the wrong length");
  if (!is_zero_vec(vec_mat(cocycle, delta_matrix(c1, CochainSpace(rep->module(), 2, 0)))))
    throw InvalidArgument("first_order_lift: cochain is not a cocycle");
  auto a = share(ArtinLocalAlgebra::truncated_polynomial(rep->ring().prime(), 2, var));
  const std::size_t n = rep->target()->dim();
  std::vector<Vec> images;
  for (std::size_t x = 0; x < rep->source()->dim(); ++x) {
    Vec v(n * 2, 0);
    Vec rx = rep->rho().image(x);
    Vec cx = c1.evaluate(cocycle, Tuple{x});
    for (std::size_t k = 0; k < n; ++k) {
      v[k * 2] = rx[k];
      v[k * 2 + 1] = cx[k];
    }
    images.push_back(std::move(v));
  }
  return RepDeformation(rep, a, std::move(images));
}

// ---------------------------------------------------------------------------
// Obstructions

bool ObstructionCertificate::vanishes() const {
  return std::all_of(classes.begin(), classes.end(), [](const Vec& c) { return is_zero_vec(c); });
}

namespace {

std::vector<Vec> lift_images(const RepDeformation& rho0, const AlgExtension& ext, const Mat& s) {
  const std::size_t n = rho0.rep()->target()->dim(), r = rho0.base()->rank(), rb = ext.total()->rank();
  std::vector<Vec> out;
  for (const Vec& v : rho0.images()) {
    Vec w(n * rb, 0);
    for (std::size_t k = 0; k < n; ++k) {
      Vec img = vec_mat(std::span<const Scalar>(v.data() + k * r, r), s);
      std::copy(img.begin(), img.end(), w.begin() + static_cast<std::ptrdiff_t>(k * rb));
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

ObstructionCertificate rep_obstruction(const RepDeformation& rho0, const AlgExtension& ext) {
  if (!(*ext.base() == *rho0.base())) throw InvalidArgument("rep_obstruction: extension does not end at the lift base");
  if (auto why = ext.defect(true)) throw InvalidArgument("rep_obstruction: extension is not small: " + *why);
  const auto& rep = *rho0.rep();
  const auto& g = *rep.source();
  const std::size_t n = rep.target()->dim(), rb = ext.total()->rank(), e = ext.kernel_rank();
  Mat s = linear_section(ext.projection);
  auto images = lift_images(rho0, ext, s);
  auto br = base_bracket(rep.target(), ext.total());
  LeftSolver kernel(ext.embedding);

  auto h2 = cohomology_space(rep.module(), 2, 0);
  const auto& c2 = h2.cochains;
  std::vector<std::vector<Vec>> values(c2.tuples().size(), std::vector<Vec>(e, Vec(n, 0)));
  for (std::size_t ti = 0; ti < c2.tuples().size(); ++ti) {
    const Tuple& t = c2.tuples()[ti];
    Vec d(n * rb, 0);
    auto c = g.bracket(t[0], t[1]);
    for (std::size_t k = 0; k < g.dim(); ++k)
      if (c[k] != 0) axpy(g.ring(), d, images[k], c[k]);
    axpy(g.ring(), d, br(images[t[0]], images[t[1]]), g.ring().neg(1));
    for (std::size_t k = 0; k < n; ++k) {
      std::span<const Scalar> part(d.data() + k * rb, rb);
      if (is_zero_vec(part)) continue;
      auto coords = kernel.solve(part);
      if (!coords) throw InternalError("rep_obstruction: bracket defect leaves the kernel of the extension");
      for (std::size_t j = 0; j < e; ++j) values[ti][j][k] = (*coords)[j];
    }
  }
  ObstructionCertificate out;
  out.section = s;
  out.h2 = h2.dimension();
  for (std::size_t j = 0; j < e; ++j) {
    Vec dj = c2.from_function([&](const Tuple& t) { return values[*c2.tuple_index(t)][j]; });
    auto cls = h2.homology.coordinates(dj);
    if (!cls) throw InternalError("rep_obstruction: bracket defect is not a cocycle");
    out.cocycles.push_back(std::move(dj));
    out.classes.push_back(std::move(*cls));
  }
  return out;
}

RepLiftResult lift_representation(const RepDeformation& rho0, const AlgExtension& ext) {
  RepLiftResult res{std::nullopt, rep_obstruction(rho0, ext)};
  if (!res.certificate.vanishes()) return res;
  const auto& rep = *rho0.rep();
  const std::size_t n = rep.target()->dim(), rb = ext.total()->rank();
  auto images = lift_images(rho0, ext, res.certificate.section);
  auto h2 = cohomology_space(rep.module(), 2, 0);
  CochainSpace c1(rep.module(), 1, 0);
  LeftSolver solver(h2.delta_in);
  // Adding c (x) u changes the defect by -u (x) dc, so dc = D cancels it.
  for (std::size_t j = 0; j < ext.kernel_rank(); ++j) {
    auto c = solver.solve(res.certificate.cocycles[j]);
    if (!c) throw InternalError("lift_representation: vanishing class without a primitive");
    for (std::size_t x = 0; x < images.size(); ++x) {
      Vec v = c1.evaluate(*c, Tuple{x});
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0)
          axpy(rep.ring(), std::span<Scalar>(images[x]).subspan(k * rb, rb), ext.embedding.row(j), v[k]);
    }
  }
  try {
    res.lifted = RepDeformation(rho0.rep(), ext.total(), std::move(images));
  } catch (const InvalidArgument& err) {
    throw InternalError(std::string("lift_representation: corrected lift fails: ") + err.what());
  }
  return res;
}

// ---------------------------------------------------------------------------
// Enumeration

LiftEnumeration enumerate_lifts(const RepPtr& rep, const ArtinPtr& a, std::size_t bound) {
  if (!(a->ring() == rep->ring())) throw InvalidArgument("enumerate_lifts: base ring differs from the representation");
  const auto& g = *rep->source();
  const auto& l = *rep->target();
  const std::size_t n = l.dim(), r = a->rank();
  GeneratorSystem gens(rep->source());
  // Free coordinates: (generator, target basis element of its degree, m-basis element).
  struct Slot {
    std::size_t gen, pos;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < gens.generators().size(); ++i) {
    const int d = g.degree(gens.generators()[i]);
    for (std::size_t k = 0; k < n; ++k)
      if (l.degree(k) == d)
        for (std::size_t j : a->maximal()) slots.push_back({i, k * r + j});
  }
  const std::uint32_t p = rep->ring().prime();
  std::size_t count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (count > bound / p) {
      throw InvalidArgument("enumerate_lifts: " + std::to_string(p) + "^" + std::to_string(slots.size()) +
                            " candidates exceed the bound " + std::to_string(bound));
    }
    count *= p;
  }
  if (count > bound) throw InvalidArgument("enumerate_lifts: candidate count exceeds the bound");

  std::vector<Vec> base_images;
  for (std::size_t x : gens.generators()) {
    Vec v(n * r, 0);
    Vec rx = rep->rho().image(x);
    for (std::size_t k = 0; k < n; ++k) v[k * r + a->unit()] = rx[k];
    base_images.push_back(std::move(v));
  }
  auto br = base_bracket(rep->target(), a);
  LiftEnumeration out;
  out.search_log = slots.size();
  std::vector<Scalar> digits(slots.size(), 0);
  while (true) {
    auto images = base_images;
    for (std::size_t i = 0; i < slots.size(); ++i) images[slots[i].gen][slots[i].pos] = digits[i];
    if (auto all = gens.morphism_from(images, br, rep->ring())) out.lifts.emplace_back(rep, a, std::move(*all));
    std::size_t i = slots.size();
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic relations

Vec QuadraticRelations::evaluate(std::span<const Scalar> v) const {
  const auto& ring = section.ring();
  Vec out(h2, 0);
  for (std::size_t i = 0; i < h1; ++i) {
    if (v[i] == 0) continue;
    axpy(ring, out, quadratic[i], ring.mul(v[i], v[i]));
    for (std::size_t j = i + 1; j < h1; ++j)
      if (v[j] != 0) axpy(ring, out, bilinear[i * h1 + j], ring.mul(v[i], v[j]));
  }
  return out;
}

std::string QuadraticRelations::presentation() const {
  const auto& ring = section.ring();
  std::string field = "F_" + std::to_string(ring.prime());
  if (h1 == 0) return field;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < h1; ++i) vars.push_back(h1 == 1 ? "s" : "s" + std::to_string(i + 1));
  std::string out = field + "[[";
  for (std::size_t i = 0; i < h1; ++i) out += (i ? "," : "") + vars[i];
  out += "]]";
  std::vector<std::string> rels;
  for (std::size_t c = 0; c < h2; ++c) {
    std::string rel;
    auto add = [&](Scalar coef, const std::string& mono) {
      if (coef == 0) return;
      if (!rel.empty()) rel += " + ";
      rel += coef == 1 ? mono : std::to_string(coef) + "*" + mono;
    };
    for (std::size_t i = 0; i < h1; ++i) {
      add(quadratic[i][c], monomial(vars, i, i));
      for (std::size_t j = i + 1; j < h1; ++j) add(bilinear[i * h1 + j][c], monomial(vars, i, j));
    }
    if (!rel.empty()) rels.push_back(rel);
  }
  if (!rels.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < rels.size(); ++i) out += (i ? ", " : "") + rels[i];
    out += ")";
  }
  return out + " to order 2";
}

QuadraticRelations quadratic_relations(const RepPtr& rep) {
  auto t = tangent_space(rep);
  auto h2 = cohomology_space(rep->module(), 2, 0);
  const auto& c1 = t.h1.cochains;
  const auto& c2 = h2.cochains;
  const auto& l = *rep->target();
  QuadraticRelations out;
  out.h1 = t.dimension();
  out.h2 = h2.dimension();
  out.section = t.h1.homology.representatives();
  auto cls = [&](const Vec& v) {
    auto c = h2.homology.coordinates(v);
    if (!c) throw InternalError("quadratic_relations: product of cocycles is not closed");
    return *c;
  };
  PairingFn pair = [&](const Vec& u, const Vec& v) { return l.bracket(u, v); };
  for (std::size_t i = 0; i < out.h1; ++i)
    for (std::size_t j = 0; j < out.h1; ++j)
      out.bilinear.push_back(cls(cup_product(c1, out.section.row(i), c1, out.section.row(j), c2, pair)));
  for (std::size_t i = 0; i < out.h1; ++i) {
    auto ci = out.section.row(i);
    out.quadratic.push_back(cls(c2.from_function([&](const Tuple& tu) {
      return l.bracket(c1.evaluate(ci, Tuple{tu[0]}), c1.evaluate(ci, Tuple{tu[1]}));
    })));
  }
  return out;
}

}  // namespace lieforge

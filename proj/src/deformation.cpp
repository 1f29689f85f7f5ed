#include "lieforge/deformation.hpp"

#include <algorithm>
#include <map>

#include "lieforge/error.hpp"
#include "lieforge/harrison.hpp"

namespace lieforge {

namespace {

// Bracket arithmetic on Lbar (x) A without any validation; shared by
// LieDeformation and the unvalidated lifts built during obstruction theory.
struct RawBracket {
  const ArtinLocalAlgebra& base;
  std::size_t n;
  const std::vector<Vec>& constants;

  std::size_t r() const { return base.rank(); }

  Vec scale(std::span<const Scalar> v, std::span<const Scalar> s) const {
    const auto& ring = base.ring();
    const std::size_t rk = r();
    std::vector<Vec> mult(rk);
    for (std::size_t p = 0; p < rk; ++p) mult[p] = base.multiply(base.basis_element(p), s);
    Vec out(n * rk, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < rk; ++p) {
        const Scalar c = v[k * rk + p];
        if (c != 0) axpy(ring, std::span<Scalar>(out).subspan(k * rk, rk), mult[p], c);
      }
    return out;
  }

  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
    const auto& ring = base.ring();
    const std::size_t rk = r();
    Vec out(n * rk, 0);
    for (std::size_t a = 0; a < n; ++a) {
      auto xa = x.subspan(a * rk, rk);
      if (is_zero_vec(xa)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        auto yb = y.subspan(b * rk, rk);
        if (is_zero_vec(yb)) continue;
        Vec coef = base.multiply(xa, yb);
        if (is_zero_vec(coef)) continue;
        axpy(ring, out, scale(constants[a * n + b], coef), 1);
      }
    }
    return out;
  }

  Vec unit_vector(std::size_t a) const {
    Vec v(n * r(), 0);
    v[a * r() + base.unit()] = 1;
    return v;
  }

  Vec jacobiator(std::size_t a, std::size_t b, std::size_t c) const {
    const auto& ring = base.ring();
    Vec out = bracket(constants[a * n + b], unit_vector(c));
    axpy(ring, out, bracket(constants[b * n + c], unit_vector(a)), 1);
    axpy(ring, out, bracket(constants[c * n + a], unit_vector(b)), 1);
    return out;
  }
};

std::vector<std::size_t> pivot_columns(const Mat& rref) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rref.rows(); ++i)
    for (std::size_t c = 0; c < rref.cols(); ++c)
      if (rref(i, c) != 0) {
        out.push_back(c);
        break;
      }
  return out;
}

std::string signed_term(const ArtinLocalAlgebra& a, std::span<const Scalar> coef, const std::string& label) {
  std::size_t nonzero = 0;
  for (auto x : coef) nonzero += x != 0;
  if (coef.size() == a.rank() && nonzero == 1 && coef[a.unit()] == 1) return label;
  std::string s = a.format(coef);
  return nonzero == 1 ? s + "*" + label : "(" + s + ")*" + label;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieDeformation

LieDeformation::LieDeformation(LiePtr reduction, ArtinPtr base, std::vector<Vec> constants,
                               std::vector<int> parameter_grades)
    : lbar_(std::move(reduction)),
      base_(std::move(base)),
      constants_(std::move(constants)),
      grades_(std::move(parameter_grades)) {
  if (grades_.empty()) grades_.assign(base_->rank(), 0);
  if (auto d = defect()) throw InvalidArgument("deformation: " + *d);
}

LieDeformation LieDeformation::trivial(LiePtr reduction, ArtinPtr base) {
  const std::size_t n = reduction->dim(), r = base->rank();
  std::vector<Vec> c(n * n, Vec(n * r, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto v = reduction->bracket(a, b);
      for (std::size_t k = 0; k < n; ++k) c[a * n + b][k * r + base->unit()] = v[k];
    }
  return LieDeformation(reduction, base, std::move(c));
}

bool LieDeformation::grade_zero() const {
  return std::all_of(grades_.begin(), grades_.end(), [](int g) { return g == 0; });
}

std::optional<std::string> LieDeformation::defect() const {
  const auto& L = *lbar_;
  const auto& A = *base_;
  if (!(L.ring() == A.ring())) return "Lie algebra over " + L.ring().name() + " but base over " + A.ring().name();
  const std::size_t n = dim(), r = rank();
  if (constants_.size() != n * n) return "expected " + std::to_string(n * n) + " bracket constants";
  if (grades_.size() != r) return "one parameter grade per base element is required";
  if (grades_[A.unit()] != 0) return "the unit must carry grade 0";
  const int d = static_cast<int>(L.truncation());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec& v = constants(a, b);
      if (v.size() != n * r) return "bracket constant of wrong length";
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < r; ++j) {
          const Scalar c = v[k * r + j];
          if (c >= ring().modulus()) return "bracket constant not reduced";
          if (c == 0) continue;
          const int want = L.degree(a) + L.degree(b) - grades_[j];
          if (L.degree(k) != want || want > d)
            return "[" + L.label(a) + "," + L.label(b) + "] has a component " + A.label(j) + "*" + L.label(k) +
                   " of the wrong degree";
        }
      for (std::size_t k = 0; k < n; ++k)
        if (v[k * r + A.unit()] != L.bracket(a, b)[k])
          return "[" + L.label(a) + "," + L.label(b) + "] does not reduce to the bracket of the reduction";
      const Vec& w = constants(b, a);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (ring().add(v[i], w[i]) != 0 || (a == b && v[i] != 0))
          return "antisymmetry fails at (" + L.label(a) + "," + L.label(b) + ")";
    }
  RawBracket raw{A, n, constants_};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!is_zero_vec(raw.jacobiator(a, b, c)))
          return "Jacobi fails on (" + L.label(a) + "," + L.label(b) + "," + L.label(c) + ")";
      }
  return std::nullopt;
}

Vec LieDeformation::basis_element(std::size_t a) const { return RawBracket{*base_, dim(), constants_}.unit_vector(a); }

Vec LieDeformation::scale(std::span<const Scalar> v, std::span<const Scalar> s) const {
  return RawBracket{*base_, dim(), constants_}.scale(v, s);
}

Vec LieDeformation::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  return RawBracket{*base_, dim(), constants_}.bracket(x, y);
}

Vec LieDeformation::component(const CochainSpace& c2, std::size_t j) const {
  const std::size_t n = dim(), r = rank();
  return c2.from_function([&](const Tuple& t) {
    Vec out(n, 0);
    const Vec& v = constants(t[0], t[1]);
    for (std::size_t k = 0; k < n; ++k) out[k] = v[k * r + j];
    return out;
  });
}

std::vector<std::string> LieDeformation::describe() const {
  const auto& L = *lbar_;
  const std::size_t n = dim(), r = rank();
  std::vector<std::string> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec& v = constants(a, b);
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        std::span<const Scalar> coef(v.data() + k * r, r);
        if (is_zero_vec(coef)) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += signed_term(*base_, coef, L.label(k));
      }
      if (!rhs.empty()) out.push_back("[" + L.label(a) + "," + L.label(b) + "] = " + rhs);
    }
  return out;
}

Vec jacobiator(const LieDeformation& d, std::size_t a, std::size_t b, std::size_t c) {
  return RawBracket{*d.base(), d.dim(), d.all_constants()}.jacobiator(a, b, c);
}

// ---------------------------------------------------------------------------
// eta, push-forward, classification

EtaDeformation eta(LiePtr lbar, std::vector<int> grades, std::vector<std::optional<Mat>> sections) {
  if (!lbar->ring().is_field()) throw InvalidArgument("eta: the Lie algebra must be over F_l (use reduce_mod_l)");
  if (!sections.empty() && sections.size() != grades.size())
    throw InvalidArgument("eta: one section per grade is required");
  auto ad = share(adjoint_module(lbar));
  const std::size_t n = lbar->dim();
  EtaDeformation out{LieDeformation::trivial(lbar, share(ArtinLocalAlgebra::residue_field(lbar->ring().prime()))),
                     grades,
                     {},
                     {}};
  std::vector<CochainSpace> spaces;
  std::size_t total = 0;
  for (std::size_t g = 0; g < grades.size(); ++g) {
    auto cs = cohomology_space(ad, 2, grades[g]);
    const auto& h = cs.homology;
    Mat section = h.representatives();
    if (!sections.empty() && sections[g]) {
      section = *sections[g];
      if (section.cols() != cs.cochains.dim() || section.rows() != h.dimension())
        throw InvalidArgument("eta: section for grade " + std::to_string(grades[g]) + " has the wrong shape");
      for (std::size_t i = 0; i < section.rows(); ++i)
        if (!h.is_cycle(section.row(i))) throw InvalidArgument("eta: section row " + std::to_string(i) + " is not a cocycle");
      const std::size_t nb = howell_form(h.boundaries()).rows();
      if (howell_form(section.vstack(h.boundaries())).rows() != nb + section.rows())
        throw InvalidArgument("eta: section classes are not a basis of H^2");
    }
    out.first_param.push_back(1 + total);
    total += section.rows();
    out.sections.push_back(section);
    spaces.push_back(cs.cochains);
  }
  auto base = share(ArtinLocalAlgebra::square_zero(lbar->ring().prime(), total));
  const std::size_t r = base->rank();
  std::vector<int> pgrades(r, 0);
  std::vector<Vec> c(n * n, Vec(n * r, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto v = lbar->bracket(a, b);
      for (std::size_t k = 0; k < n; ++k) c[a * n + b][k * r] = v[k];
    }
  for (std::size_t g = 0; g < grades.size(); ++g) {
    const Mat& s = out.sections[g];
    for (std::size_t i = 0; i < s.rows(); ++i) {
      const std::size_t j = out.first_param[g] + i;
      pgrades[j] = grades[g];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (a == b) continue;
          Vec v = spaces[g].evaluate(s.row(i), Tuple{a, b});
          for (std::size_t k = 0; k < n; ++k) c[a * n + b][k * r + j] = v[k];
        }
    }
  }
  out.deformation = LieDeformation(lbar, base, std::move(c), pgrades);
  return out;
}

EtaDeformation eta_zero(LiePtr lbar, std::optional<Mat> section) {
  return eta(std::move(lbar), {0}, {std::move(section)});
}

LieDeformation push_forward(const LieDeformation& d, const ArtinMorphism& phi) {
  if (!(*phi.source() == *d.base())) throw InvalidArgument("push_forward: morphism source is not the deformation base");
  if (!d.grade_zero()) throw InvalidArgument("push_forward: parameters of nonzero grade are not supported");
  const std::size_t n = d.dim(), r = d.rank(), r2 = phi.target()->rank();
  std::vector<Vec> c(n * n, Vec(n * r2, 0));
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Vec& v = d.all_constants()[ab];
    for (std::size_t k = 0; k < n; ++k) {
      Vec img = vec_mat(std::span<const Scalar>(v.data() + k * r, r), phi.matrix());
      std::copy(img.begin(), img.end(), c[ab].begin() + static_cast<std::ptrdiff_t>(k * r2));
    }
  }
  return LieDeformation(d.reduction(), phi.target(), std::move(c));
}

std::optional<std::vector<Vec>> find_equivalence(const LieDeformation& first, const LieDeformation& second) {
  if (!(*first.reduction() == *second.reduction()) || !(*first.base() == *second.base()))
    throw InvalidArgument("find_equivalence: deformations of different algebras or over different bases");
  const auto& A = *first.base();
  if (!A.is_square_zero())
    throw InvalidArgument("find_equivalence: only square-zero bases are supported (m^2 = 0)");
  if (!first.grade_zero() || !second.grade_zero())
    throw InvalidArgument("find_equivalence: parameters of nonzero grade are not supported");
  auto ad = share(adjoint_module(first.reduction()));
  CochainSpace c1(ad, 1, 0), c2(ad, 2, 0);
  LeftSolver solver(delta_matrix(c1, c2));
  std::vector<Vec> gauge;
  for (auto j : A.maximal()) {
    Vec diff = first.component(c2, j);
    axpy(A.ring(), diff, second.component(c2, j), A.ring().neg(1));
    auto nu = solver.solve(diff);
    if (!nu) return std::nullopt;
    gauge.push_back(*nu);
  }
  return gauge;
}

Classification classify_square_zero(const EtaDeformation& e, const LieDeformation& d) {
  const auto& A = *d.base();
  if (!A.is_square_zero()) throw InvalidArgument("classify_square_zero: base has m^2 != 0");
  if (e.grades != std::vector<int>{0}) throw InvalidArgument("classify_square_zero: eta must be the grade-0 eta");
  if (!(*e.deformation.reduction() == *d.reduction()))
    throw InvalidArgument("classify_square_zero: deformation of a different algebra");
  if (!d.grade_zero()) throw InvalidArgument("classify_square_zero: parameters of nonzero grade are not supported");
  auto ad = share(adjoint_module(d.reduction()));
  auto cs = cohomology_space(ad, 2, 0);
  const Mat& section = e.sections[0];
  const std::size_t h = section.rows();
  LeftSolver solver(section.vstack(cs.homology.boundaries()));
  const auto& D1 = e.deformation.base();
  Mat m(A.ring(), D1->rank(), A.rank());
  m.set(D1->unit(), A.unit(), 1);
  for (auto j : A.maximal()) {
    Vec phi = d.component(cs.cochains, j);
    if (!cs.homology.is_cycle(phi)) throw InternalError("classify_square_zero: component is not a cocycle");
    auto x = solver.solve(phi);
    if (!x) throw InternalError("classify_square_zero: cocycle outside the section span");
    for (std::size_t s = 0; s < h; ++s) m.set(e.first_param[0] + s, j, (*x)[s]);
  }
  ArtinMorphism morphism(D1, d.base(), m);
  auto gauge = find_equivalence(push_forward(e.deformation, morphism), d);
  if (!gauge) throw InternalError("classify_square_zero: push-forward is not equivalent to the input");
  return Classification{morphism, *gauge};
}

// ---------------------------------------------------------------------------
// Obstructions

bool ObstructionData::vanishes() const {
  return std::all_of(classes.begin(), classes.end(), [](const Vec& v) { return is_zero_vec(v); });
}

namespace {

struct Lift {
  std::vector<Vec> constants;  // over B
  Mat section;
};

Lift lift_constants(const LieDeformation& d, const AlgExtension& ext, const std::optional<Mat>& section) {
  const auto& B = *ext.total();
  const std::size_t n = d.dim(), r = d.rank(), rb = B.rank();
  Mat s = section ? *section : linear_section(ext.projection);
  if (s.rows() != r || s.cols() != rb || !(s * ext.projection.matrix() == Mat::identity(d.ring(), r)))
    throw InvalidArgument("obstruction: the given section is not a section of the projection");
  std::vector<Vec> c(n * n, Vec(n * rb, 0));
  for (std::size_t ab = 0; ab < n * n; ++ab)
    for (std::size_t k = 0; k < n; ++k) {
      Vec img = vec_mat(std::span<const Scalar>(d.all_constants()[ab].data() + k * r, r), s);
      std::copy(img.begin(), img.end(), c[ab].begin() + static_cast<std::ptrdiff_t>(k * rb));
    }
  return Lift{std::move(c), std::move(s)};
}

void check_extension(const LieDeformation& d, const AlgExtension& ext) {
  if (!(*ext.base() == *d.base())) throw InvalidArgument("obstruction: extension does not end at the deformation base");
  if (auto why = ext.defect(true)) throw InvalidArgument("obstruction: extension is not small: " + *why);
  if (!d.grade_zero()) throw InvalidArgument("obstruction: parameters of nonzero grade are not supported");
}

}  // namespace

ObstructionData obstruction(const LieDeformation& d, const AlgExtension& ext, const std::optional<Mat>& section) {
  check_extension(d, ext);
  const auto& B = *ext.total();
  const std::size_t n = d.dim(), rb = B.rank(), e = ext.kernel_rank();
  Lift lift = lift_constants(d, ext, section);
  RawBracket raw{B, n, lift.constants};
  LeftSolver kernel(ext.embedding);

  auto ad = share(adjoint_module(d.reduction()));
  auto h3 = cohomology_space(ad, 3, 0);
  const auto& c3 = h3.cochains;
  // values[ti][s] = J_s on tuple ti
  std::vector<std::vector<Vec>> values(c3.tuples().size(), std::vector<Vec>(e, Vec(n, 0)));
  for (std::size_t ti = 0; ti < c3.tuples().size(); ++ti) {
    const Tuple& t = c3.tuples()[ti];
    Vec j = raw.jacobiator(t[0], t[1], t[2]);
    for (std::size_t k = 0; k < n; ++k) {
      std::span<const Scalar> part(j.data() + k * rb, rb);
      if (is_zero_vec(part)) continue;
      auto coords = kernel.solve(part);
      if (!coords) throw InternalError("obstruction: Jacobiator leaves the kernel of the extension");
      for (std::size_t s = 0; s < e; ++s) values[ti][s][k] = (*coords)[s];
    }
  }
  ObstructionData out{lift.section, {}, {}, h3.dimension()};
  for (std::size_t s = 0; s < e; ++s) {
    Vec js = c3.from_function([&](const Tuple& t) { return values[*c3.tuple_index(t)][s]; });
    auto cls = h3.homology.coordinates(js);
    if (!cls) throw InternalError("obstruction: Jacobi defect is not a cocycle");
    out.cocycles.push_back(std::move(js));
    out.classes.push_back(std::move(*cls));
  }
  return out;
}

Vec obstruction_class(const LieDeformation& d, const AlgExtension& ext) {
  if (ext.kernel_rank() != 1) throw InvalidArgument("obstruction_class: the extension kernel must be F_l");
  return obstruction(d, ext).classes[0];
}

ExtensionResult extend_deformation(const LieDeformation& d, const AlgExtension& ext) {
  ExtensionResult res{std::nullopt, obstruction(d, ext)};
  if (!res.obstruction.vanishes()) return res;
  const auto& B = *ext.total();
  const std::size_t n = d.dim(), rb = B.rank();
  Lift lift = lift_constants(d, ext, res.obstruction.section);
  auto ad = share(adjoint_module(d.reduction()));
  auto h3 = cohomology_space(ad, 3, 0);
  CochainSpace c2(ad, 2, 0);
  LeftSolver solver(h3.delta_in);
  for (std::size_t s = 0; s < ext.kernel_rank(); ++s) {
    auto psi = solver.solve(res.obstruction.cocycles[s]);
    if (!psi) throw InternalError("extend_deformation: vanishing class without a primitive");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        Vec v = c2.evaluate(*psi, Tuple{a, b});
        for (std::size_t k = 0; k < n; ++k)
          if (v[k] != 0)
            axpy(B.ring(), std::span<Scalar>(lift.constants[a * n + b]).subspan(k * rb, rb), ext.embedding.row(s), v[k]);
      }
  }
  try {
    res.lifted = LieDeformation(d.reduction(), ext.total(), std::move(lift.constants));
  } catch (const InvalidArgument& err) {
    throw InternalError(std::string("extend_deformation: corrected lift fails: ") + err.what());
  }
  return res;
}

// ---------------------------------------------------------------------------
// Miniversal tower

DeformationStage first_stage(LiePtr lbar) { return DeformationStage{1, eta_zero(std::move(lbar)).deformation, {}, 0, 0}; }

DeformationStage miniversal_step(const DeformationStage& stage) {
  const auto& D = stage.base();
  const auto& ring = D->ring();
  auto uni = universal_extension(D);
  const std::size_t e = uni.cocycles.size();
  auto ob = obstruction(stage.eta, uni.extension);
  Mat phi_t(ring, ob.h3, e);  // transpose of Phi: rows span the image of Phi'
  for (std::size_t s = 0; s < e; ++s)
    for (std::size_t c = 0; c < ob.h3; ++c) phi_t.set(c, s, ob.classes[s][c]);
  Mat w = howell_form(phi_t);
  auto pivots = pivot_columns(w);
  std::vector<std::size_t> keep;
  for (std::size_t s = 0; s < e; ++s)
    if (std::find(pivots.begin(), pivots.end(), s) == pivots.end()) keep.push_back(s);
  const std::size_t e2 = keep.size();
  // q: F_l^e -> F_l^e2, killing the image of Phi'.
  Mat q(ring, e, e2);
  for (std::size_t i = 0; i < e2; ++i) q.set(keep[i], i, 1);
  for (std::size_t row = 0; row < pivots.size(); ++row)
    for (std::size_t i = 0; i < e2; ++i) q.set(pivots[row], i, ring.neg(w(row, keep[i])));

  const auto& C = *uni.extension.total();
  const std::size_t rd = D->rank(), rc = C.rank(), rn = rd + e2;
  Mat pi(ring, rc, rn);
  for (std::size_t i = 0; i < rd; ++i) pi.set(i, i, 1);
  for (std::size_t s = 0; s < e; ++s)
    for (std::size_t i = 0; i < e2; ++i) pi.set(rd + s, rd + i, q(s, i));
  auto pre = [&](std::size_t i) { return i < rd ? C.basis_element(i) : C.basis_element(rd + keep[i - rd]); };
  std::vector<Vec> table;
  for (std::size_t i = 0; i < rn; ++i)
    for (std::size_t j = 0; j < rn; ++j) table.push_back(vec_mat(C.multiply(pre(i), pre(j)), pi));
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < rn; ++i)
    if (i != D->unit()) maximal.push_back(i);
  std::vector<std::string> labels = D->labels();
  for (std::size_t i = 0; i < e2; ++i)
    labels.push_back("u" + std::to_string(stage.k) + (e2 > 1 ? "_" + std::to_string(i + 1) : ""));
  auto next = share(ArtinLocalAlgebra(ring, rn, D->unit(), std::move(table), std::move(maximal), std::move(labels)));
  Mat proj(ring, rn, rd);
  for (std::size_t i = 0; i < rd; ++i) proj.set(i, i, 1);
  auto link = extension_from_surjection(ArtinMorphism(next, D, proj));
  if (auto why = link.defect(true)) throw InternalError("miniversal_step: stage extension is not small: " + *why);
  auto res = extend_deformation(stage.eta, link);
  if (!res.ok()) throw InternalError("miniversal_step: obstruction does not vanish on the cokernel");
  return DeformationStage{stage.k + 1, std::move(*res.lifted), link, e, pivots.size()};
}

std::vector<DeformationStage> miniversal_tower(LiePtr lbar, std::size_t count) {
  std::vector<DeformationStage> out;
  if (count == 0) return out;
  out.push_back(first_stage(std::move(lbar)));
  while (out.size() < count) out.push_back(miniversal_step(out.back()));
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic map

Vec QuadraticMap::evaluate(std::span<const Scalar> c) const {
  const auto& ring = section.ring();
  Vec out(h3, 0);
  for (std::size_t a = 0; a < h2; ++a) {
    if (c[a] == 0) continue;
    axpy(ring, out, quadratic[a], ring.mul(c[a], c[a]));
    for (std::size_t b = a + 1; b < h2; ++b)
      if (c[b] != 0) axpy(ring, out, bilinear[a * h2 + b], ring.mul(c[a], c[b]));
  }
  return out;
}

QuadraticMap quadratic_map(LiePtr lbar) {
  if (!lbar->ring().is_field()) throw InvalidArgument("quadratic_map: the Lie algebra must be over F_l");
  auto ad = share(adjoint_module(lbar));
  auto h2 = cohomology_space(ad, 2, 0);
  auto h3 = cohomology_space(ad, 3, 0);
  QuadraticMap out;
  out.h2 = h2.dimension();
  out.h3 = h3.dimension();
  out.section = h2.homology.representatives();
  auto cls = [&](const Vec& v) {
    auto c = h3.homology.coordinates(v);
    if (!c) throw InternalError("quadratic_map: product of cocycles is not closed");
    return *c;
  };
  const auto& s2 = h2.cochains;
  const auto& s3 = h3.cochains;
  for (std::size_t a = 0; a < out.h2; ++a)
    for (std::size_t b = 0; b < out.h2; ++b)
      out.bilinear.push_back(cls(nr_bracket(s2, out.section.row(a), s2, out.section.row(b), s3)));
  for (std::size_t a = 0; a < out.h2; ++a)
    out.quadratic.push_back(cls(compose(s2, out.section.row(a), s2, out.section.row(a), s3)));
  return out;
}

}  // namespace lieforge

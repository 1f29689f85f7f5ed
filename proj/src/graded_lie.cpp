#include "lieforge/graded_lie.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lieforge {

namespace {

void add_scaled(const CoeffRing& R, Element& dst, std::span<const Scalar> src, Scalar c) {
  if (c != 0) axpy(R, dst, src, c);
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedLieAlgebra

GradedLieAlgebra::GradedLieAlgebra(CoeffRing ring, std::vector<std::size_t> ranks,
                                   std::vector<std::vector<std::string>> labels)
    : ring_(ring), ranks_(std::move(ranks)) {
  if (!labels.empty() && labels.size() != ranks_.size())
    throw InvalidArgument("label lists must be given for every degree");
  std::size_t off = 0;
  for (std::size_t d = 0; d < ranks_.size(); ++d) {
    offsets_.push_back(off);
    if (!labels.empty() && labels[d].size() != ranks_[d])
      throw InvalidArgument("degree " + std::to_string(d + 1) + " has " + std::to_string(ranks_[d]) +
                            " basis elements but " + std::to_string(labels[d].size()) + " labels");
    for (std::size_t i = 0; i < ranks_[d]; ++i) {
      degree_of_.push_back(static_cast<int>(d + 1));
      labels_.push_back(labels.empty() ? "e" + std::to_string(d + 1) + "_" + std::to_string(i) : labels[d][i]);
    }
    off += ranks_[d];
  }
  offsets_.push_back(off);
  constants_.assign(off * off * off, 0);
}

std::size_t GradedLieAlgebra::rank(int degree) const {
  if (degree < 1 || static_cast<std::size_t>(degree) > ranks_.size()) return 0;
  return ranks_[static_cast<std::size_t>(degree) - 1];
}

std::optional<std::size_t> GradedLieAlgebra::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void GradedLieAlgebra::set_bracket(std::size_t a, std::size_t b, std::span<const Scalar> value) {
  if (a >= dim() || b >= dim() || value.size() != dim()) throw InvalidArgument("set_bracket: index or length out of range");
  Scalar* dst = constants_.data() + (a * dim() + b) * dim();
  for (std::size_t k = 0; k < dim(); ++k) dst[k] = value[k] % ring_.modulus();
}

void GradedLieAlgebra::set_antisymmetric(std::size_t a, std::size_t b, std::span<const Scalar> value) {
  set_bracket(a, b, value);
  Element neg(value.begin(), value.end());
  for (auto& x : neg) x = ring_.neg(x % ring_.modulus());
  set_bracket(b, a, neg);
}

Element GradedLieAlgebra::bracket(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != dim() || v.size() != dim())
    throw InvalidArgument("bracket_eval: element length " + std::to_string(u.size()) + "/" +
                          std::to_string(v.size()) + " does not match dimension " + std::to_string(dim()));
  Element out(dim(), 0);
  for (std::size_t a = 0; a < dim(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (v[b] == 0) continue;
      add_scaled(ring_, out, bracket(a, b), ring_.mul(u[a], v[b]));
    }
  }
  return out;
}

Element GradedLieAlgebra::basis_element(std::size_t idx) const {
  Element e(dim(), 0);
  e.at(idx) = 1;
  return e;
}

ValidationReport GradedLieAlgebra::validate() const {
  ValidationReport rep;
  const std::size_t n = dim();
  const int d = static_cast<int>(truncation());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto v = bracket(a, b);
      const int target = degree(a) + degree(b);
      Element stray(n, 0);
      bool bad = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (v[k] != 0 && (target > d || degree(k) != target)) {
          stray[k] = v[k];
          bad = true;
        }
      }
      if (bad) rep.issues.push_back({ValidationIssue::Kind::Grading, {a, b}, stray});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Element s(bracket(a, b).begin(), bracket(a, b).end());
      if (a != b) add_scaled(ring_, s, bracket(b, a), 1);
      if (!is_zero_vec(s)) rep.issues.push_back({ValidationIssue::Kind::Antisymmetry, {a, b}, s});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (degree(a) + degree(b) >= d) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (degree(a) + degree(b) + degree(c) > d) continue;
        Element ab(bracket(a, b).begin(), bracket(a, b).end());
        Element bc(bracket(b, c).begin(), bracket(b, c).end());
        Element ca(bracket(c, a).begin(), bracket(c, a).end());
        Element j = bracket(ab, basis_element(c));
        add_scaled(ring_, j, bracket(bc, basis_element(a)), 1);
        add_scaled(ring_, j, bracket(ca, basis_element(b)), 1);
        if (!is_zero_vec(j)) rep.issues.push_back({ValidationIssue::Kind::Jacobi, {a, b, c}, j});
      }
    }
  }
  return rep;
}

bool GradedLieAlgebra::is_abelian() const {
  return std::all_of(constants_.begin(), constants_.end(), [](Scalar x) { return x == 0; });
}

GradedLieAlgebra GradedLieAlgebra::reduce_mod_l() const {
  CoeffRing field = ring_.residue_field();
  GradedLieAlgebra out = *this;
  out.ring_ = field;
  for (auto& x : out.constants_) x %= field.modulus();
  return out;
}

GradedLieAlgebra GradedLieAlgebra::lifted_to(const CoeffRing& ring) const {
  if (!ring_.is_field() || ring.prime() != ring_.prime())
    throw InvalidArgument("lifted_to: source must be over F_l with the same l");
  GradedLieAlgebra out = *this;
  out.ring_ = ring;
  return out;
}

GradedLieAlgebra GradedLieAlgebra::padded(std::size_t d) const {
  if (d < truncation()) throw InvalidArgument("padded: cannot lower the truncation degree");
  std::vector<std::size_t> ranks = ranks_;
  ranks.resize(d, 0);
  std::vector<std::vector<std::string>> labels(d);
  for (std::size_t i = 0; i < dim(); ++i) labels[static_cast<std::size_t>(degree(i)) - 1].push_back(labels_[i]);
  GradedLieAlgebra out(ring_, ranks, labels);
  out.constants_ = constants_;
  return out;
}

std::string GradedLieAlgebra::describe_issue(const ValidationIssue& issue) const {
  std::ostringstream os;
  auto name = [&](std::size_t i) { return label(i); };
  switch (issue.kind) {
    case ValidationIssue::Kind::Grading:
      os << "grading: [" << name(issue.indices[0]) << "," << name(issue.indices[1]) << "] has components outside degree "
         << degree(issue.indices[0]) + degree(issue.indices[1]);
      break;
    case ValidationIssue::Kind::Antisymmetry:
      if (issue.indices[0] == issue.indices[1])
        os << "antisymmetry: [" << name(issue.indices[0]) << "," << name(issue.indices[0]) << "] != 0";
      else
        os << "antisymmetry: [" << name(issue.indices[0]) << "," << name(issue.indices[1]) << "] + ["
           << name(issue.indices[1]) << "," << name(issue.indices[0]) << "] != 0";
      break;
    case ValidationIssue::Kind::Jacobi:
      os << "jacobi: (" << name(issue.indices[0]) << "," << name(issue.indices[1]) << "," << name(issue.indices[2])
         << ") has nonzero Jacobiator";
      break;
  }
  os << " residual [";
  for (std::size_t k = 0; k < issue.residual.size(); ++k) os << (k ? "," : "") << issue.residual[k];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// GradedMorphism

GradedMorphism::GradedMorphism(LiePtr source, LiePtr target, std::vector<Mat> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (!(source_->ring() == target_->ring())) throw InvalidArgument("morphism: source and target rings differ");
  if (source_->truncation() != target_->truncation())
    throw InvalidArgument("morphism: truncation degrees differ (" + std::to_string(source_->truncation()) + " vs " +
                          std::to_string(target_->truncation()) + ")");
  if (blocks_.size() != source_->truncation()) throw InvalidArgument("morphism: need one block per degree");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const int deg = static_cast<int>(i + 1);
    if (blocks_[i].rows() != source_->rank(deg) || blocks_[i].cols() != target_->rank(deg))
      throw InvalidArgument("morphism: block for degree " + std::to_string(deg) + " has the wrong shape");
    if (!(blocks_[i].ring() == source_->ring())) throw InvalidArgument("morphism: block ring mismatch");
  }
}

GradedMorphism GradedMorphism::identity(LiePtr l) {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < l->truncation(); ++i) blocks.push_back(Mat::identity(l->ring(), l->ranks()[i]));
  return GradedMorphism(l, l, std::move(blocks));
}

GradedMorphism GradedMorphism::zero(LiePtr source, LiePtr target) {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < source->truncation(); ++i) {
    const int deg = static_cast<int>(i + 1);
    blocks.emplace_back(source->ring(), source->rank(deg), target->rank(deg));
  }
  return GradedMorphism(std::move(source), std::move(target), std::move(blocks));
}

Element GradedMorphism::image(std::size_t source_idx) const {
  const int deg = source_->degree(source_idx);
  const std::size_t local = source_idx - source_->offset(deg);
  Element out(target_->dim(), 0);
  auto row = block(deg).row(local);
  std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(target_->offset(deg)));
  return out;
}

Element GradedMorphism::apply(std::span<const Scalar> x) const {
  if (x.size() != source_->dim()) throw InvalidArgument("morphism apply: length mismatch");
  Element out(target_->dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) add_scaled(target_->ring(), out, image(i), x[i]);
  }
  return out;
}

Mat GradedMorphism::full_matrix() const {
  Mat m(source_->ring(), source_->dim(), target_->dim());
  for (std::size_t i = 0; i < source_->dim(); ++i) {
    auto img = image(i);
    std::copy(img.begin(), img.end(), m.row(i).begin());
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> GradedMorphism::bracket_violations() const {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const std::size_t n = source_->dim();
  std::vector<Element> imgs;
  for (std::size_t i = 0; i < n; ++i) imgs.push_back(image(i));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Element lhs = apply(source_->bracket(a, b));
      Element rhs = target_->bracket(imgs[a], imgs[b]);
      if (lhs != rhs) bad.emplace_back(a, b);
    }
  }
  return bad;
}

GradedMorphism GradedMorphism::then(const GradedMorphism& next) const {
  if (!(*target_ == *next.source_)) throw InvalidArgument("morphism composition: target/source mismatch");
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] * next.blocks_[i]);
  return GradedMorphism(source_, next.target_, std::move(blocks));
}

bool GradedMorphism::is_surjective() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const std::size_t want = blocks_[i].cols() * source_->ring().precision();
    if (span_log_size(howell_form(blocks_[i])) != want) return false;
  }
  return true;
}

bool GradedMorphism::is_injective() const { return kernel().rows() == 0; }

Mat GradedMorphism::kernel() const {
  Mat out(source_->ring(), 0, source_->dim());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const int deg = static_cast<int>(i + 1);
    Mat k = kernel_basis(blocks_[i]);
    for (std::size_t r = 0; r < k.rows(); ++r) {
      Element v(source_->dim(), 0);
      auto row = k.row(r);
      std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(source_->offset(deg)));
      out.append_row(v);
    }
  }
  return out;
}

std::vector<Scalar> GradedMorphism::key() const {
  std::vector<Scalar> k;
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < b.rows(); ++i) k.insert(k.end(), b.row(i).begin(), b.row(i).end());
  }
  return k;
}

// ---------------------------------------------------------------------------
// LieModule

LieModule::LieModule(LiePtr algebra, std::vector<int> degrees, std::vector<std::string> labels)
    : algebra_(std::move(algebra)), degrees_(std::move(degrees)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t m = 0; m < degrees_.size(); ++m) labels_.push_back("m" + std::to_string(m));
  }
  if (labels_.size() != degrees_.size()) throw InvalidArgument("module: label count mismatch");
  action_.assign(algebra_->dim() * dim() * dim(), 0);
  index_degrees();
}

void LieModule::index_degrees() {
  for (std::size_t m = 0; m < degrees_.size(); ++m) {
    auto it = std::find(degree_keys_.begin(), degree_keys_.end(), degrees_[m]);
    if (it == degree_keys_.end()) {
      degree_keys_.push_back(degrees_[m]);
      by_degree_.push_back({m});
    } else {
      by_degree_[static_cast<std::size_t>(it - degree_keys_.begin())].push_back(m);
    }
  }
}

const std::vector<std::size_t>& LieModule::basis_of_degree(int degree) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = std::find(degree_keys_.begin(), degree_keys_.end(), degree);
  if (it == degree_keys_.end()) return kEmpty;
  return by_degree_[static_cast<std::size_t>(it - degree_keys_.begin())];
}

int LieModule::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int LieModule::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

void LieModule::set_action(std::size_t x, std::size_t m, std::span<const Scalar> value) {
  if (x >= algebra_->dim() || m >= dim() || value.size() != dim()) throw InvalidArgument("set_action: out of range");
  Scalar* dst = action_.data() + (x * dim() + m) * dim();
  for (std::size_t k = 0; k < dim(); ++k) dst[k] = value[k] % ring().modulus();
}

Vec LieModule::act(std::span<const Scalar> x, std::span<const Scalar> m) const {
  Vec out(dim(), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (m[b] == 0) continue;
      add_scaled(ring(), out, action(a, b), ring().mul(x[a], m[b]));
    }
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> LieModule::action_identity_violations() const {
  std::vector<std::array<std::size_t, 3>> bad;
  const auto& L = *algebra_;
  const CoeffRing& R = ring();
  for (std::size_t x = 0; x < L.dim(); ++x) {
    for (std::size_t y = x + 1; y < L.dim(); ++y) {
      for (std::size_t m = 0; m < dim(); ++m) {
        Vec lhs(dim(), 0);
        auto xy = L.bracket(x, y);
        for (std::size_t k = 0; k < L.dim(); ++k)
          if (xy[k] != 0) add_scaled(R, lhs, action(k, m), xy[k]);
        Vec ym(action(y, m).begin(), action(y, m).end());
        Vec xm(action(x, m).begin(), action(x, m).end());
        Vec rhs(dim(), 0);
        for (std::size_t k = 0; k < dim(); ++k) {
          if (ym[k] != 0) add_scaled(R, rhs, action(x, k), ym[k]);
          if (xm[k] != 0) add_scaled(R, rhs, action(y, k), R.neg(xm[k]));
        }
        if (lhs != rhs) bad.push_back({x, y, m});
      }
    }
  }
  return bad;
}

LieModule adjoint_module(const LiePtr& l) {
  std::vector<int> degrees;
  for (std::size_t i = 0; i < l->dim(); ++i) degrees.push_back(l->degree(i));
  LieModule m(l, degrees, l->labels());
  for (std::size_t x = 0; x < l->dim(); ++x)
    for (std::size_t y = 0; y < l->dim(); ++y) m.set_action(x, y, l->bracket(x, y));
  return m;
}

// ---------------------------------------------------------------------------
// Free Lie algebras via Lyndon words

namespace {

using Word = std::vector<int>;
using Poly = std::map<Word, Scalar>;

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (!(w < suffix)) return false;
  }
  return !w.empty();
}

void poly_add(const CoeffRing& R, Poly& p, const Word& w, Scalar c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, 0);
  it->second = R.add(it->second, c);
  if (it->second == 0) p.erase(it);
}

Poly poly_commutator(const CoeffRing& R, const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      Word vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      Scalar c = R.mul(cu, cv);
      poly_add(R, out, uv, c);
      poly_add(R, out, vu, R.neg(c));
    }
  }
  return out;
}

}  // namespace

GradedLieAlgebra free_lie_truncated(const CoeffRing& ring, const std::vector<FreeGenerator>& generators,
                                    std::size_t d) {
  if (d == 0) throw InvalidArgument("free_lie_truncated: truncation degree must be at least 1");
  for (const auto& g : generators) {
    if (g.degree <= 0)
      throw InvalidArgument("free_lie_truncated: generator '" + g.label + "' has non-positive degree " +
                            std::to_string(g.degree));
    if (static_cast<std::size_t>(g.degree) > d)
      throw InvalidArgument("free_lie_truncated: generator '" + g.label + "' has degree above the truncation");
  }
  const int k = static_cast<int>(generators.size());
  auto weight = [&](const Word& w) {
    int s = 0;
    for (int c : w) s += generators[static_cast<std::size_t>(c)].degree;
    return s;
  };

  // All Lyndon words of weight <= d.
  std::vector<Word> lyndon;
  std::vector<Word> stack{Word{}};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (!w.empty() && is_lyndon(w)) lyndon.push_back(w);
    for (int c = 0; c < k; ++c) {
      Word next = w;
      next.push_back(c);
      if (weight(next) <= static_cast<int>(d)) stack.push_back(std::move(next));
    }
  }
  std::sort(lyndon.begin(), lyndon.end(), [&](const Word& a, const Word& b) {
    int wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });

  std::map<Word, std::size_t> position;
  for (std::size_t i = 0; i < lyndon.size(); ++i) position[lyndon[i]] = i;

  // Standard bracketing: w = u v with v the longest proper Lyndon suffix.
  std::vector<Poly> expansion(lyndon.size());
  std::vector<std::string> names(lyndon.size());
  std::vector<std::pair<std::size_t, std::size_t>> factors(lyndon.size(), {0, 0});
  for (std::size_t i = 0; i < lyndon.size(); ++i) {
    const Word& w = lyndon[i];
    if (w.size() == 1) {
      expansion[i][w] = 1;
      names[i] = generators[static_cast<std::size_t>(w[0])].label;
      continue;
    }
    for (std::size_t s = 1; s < w.size(); ++s) {
      Word v(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
      if (is_lyndon(v)) {
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        std::size_t iu = position.at(u), iv = position.at(v);
        factors[i] = {iu, iv};
        expansion[i] = poly_commutator(ring, expansion[iu], expansion[iv]);
        names[i] = "[" + names[iu] + "," + names[iv] + "]";
        break;
      }
    }
  }

  std::vector<std::size_t> ranks(d, 0);
  std::vector<std::vector<std::string>> labels(d);
  for (std::size_t i = 0; i < lyndon.size(); ++i) {
    auto deg = static_cast<std::size_t>(weight(lyndon[i]));
    ++ranks[deg - 1];
    labels[deg - 1].push_back(names[i]);
  }
  GradedLieAlgebra L(ring, ranks, labels);

  // The smallest word in the support of a standard bracketing is its own
  // Lyndon word with coefficient 1, so rewriting is triangular.
  auto rewrite = [&](Poly p) {
    Element out(lyndon.size(), 0);
    while (!p.empty()) {
      auto [w, c] = *p.begin();
      auto it = position.find(w);
      if (it == position.end()) throw InternalError("free_lie_truncated: non-Lyndon leading word");
      out[it->second] = ring.add(out[it->second], c);
      for (const auto& [u, cu] : expansion[it->second]) poly_add(ring, p, u, ring.neg(ring.mul(c, cu)));
    }
    return out;
  };

  for (std::size_t a = 0; a < lyndon.size(); ++a) {
    for (std::size_t b = a + 1; b < lyndon.size(); ++b) {
      if (weight(lyndon[a]) + weight(lyndon[b]) > static_cast<int>(d)) continue;
      Element v = rewrite(poly_commutator(ring, expansion[a], expansion[b]));
      L.set_antisymmetric(a, b, v);
    }
  }
  return L;
}

// ---------------------------------------------------------------------------
// Quotients and sums

Quotient central_quotient(const LiePtr& l, std::size_t n) {
  const std::size_t d = l->truncation();
  if (n < 1 || n > d + 1)
    throw InvalidArgument("central_quotient: n = " + std::to_string(n) + " outside [1, " + std::to_string(d + 1) + "]");
  std::vector<std::size_t> ranks(l->ranks().begin(), l->ranks().begin() + static_cast<std::ptrdiff_t>(n - 1));
  std::vector<std::vector<std::string>> labels(n - 1);
  for (std::size_t i = 0; i < l->dim(); ++i) {
    auto deg = static_cast<std::size_t>(l->degree(i));
    if (deg < n) labels[deg - 1].push_back(l->label(i));
  }
  GradedLieAlgebra q(l->ring(), ranks, labels);
  const std::size_t m = q.dim();  // the first m basis elements of l survive
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto v = l->bracket(a, b);
      Element w(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
      q.set_bracket(a, b, w);
    }
  }
  LiePtr padded = share(q.padded(d));
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    const int deg = static_cast<int>(i + 1);
    blocks.push_back(i + 1 < n ? Mat::identity(l->ring(), l->rank(deg)) : Mat(l->ring(), l->rank(deg), 0));
  }
  GradedMorphism proj(l, padded, std::move(blocks));
  return Quotient{std::move(q), std::move(proj)};
}

Quotient quotient_by_ideal(const LiePtr& l, const std::vector<Element>& generators) {
  const CoeffRing& R = l->ring();
  if (!R.is_field()) throw InvalidArgument("quotient_by_ideal: field coefficients required");
  const std::size_t d = l->truncation();
  // Per-degree spans in local coordinates.
  std::vector<Mat> span;
  for (std::size_t i = 0; i < d; ++i) span.emplace_back(R, 0, l->ranks()[i]);
  auto local = [&](std::span<const Scalar> v, int deg) {
    Vec out(l->rank(deg));
    std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(l->offset(deg)), out.size(), out.begin());
    return out;
  };
  for (const auto& g : generators) {
    if (g.size() != l->dim()) throw InvalidArgument("quotient_by_ideal: generator length mismatch");
    for (std::size_t i = 0; i < d; ++i) {
      Vec part = local(g, static_cast<int>(i + 1));
      if (!is_zero_vec(part)) span[i].append_row(part);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const int deg = static_cast<int>(i + 1);
    span[i] = howell_form(span[i]);
    for (std::size_t r = 0; r < span[i].rows(); ++r) {
      Element v(l->dim(), 0);
      std::copy(span[i].row(r).begin(), span[i].row(r).end(), v.begin() + static_cast<std::ptrdiff_t>(l->offset(deg)));
      for (std::size_t b = 0; b < l->dim(); ++b) {
        const int td = deg + l->degree(b);
        if (td > static_cast<int>(d)) continue;
        Element w = l->bracket(v, l->basis_element(b));
        Vec part = local(w, td);
        if (!is_zero_vec(part)) span[static_cast<std::size_t>(td) - 1].append_row(part);
      }
    }
  }
  // Keep the basis vectors at non-pivot columns; project by reducing.
  std::vector<std::size_t> ranks(d, 0);
  std::vector<std::vector<std::string>> labels(d);
  std::vector<std::vector<std::size_t>> kept(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<bool> pivot(l->ranks()[i], false);
    for (std::size_t r = 0; r < span[i].rows(); ++r) {
      auto row = span[i].row(r);
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) {
          pivot[j] = true;
          break;
        }
    }
    for (std::size_t j = 0; j < pivot.size(); ++j) {
      if (!pivot[j]) {
        kept[i].push_back(j);
        labels[i].push_back(l->label(l->offset(static_cast<int>(i + 1)) + j));
      }
    }
    ranks[i] = kept[i].size();
  }
  GradedLieAlgebra q(R, ranks, labels);
  auto project_local = [&](Vec v, std::size_t i) {
    for (std::size_t r = 0; r < span[i].rows(); ++r) {
      auto row = span[i].row(r);
      std::size_t p = 0;
      while (row[p] == 0) ++p;
      if (v[p] != 0) axpy(R, v, row, R.neg(v[p]));
    }
    Vec out;
    for (auto j : kept[i]) out.push_back(v[j]);
    return out;
  };
  auto project = [&](std::span<const Scalar> v) {
    Element out(q.dim(), 0);
    for (std::size_t i = 0; i < d; ++i) {
      const int deg = static_cast<int>(i + 1);
      Vec pl = project_local(local(v, deg), i);
      std::copy(pl.begin(), pl.end(), out.begin() + static_cast<std::ptrdiff_t>(q.offset(deg)));
    }
    return out;
  };
  std::vector<std::size_t> lift;  // quotient basis -> l basis
  for (std::size_t i = 0; i < d; ++i)
    for (auto j : kept[i]) lift.push_back(l->offset(static_cast<int>(i + 1)) + j);
  for (std::size_t a = 0; a < q.dim(); ++a)
    for (std::size_t b = 0; b < q.dim(); ++b) q.set_bracket(a, b, project(l->bracket(lift[a], lift[b])));

  LiePtr qp = share(q);
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    const int deg = static_cast<int>(i + 1);
    Mat blk(R, l->rank(deg), q.rank(deg));
    for (std::size_t j = 0; j < l->rank(deg); ++j) {
      Vec e(l->rank(deg), 0);
      e[j] = 1;
      Vec pl = project_local(e, i);
      std::copy(pl.begin(), pl.end(), blk.row(j).begin());
    }
    blocks.push_back(std::move(blk));
  }
  GradedMorphism proj(l, qp, std::move(blocks));
  return Quotient{q, std::move(proj)};
}

GradedLieAlgebra direct_sum(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
  if (!(a.ring() == b.ring()) || a.truncation() != b.truncation())
    throw InvalidArgument("direct_sum: ring or truncation mismatch");
  const std::size_t d = a.truncation();
  std::vector<std::size_t> ranks(d);
  std::vector<std::vector<std::string>> labels(d);
  std::vector<std::size_t> from_a(a.dim()), from_b(b.dim());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const int deg = static_cast<int>(i + 1);
    ranks[i] = a.rank(deg) + b.rank(deg);
    for (std::size_t j = 0; j < a.rank(deg); ++j) {
      from_a[a.offset(deg) + j] = pos++;
      labels[i].push_back(a.label(a.offset(deg) + j));
    }
    for (std::size_t j = 0; j < b.rank(deg); ++j) {
      from_b[b.offset(deg) + j] = pos++;
      labels[i].push_back(b.label(b.offset(deg) + j));
    }
  }
  GradedLieAlgebra s(a.ring(), ranks, labels);
  auto embed = [&](const GradedLieAlgebra& src, const std::vector<std::size_t>& map) {
    for (std::size_t x = 0; x < src.dim(); ++x) {
      for (std::size_t y = 0; y < src.dim(); ++y) {
        auto v = src.bracket(x, y);
        Element w(s.dim(), 0);
        for (std::size_t k = 0; k < src.dim(); ++k) w[map[k]] = v[k];
        s.set_bracket(map[x], map[y], w);
      }
    }
  };
  embed(a, from_a);
  embed(b, from_b);
  return s;
}

// ---------------------------------------------------------------------------
// GeneratorSystem

GeneratorSystem::GeneratorSystem(LiePtr l) : algebra_(std::move(l)) {
  const auto& L = *algebra_;
  const CoeffRing& R = L.ring();
  if (!R.is_field()) throw InvalidArgument("GeneratorSystem: field coefficients required");
  for (std::size_t i = 0; i < L.truncation(); ++i) {
    const int deg = static_cast<int>(i + 1);
    const std::size_t n = L.rank(deg);
    const std::size_t off = L.offset(deg);
    Mat span(R, 0, n);
    std::vector<Slot> brackets;
    Mat bracket_rows(R, 0, n);
    for (std::size_t a = 0; a < L.dim(); ++a) {
      for (std::size_t b = a + 1; b < L.dim(); ++b) {
        if (L.degree(a) + L.degree(b) != deg) continue;
        auto v = L.bracket(a, b);
        Vec local(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + n));
        if (is_zero_vec(local) || in_row_span(span, local)) continue;
        brackets.push_back({false, a, b});
        bracket_rows.append_row(local);
        span = howell_form(bracket_rows);
      }
    }
    std::vector<bool> pivot(n, false);
    for (std::size_t r = 0; r < span.rows(); ++r) {
      auto row = span.row(r);
      for (std::size_t j = 0; j < n; ++j)
        if (row[j] != 0) {
          pivot[j] = true;
          break;
        }
    }
    std::vector<Slot> slots;
    Mat t(R, 0, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (pivot[j]) continue;
      generators_.push_back(off + j);
      slots.push_back({true, off + j, 0});
      Vec e(n, 0);
      e[j] = 1;
      t.append_row(e);
    }
    for (std::size_t s = 0; s < brackets.size(); ++s) {
      slots.push_back(brackets[s]);
      t.append_row(bracket_rows.row(s));
    }
    LeftSolver solver(t);
    Mat change(R, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, 0);
      e[j] = 1;
      auto x = solver.solve(e);
      if (!x) throw InternalError("GeneratorSystem: adapted basis is not spanning");
      std::copy(x->begin(), x->end(), change.row(j).begin());
    }
    slots_.push_back(std::move(slots));
    change_.push_back(std::move(change));
  }
}

std::vector<Vec> GeneratorSystem::extend(const std::vector<Vec>& generator_images, const BracketFn& bracket,
                                         const CoeffRing& target_ring) const {
  if (generator_images.size() != generators_.size())
    throw InvalidArgument("GeneratorSystem::extend: expected " + std::to_string(generators_.size()) + " images");
  const auto& L = *algebra_;
  std::vector<Vec> img(L.dim());
  std::size_t next_gen = 0;
  for (std::size_t i = 0; i < L.truncation(); ++i) {
    const int deg = static_cast<int>(i + 1);
    std::vector<Vec> slot_img;
    for (const auto& s : slots_[i]) {
      if (s.is_generator) slot_img.push_back(generator_images[next_gen++]);
      else slot_img.push_back(bracket(img[s.a], img[s.b]));
    }
    for (std::size_t j = 0; j < L.rank(deg); ++j) {
      Vec v;
      for (std::size_t t = 0; t < slot_img.size(); ++t) {
        Scalar c = change_[i](j, t);
        if (c == 0) continue;
        if (v.empty()) v.assign(slot_img[t].size(), 0);
        axpy(target_ring, v, slot_img[t], c);
      }
      if (v.empty() && !generator_images.empty()) v.assign(generator_images.front().size(), 0);
      img[L.offset(deg) + j] = std::move(v);
    }
  }
  return img;
}

std::optional<std::vector<Vec>> GeneratorSystem::morphism_from(const std::vector<Vec>& generator_images,
                                                               const BracketFn& bracket,
                                                               const CoeffRing& target_ring) const {
  auto img = extend(generator_images, bracket, target_ring);
  const auto& L = *algebra_;
  std::size_t width = 0;
  for (const auto& v : img)
    if (!v.empty()) width = v.size();
  for (auto& v : img)
    if (v.empty()) v.assign(width, 0);
  for (std::size_t a = 0; a < L.dim(); ++a) {
    for (std::size_t b = a + 1; b < L.dim(); ++b) {
      auto c = L.bracket(a, b);
      Vec lhs(width, 0);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (c[k] != 0) axpy(target_ring, lhs, img[k], c[k]);
      if (lhs != bracket(img[a], img[b])) return std::nullopt;
    }
  }
  return img;
}

}  // namespace lieforge

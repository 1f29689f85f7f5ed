#include "lieforge/harrison.hpp"

#include <algorithm>

#include "lieforge/error.hpp"

namespace lieforge {

ArtinModule::ArtinModule(ArtinPtr algebra, std::size_t dim, std::vector<Mat> actions)
    : algebra_(std::move(algebra)), dim_(dim), actions_(std::move(actions)) {
  const auto& A = *algebra_;
  if (actions_.size() != A.rank()) throw InvalidArgument("module needs one action matrix per basis element");
  for (const auto& m : actions_)
    if (m.rows() != dim_ || m.cols() != dim_ || !(m.ring() == A.ring()))
      throw InvalidArgument("module action matrix has the wrong shape or ring");
  if (!(actions_[A.unit()] == Mat::identity(A.ring(), dim_))) throw InvalidArgument("unit does not act as identity");
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < A.rank(); ++j) {
      Mat expect(A.ring(), dim_, dim_);
      const auto& p = A.product(i, j);
      for (std::size_t k = 0; k < A.rank(); ++k)
        if (p[k] != 0)
          for (std::size_t r = 0; r < dim_; ++r) axpy(A.ring(), expect.row(r), actions_[k].row(r), p[k]);
      if (!(actions_[j] * actions_[i] == expect))
        throw InvalidArgument("module action is not multiplicative at (" + A.label(i) + "," + A.label(j) + ")");
    }
}

ArtinModule ArtinModule::trivial(ArtinPtr algebra, std::size_t dim) {
  std::vector<Mat> actions;
  for (std::size_t i = 0; i < algebra->rank(); ++i)
    actions.push_back(i == algebra->unit() ? Mat::identity(algebra->ring(), dim) : Mat(algebra->ring(), dim, dim));
  return ArtinModule(algebra, dim, std::move(actions));
}

Vec ArtinModule::act(std::span<const Scalar> a, std::span<const Scalar> v) const {
  const auto& ring = algebra_->ring();
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Vec w = vec_mat(v, actions_[i]);
    axpy(ring, out, w, a[i]);
  }
  return out;
}

namespace {

// Closed form of the lexicographic position of (i, j), i <= j.
std::size_t pair_pos(std::size_t r, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * r - i * (i + 1) / 2 + j;
}

struct Evaluator {
  const ArtinModule& module;
  std::size_t r;
  std::size_t dm;

  Vec linear(std::span<const Scalar> psi, std::span<const Scalar> a) const {
    const auto& ring = module.algebra()->ring();
    Vec out(dm, 0);
    for (std::size_t i = 0; i < r; ++i)
      if (a[i] != 0) axpy(ring, out, psi.subspan(i * dm, dm), a[i]);
    return out;
  }
  Vec bilinear(std::span<const Scalar> f, std::span<const Scalar> a, std::span<const Scalar> b) const {
    const auto& ring = module.algebra()->ring();
    Vec out(dm, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (b[j] == 0) continue;
        axpy(ring, out, f.subspan(pair_pos(r, i, j) * dm, dm), ring.mul(a[i], b[j]));
      }
    }
    return out;
  }
};

}  // namespace

std::size_t HarrisonComplex::pair_index(std::size_t i, std::size_t j) const { return pair_pos(rank, i, j); }

HarrisonComplex harrison_complex(const ArtinModule& module) {
  const auto& A = *module.algebra();
  const auto& ring = A.ring();
  HarrisonComplex c;
  c.rank = A.rank();
  c.module_dim = module.dim();
  const std::size_t r = c.rank, dm = c.module_dim;
  const std::size_t n0 = r * dm, n1 = c.pair_count() * dm, n2 = r * r * r * dm;
  Evaluator ev{module, r, dm};
  c.d1 = Mat(ring, n0, n1);
  for (std::size_t row = 0; row < n0; ++row) {
    Vec psi(n0, 0);
    psi[row] = 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        Vec ei = A.basis_element(i), ej = A.basis_element(j);
        Vec v = module.act(ei, ev.linear(psi, ej));
        axpy(ring, v, ev.linear(psi, A.product(i, j)), ring.neg(1));
        axpy(ring, v, module.act(ej, ev.linear(psi, ei)), 1);
        for (std::size_t k = 0; k < dm; ++k) c.d1.set(row, pair_pos(r, i, j) * dm + k, v[k]);
      }
  }
  c.d2 = Mat(ring, n1, n2);
  for (std::size_t row = 0; row < n1; ++row) {
    Vec f(n1, 0);
    f[row] = 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t l = 0; l < r; ++l) {
          Vec ei = A.basis_element(i), ej = A.basis_element(j), el = A.basis_element(l);
          Vec v = module.act(ei, ev.bilinear(f, ej, el));
          axpy(ring, v, ev.bilinear(f, A.product(i, j), el), ring.neg(1));
          axpy(ring, v, ev.bilinear(f, ei, A.product(j, l)), 1);
          axpy(ring, v, module.act(el, ev.bilinear(f, ei, ej)), ring.neg(1));
          for (std::size_t k = 0; k < dm; ++k) c.d2.set(row, ((i * r + j) * r + l) * dm + k, v[k]);
        }
  }
  return c;
}

Subquotient harrison_cohomology(const ArtinModule& module, int i) {
  auto c = harrison_complex(module);
  if (i == 1) return homology(Mat(c.d1.ring(), 0, c.d1.rows()), c.d1);
  if (i == 2) return homology(c.d1, c.d2);
  throw InvalidArgument("harrison cohomology is available for i = 1, 2 (got " + std::to_string(i) + ")");
}

BilinearFamily cochain_to_family(const HarrisonComplex& complex, std::span<const Scalar> cochain) {
  const std::size_t r = complex.rank, dm = complex.module_dim;
  if (cochain.size() != complex.pair_count() * dm) throw InvalidArgument("2-cochain has the wrong length");
  const CoeffRing& ring = complex.d2.ring();
  BilinearFamily out(dm, Mat(ring, r, r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < dm; ++k) out[k].set(i, j, cochain[pair_pos(r, i, j) * dm + k]);
  return out;
}

BilinearFamily normalize_cocycle(const ArtinLocalAlgebra& a, const BilinearFamily& f) {
  // psi(1) = c, psi(m) = 0; with trivial coefficients (d1 psi)(x, y) =
  // res(x) psi(y) - psi(xy) + res(y) psi(x).
  const auto& ring = a.ring();
  const std::size_t u = a.unit();
  BilinearFamily out = f;
  for (std::size_t s = 0; s < f.size(); ++s) {
    const Scalar c = f[s](u, u);
    if (c == 0) continue;
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) {
        Scalar d = 0;
        if (j == u && i == u) d = ring.add(d, c);  // res(x) psi(y)
        d = ring.sub(d, ring.mul(a.product(i, j)[u], c));
        if (i == u && j == u) d = ring.add(d, c);  // res(y) psi(x)
        out[s].set(i, j, ring.sub(f[s](i, j), d));
      }
  }
  return out;
}

AlgExtension extension_from_cocycles(const ArtinPtr& a, const BilinearFamily& f) {
  const auto& A = *a;
  const auto& ring = A.ring();
  const std::size_t r = A.rank(), e = f.size(), n = r + e;
  for (const auto& m : f)
    if (m.rows() != r || m.cols() != r) throw InvalidArgument("cocycle table has the wrong shape");
  std::vector<Vec> table(n * n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec& v = table[i * n + j];
      if (i < r && j < r) {
        std::copy(A.product(i, j).begin(), A.product(i, j).end(), v.begin());
        for (std::size_t s = 0; s < e; ++s) v[r + s] = f[s](i, j);
      } else if (i < r) {
        v[j] = A.basis_element(i)[A.unit()];
      } else if (j < r) {
        v[i] = A.basis_element(j)[A.unit()];
      }
    }
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < n; ++i)
    if (i != A.unit()) maximal.push_back(i);
  std::vector<std::string> labels = A.labels();
  for (std::size_t s = 0; s < e; ++s) labels.push_back("u" + std::to_string(s + 1));
  ArtinPtr c;
  try {
    c = share(ArtinLocalAlgebra(ring, n, A.unit(), std::move(table), std::move(maximal), std::move(labels)));
  } catch (const InvalidArgument& err) {
    throw InvalidArgument(std::string("cocycles do not define an extension: ") + err.what());
  }
  Mat proj(ring, n, r);
  for (std::size_t i = 0; i < r; ++i) proj.set(i, i, 1);
  Mat emb(ring, e, n);
  for (std::size_t s = 0; s < e; ++s) emb.set(s, r + s, 1);
  AlgExtension ext{ArtinMorphism(c, a, proj), emb};
  if (auto d = ext.defect(true)) throw InternalError("extension_from_cocycles: " + *d);
  return ext;
}

UniversalExtension universal_extension(const ArtinPtr& a) {
  auto module = ArtinModule::trivial(a, 1);
  auto complex = harrison_complex(module);
  auto h2 = homology(complex.d1, complex.d2);
  BilinearFamily cocycles;
  const auto& reps = h2.representatives();
  for (std::size_t s = 0; s < reps.rows(); ++s) {
    auto fam = normalize_cocycle(*a, cochain_to_family(complex, reps.row(s)));
    cocycles.push_back(fam[0]);
  }
  return UniversalExtension{extension_from_cocycles(a, cocycles), cocycles};
}

}  // namespace lieforge

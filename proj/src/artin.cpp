#include "lieforge/artin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lieforge {

namespace {

std::string monomial_name(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string term(Scalar c, const std::string& name) {
  if (name == "1") return std::to_string(c);
  return c == 1 ? name : std::to_string(c) + "*" + name;
}

}  // namespace

ArtinLocalAlgebra::ArtinLocalAlgebra(CoeffRing ring, std::size_t rank, std::size_t unit, std::vector<Vec> table,
                                     std::vector<std::size_t> maximal, std::vector<std::string> labels)
    : ring_(ring),
      rank_(rank),
      unit_(unit),
      table_(std::move(table)),
      maximal_(std::move(maximal)),
      labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < rank_; ++i) labels_.push_back(i == unit_ ? "1" : "e" + std::to_string(i));
  }
  check();
}

void ArtinLocalAlgebra::check() const {
  if (!ring_.is_field()) throw InvalidArgument("Artin algebras must be defined over F_l (got " + ring_.name() + ")");
  if (rank_ == 0) throw InvalidArgument("Artin algebra of rank 0");
  if (unit_ >= rank_) throw InvalidArgument("unit index out of range");
  if (table_.size() != rank_ * rank_)
    throw InvalidArgument("multiplication table must have rank^2 = " + std::to_string(rank_ * rank_) + " entries");
  if (labels_.size() != rank_) throw InvalidArgument("Artin algebra label count mismatch");
  for (const auto& v : table_) {
    if (v.size() != rank_) throw InvalidArgument("multiplication table entry of wrong length");
    for (auto x : v)
      if (x >= ring_.modulus()) throw InvalidArgument("multiplication table entry not reduced");
  }
  std::vector<std::size_t> expect;
  for (std::size_t i = 0; i < rank_; ++i)
    if (i != unit_) expect.push_back(i);
  std::vector<std::size_t> got = maximal_;
  std::sort(got.begin(), got.end());
  if (got != expect) throw InvalidArgument("maximal ideal must be spanned by exactly the non-unit basis elements");
  for (std::size_t i = 0; i < rank_; ++i) {
    if (product(unit_, i) != basis_element(i) || product(i, unit_) != basis_element(i))
      throw InvalidArgument("basis element " + std::to_string(unit_) + " does not act as the unit on " + label(i));
    for (std::size_t j = 0; j < rank_; ++j) {
      if (product(i, j) != product(j, i))
        throw InvalidArgument("multiplication is not commutative at (" + label(i) + "," + label(j) + ")");
      if (i != unit_ && product(i, j)[unit_] != 0)
        throw InvalidArgument("maximal ideal is not an ideal: " + label(i) + "*" + label(j) + " has a unit component");
      for (std::size_t k = 0; k < rank_; ++k) {
        if (multiply(product(i, j), basis_element(k)) != multiply(basis_element(i), product(j, k)))
          throw InvalidArgument("multiplication is not associative at (" + label(i) + "," + label(j) + "," + label(k) +
                                ")");
      }
    }
  }
  if (maximal_power(rank_).rows() != 0) throw InvalidArgument("maximal ideal is not nilpotent");
}

ArtinLocalAlgebra ArtinLocalAlgebra::residue_field(std::uint32_t l) {
  return ArtinLocalAlgebra(CoeffRing(l), 1, 0, {Vec{1}}, {}, {"1"});
}

ArtinLocalAlgebra ArtinLocalAlgebra::truncated_polynomial(std::uint32_t l, std::size_t n, const std::string& var) {
  if (n == 0) throw InvalidArgument("truncated_polynomial: n must be at least 1");
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n, 0);
      if (i + j < n) v[i + j] = 1;
      table.push_back(v);
    }
  std::vector<std::size_t> maximal;
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) {
    maximal.push_back(i);
    labels.push_back(i == 1 ? var : var + "^" + std::to_string(i));
  }
  return ArtinLocalAlgebra(CoeffRing(l), n, 0, table, maximal, labels);
}

ArtinLocalAlgebra ArtinLocalAlgebra::square_zero(std::uint32_t l, std::size_t e, const std::string& var) {
  const std::size_t n = e + 1;
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n, 0);
      if (i == 0) v[j] = 1;
      else if (j == 0) v[i] = 1;
      table.push_back(v);
    }
  std::vector<std::size_t> maximal;
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) {
    maximal.push_back(i);
    labels.push_back(e == 1 ? var : var + std::to_string(i));
  }
  return ArtinLocalAlgebra(CoeffRing(l), n, 0, table, maximal, labels);
}

ArtinLocalAlgebra ArtinLocalAlgebra::monomial_quotient(std::uint32_t l, const std::vector<std::string>& vars,
                                                       const std::vector<std::vector<int>>& monomials) {
  const std::size_t nv = vars.size();
  std::vector<int> bound(nv, -1);
  for (const auto& m : monomials) {
    if (m.size() != nv) throw InvalidArgument("monomial_quotient: exponent vector length mismatch");
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (m[i] > 0) {
        ++nonzero;
        where = i;
      }
    if (nonzero == 0) throw InvalidArgument("monomial_quotient: the unit monomial generates the whole ring");
    if (nonzero == 1 && (bound[where] < 0 || m[where] < bound[where])) bound[where] = m[where];
  }
  for (std::size_t i = 0; i < nv; ++i)
    if (bound[i] < 0) throw InvalidArgument("monomial_quotient: no pure power of " + vars[i] + " in the ideal");
  auto in_ideal = [&](const std::vector<int>& e) {
    for (const auto& m : monomials) {
      bool divides = true;
      for (std::size_t i = 0; i < nv; ++i) divides = divides && m[i] <= e[i];
      if (divides) return true;
    }
    return false;
  };
  std::vector<std::vector<int>> standard;
  std::vector<int> e(nv, 0);
  while (true) {
    if (!in_ideal(e)) standard.push_back(e);
    std::size_t i = 0;
    while (i < nv && ++e[i] >= bound[i]) e[i++] = 0;
    if (i == nv) break;
  }
  std::sort(standard.begin(), standard.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    return da != db ? da < db : a > b;
  });
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t i = 0; i < standard.size(); ++i) pos[standard[i]] = i;
  const std::size_t n = standard.size();
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> s(nv);
      for (std::size_t k = 0; k < nv; ++k) s[k] = standard[i][k] + standard[j][k];
      Vec v(n, 0);
      auto it = pos.find(s);
      if (it != pos.end()) v[it->second] = 1;
      table.push_back(v);
    }
  std::vector<std::size_t> maximal;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) maximal.push_back(i);
    labels.push_back(monomial_name(vars, standard[i]));
  }
  return ArtinLocalAlgebra(CoeffRing(l), n, 0, table, maximal, labels);
}

Vec ArtinLocalAlgebra::one() const { return basis_element(unit_); }

Vec ArtinLocalAlgebra::basis_element(std::size_t i) const {
  Vec v(rank_, 0);
  v.at(i) = 1;
  return v;
}

Vec ArtinLocalAlgebra::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  Vec out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      axpy(ring_, out, product(i, j), ring_.mul(a[i], b[j]));
    }
  }
  return out;
}

Mat ArtinLocalAlgebra::maximal_power(std::size_t k) const {
  if (k == 0) return Mat::identity(ring_, rank_);
  Mat m(ring_, 0, rank_);
  for (auto i : maximal_) m.append_row(basis_element(i));
  Mat power = howell_form(m);
  for (std::size_t step = 1; step < k && power.rows() > 0; ++step) {
    Mat next(ring_, 0, rank_);
    for (std::size_t r = 0; r < power.rows(); ++r)
      for (auto i : maximal_) next.append_row(multiply(power.row(r), basis_element(i)));
    power = howell_form(next);
  }
  return power;
}

std::size_t ArtinLocalAlgebra::nilpotency_index() const {
  std::size_t k = 1;
  while (maximal_power(k).rows() != 0) ++k;
  return k;
}

std::size_t ArtinLocalAlgebra::cotangent_dimension() const {
  return maximal_power(1).rows() - maximal_power(2).rows();
}

std::string ArtinLocalAlgebra::format(std::span<const Scalar> a) const {
  std::string out;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += term(a[i], labels_[i]);
  }
  return out.empty() ? "0" : out;
}

std::string ArtinLocalAlgebra::presentation(const std::string& var) const {
  const std::string field = ring_.name();
  // Generators: maximal basis elements independent modulo m^2.
  Mat acc = maximal_power(2);
  std::vector<Vec> gens;
  for (auto i : maximal_) {
    Vec e = basis_element(i);
    if (in_row_span(acc, e)) continue;
    gens.push_back(e);
    Mat grown = acc;
    grown.append_row(e);
    acc = howell_form(grown);
  }
  const std::size_t h = gens.size();
  if (h == 0) return field;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < h; ++i) vars.push_back(h == 1 ? var : var + std::to_string(i + 1));

  // Monomials of degree 1..N, ordered by degree then lexicographically descending.
  const int top = static_cast<int>(nilpotency_index());
  std::vector<std::vector<int>> monos;
  std::vector<int> e(h, 0);
  while (true) {
    std::size_t i = 0;
    while (i < h && ++e[i] > top) e[i++] = 0;
    if (i == h) break;
    int deg = 0;
    for (int x : e) deg += x;
    if (deg <= top) monos.push_back(e);
  }
  auto degree = [](const std::vector<int>& m) {
    int d = 0;
    for (int x : m) d += x;
    return d;
  };
  std::sort(monos.begin(), monos.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    return degree(a) != degree(b) ? degree(a) < degree(b) : a > b;
  });
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
  Mat images(ring_, 0, rank_);
  for (const auto& m : monos) {
    Vec v = one();
    for (std::size_t i = 0; i < h; ++i)
      for (int p = 0; p < m[i]; ++p) v = multiply(v, gens[i]);
    images.append_row(v);
  }
  Mat rel = kernel_basis(images);
  // m * J inside the truncated polynomial space.
  Mat mj(ring_, 0, monos.size());
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    for (std::size_t g = 0; g < h; ++g) {
      Vec shifted(monos.size(), 0);
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (rel(r, c) == 0) continue;
        auto m = monos[c];
        ++m[g];
        auto it = pos.find(m);
        if (it != pos.end()) shifted[it->second] = ring_.add(shifted[it->second], rel(r, c));
      }
      mj.append_row(shifted);
    }
  }
  acc = howell_form(mj);
  // Prefer low-degree relations: walk kernel rows ordered by their lowest degree.
  std::vector<std::size_t> order(rel.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto low = [&](std::size_t r) {
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (rel(r, c) != 0) return degree(monos[c]);
    return 0;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return low(a) < low(b); });
  std::vector<std::string> relations;
  for (auto r : order) {
    auto row = rel.row(r);
    if (in_row_span(acc, row)) continue;
    Mat grown = acc;
    grown.append_row(row);
    acc = howell_form(grown);
    std::string poly;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (row[c] == 0) continue;
      if (!poly.empty()) poly += " + ";
      poly += term(row[c], monomial_name(vars, monos[c]));
    }
    relations.push_back(poly);
  }
  std::string out = field + "[";
  for (std::size_t i = 0; i < h; ++i) out += (i ? "," : "") + vars[i];
  out += "]/(";
  for (std::size_t i = 0; i < relations.size(); ++i) out += (i ? ", " : "") + relations[i];
  return out + ")";
}

// ---------------------------------------------------------------------------
// Morphisms and extensions

std::optional<std::string> artin_morphism_defect(const ArtinLocalAlgebra& a, const ArtinLocalAlgebra& b,
                                                 const Mat& matrix) {
  if (!(a.ring() == b.ring())) return "rings differ";
  if (matrix.rows() != a.rank() || matrix.cols() != b.rank()) return "matrix has the wrong shape";
  if (vec_mat(a.one(), matrix) != b.one()) return "not unital";
  for (auto i : a.maximal())
    if (b.residue(matrix.row(i)) != 0) return "not local: " + a.label(i) + " maps outside the maximal ideal";
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i; j < a.rank(); ++j)
      if (vec_mat(a.product(i, j), matrix) != b.multiply(matrix.row(i), matrix.row(j)))
        return "not multiplicative at (" + a.label(i) + "," + a.label(j) + ")";
  return std::nullopt;
}

ArtinMorphism::ArtinMorphism(ArtinPtr source, ArtinPtr target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (auto d = artin_morphism_defect(*source_, *target_, matrix_)) throw InvalidArgument("algebra morphism: " + *d);
}

ArtinMorphism ArtinMorphism::identity(ArtinPtr a) {
  Mat id = Mat::identity(a->ring(), a->rank());
  return ArtinMorphism(a, a, id);
}

ArtinMorphism ArtinMorphism::to_residue_field(ArtinPtr a) {
  auto k = share(ArtinLocalAlgebra::residue_field(a->ring().prime()));
  Mat m(a->ring(), a->rank(), 1);
  m.set(a->unit(), 0, 1);
  return ArtinMorphism(a, k, m);
}

ArtinMorphism ArtinMorphism::then(const ArtinMorphism& next) const {
  if (!(*target_ == *next.source_)) throw InvalidArgument("algebra morphism composition: mismatch");
  return ArtinMorphism(source_, next.target_, matrix_ * next.matrix_);
}

bool ArtinMorphism::is_surjective() const { return howell_form(matrix_).rows() == target_->rank(); }

std::optional<std::string> AlgExtension::defect(bool small) const {
  const auto& B = *total();
  if (!projection.is_surjective()) return "projection is not surjective";
  if (embedding.cols() != B.rank()) return "kernel embedding has the wrong width";
  if (howell_form(embedding).rows() != embedding.rows()) return "kernel embedding is not injective";
  if (!(embedding * projection.matrix()).is_zero()) return "embedded module is not in the kernel";
  if (projection.kernel().rows() != embedding.rows()) return "embedded module is not the whole kernel";
  for (std::size_t i = 0; i < embedding.rows(); ++i)
    for (std::size_t j = 0; j < embedding.rows(); ++j)
      if (!is_zero_vec(B.multiply(embedding.row(i), embedding.row(j)))) return "kernel does not square to zero";
  if (small) {
    for (std::size_t i = 0; i < embedding.rows(); ++i)
      for (auto m : B.maximal())
        if (!is_zero_vec(B.multiply(embedding.row(i), B.basis_element(m))))
          return "maximal ideal does not annihilate the kernel";
  }
  return std::nullopt;
}

AlgExtension extension_from_surjection(const ArtinMorphism& projection) {
  AlgExtension ext{projection, projection.kernel()};
  if (auto d = ext.defect(false)) throw InvalidArgument("extension: " + *d);
  return ext;
}

Mat linear_section(const ArtinMorphism& projection) {
  const auto& A = *projection.target();
  const auto& B = *projection.source();
  LeftSolver solver(projection.matrix());
  Mat s(A.ring(), A.rank(), B.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) {
    Vec pre;
    if (i == A.unit()) {
      pre = B.one();
    } else {
      auto x = solver.solve(A.basis_element(i));
      if (!x) throw InvalidArgument("linear_section: projection is not surjective");
      pre = *x;
    }
    std::copy(pre.begin(), pre.end(), s.row(i).begin());
  }
  return s;
}

}  // namespace lieforge

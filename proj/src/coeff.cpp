#include "lieforge/coeff.hpp"

#include <algorithm>
#include <limits>

#include "lieforge/kernels.hpp"

namespace lieforge {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t leading_index(std::span<const Scalar> r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) return j;
  }
  return r.size();
}

}  // namespace

CoeffRing::CoeffRing(std::uint32_t prime, std::uint32_t precision)
    : prime_(prime), precision_(precision), modulus_(1) {
  if (!is_prime(prime)) throw InvalidArgument("coefficient characteristic " + std::to_string(prime) + " is not prime");
  if (precision == 0) throw InvalidArgument("precision must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < precision; ++i) {
    q *= prime;
    if (q >= (std::uint64_t{1} << 31)) throw InvalidArgument("modulus l^N must be below 2^31");
  }
  modulus_ = static_cast<Scalar>(q);
}

std::uint32_t CoeffRing::valuation(Scalar a) const {
  if (a == 0) return precision_;
  std::uint32_t v = 0;
  while (a % prime_ == 0) {
    a /= prime_;
    ++v;
  }
  return v;
}

Scalar CoeffRing::inverse(Scalar unit) const {
  if (!is_unit(unit)) throw InvalidArgument("element " + std::to_string(unit) + " is not a unit in " + name());
  std::int64_t r0 = modulus_, r1 = unit, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quo = r0 / r1;
    std::int64_t t = r0 - quo * r1;
    r0 = r1;
    r1 = t;
    t = s0 - quo * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

Scalar CoeffRing::prime_power(std::uint32_t k) const {
  if (k >= precision_) return 0;
  Scalar p = 1;
  for (std::uint32_t i = 0; i < k; ++i) p *= prime_;
  return p;
}

std::string CoeffRing::name() const {
  if (precision_ == 1) return "F_" + std::to_string(prime_);
  return "Z/" + std::to_string(modulus_);
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(CoeffRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(CoeffRing ring, std::size_t n) {
  Mat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Mat Mat::from_rows(CoeffRing ring, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows) {
  Mat m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("Mat::from_rows: ragged row");
    for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = ring.reduce(rows[i][j]);
  }
  return m;
}

void Mat::append_row(std::span<const Scalar> r) {
  if (r.size() != cols_) throw InvalidArgument("Mat::append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Mat Mat::transpose() const {
  Mat t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

Mat Mat::hstack(const Mat& right) const {
  if (right.rows_ != rows_) throw InvalidArgument("Mat::hstack: row count mismatch");
  Mat out(ring_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i).begin(), row(i).end(), out.row(i).begin());
    std::copy(right.row(i).begin(), right.row(i).end(), out.row(i).begin() + cols_);
  }
  return out;
}

Mat Mat::vstack(const Mat& below) const {
  if (below.cols_ != cols_) throw InvalidArgument("Mat::vstack: column count mismatch");
  Mat out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

Mat Mat::columns(std::size_t begin, std::size_t end) const {
  Mat out(ring_, rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    std::copy(row(i).begin() + begin, row(i).begin() + end, out.row(i).begin());
  return out;
}

Mat Mat::reduced_to(const CoeffRing& target) const {
  if (target.prime() != ring_.prime() || target.precision() > ring_.precision())
    throw InvalidArgument("Mat::reduced_to: " + target.name() + " is not a quotient of " + ring_.name());
  Mat out(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] % target.modulus();
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (!(a.ring_ == b.ring_) || a.cols_ != b.rows_) throw InvalidArgument("Mat product: shape or ring mismatch");
  Mat c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Scalar x = a(i, k);
      if (x != 0) axpy(a.ring_, c.row(i), b.row(k), x);
    }
  }
  return c;
}

Vec vec_mat(std::span<const Scalar> x, const Mat& m) {
  if (x.size() != m.rows()) throw InvalidArgument("vec_mat: length mismatch");
  Vec out(m.cols(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != 0) axpy(m.ring(), out, m.row(k), x[k]);
  }
  return out;
}

bool is_zero_vec(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

void axpy(const CoeffRing& ring, std::span<Scalar> dst, std::span<const Scalar> src, Scalar c) {
  kernels::active().axpy(dst, src, c % ring.modulus(), ring.modulus());
}

// ---------------------------------------------------------------------------
// Howell form
//
// Column by column: pick the pool row of least valuation in the column, make
// its pivot exactly l^v, clear the column in the remaining pool, push the
// annihilator row l^(N-v) * pivot back into the pool (it is zero in this and
// all earlier columns), and reduce the entries above the pivot into [0, l^v).

Mat howell_form(const Mat& m) {
  const CoeffRing& R = m.ring();
  const Scalar q = R.modulus();
  const std::size_t cols = m.cols();
  const auto& ops = kernels::active();

  std::vector<Vec> pool;
  pool.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!is_zero_vec(m.row(i))) pool.push_back(m.row_vec(i));
  }
  std::vector<Vec> done;

  for (std::size_t j = 0; j < cols && !pool.empty(); ++j) {
    std::size_t best = pool.size();
    std::uint32_t best_v = R.precision();
    for (std::size_t r = 0; r < pool.size(); ++r) {
      std::uint32_t v = R.valuation(pool[r][j]);
      if (v < best_v) {
        best_v = v;
        best = r;
        if (v == 0) break;
      }
    }
    if (best == pool.size()) continue;

    Vec pivot = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    const Scalar lv = R.prime_power(best_v);
    const Scalar unit = static_cast<Scalar>(pivot[j] / lv);
    if (unit != 1) {
      // pivot[j] = unit * l^v as integers with l not dividing unit.
      Scalar inv = R.inverse(unit);
      ops.scale(std::span<Scalar>(pivot).subspan(j), inv, q);
    }
    const std::span<const Scalar> ptail = std::span<const Scalar>(pivot).subspan(j);

    for (auto& r : pool) {
      if (r[j] == 0) continue;
      Scalar c = static_cast<Scalar>(r[j] / lv);
      ops.axpy(std::span<Scalar>(r).subspan(j), ptail, R.neg(c), q);
    }
    if (best_v > 0) {
      Vec ann = pivot;
      ops.scale(std::span<Scalar>(ann).subspan(j), R.prime_power(R.precision() - best_v), q);
      if (!is_zero_vec(ann)) pool.push_back(std::move(ann));
    }
    for (auto& h : done) {
      if (h[j] == 0) continue;
      Scalar c = static_cast<Scalar>(h[j] / lv);
      if (c != 0) ops.axpy(std::span<Scalar>(h).subspan(j), ptail, R.neg(c), q);
    }
    done.push_back(std::move(pivot));
    std::erase_if(pool, [](const Vec& r) { return is_zero_vec(r); });
  }

  Mat out(R, 0, cols);
  for (const auto& h : done) out.append_row(h);
  return out;
}

Mat kernel_basis(const Mat& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  Mat aug = m.hstack(Mat::identity(m.ring(), r));
  Mat h = howell_form(aug);
  Mat ker(m.ring(), 0, r);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    auto row = h.row(i);
    if (leading_index(row) >= c) ker.append_row(row.subspan(c));
  }
  return howell_form(ker);
}

std::size_t span_log_size(const Mat& howell) {
  const CoeffRing& R = howell.ring();
  std::size_t total = 0;
  for (std::size_t i = 0; i < howell.rows(); ++i) {
    auto row = howell.row(i);
    std::size_t p = leading_index(row);
    if (p < row.size()) total += R.precision() - R.valuation(row[p]);
  }
  return total;
}

bool in_row_span(const Mat& howell, std::span<const Scalar> v) {
  if (v.size() != howell.cols()) throw InvalidArgument("in_row_span: length mismatch");
  const CoeffRing& R = howell.ring();
  Vec b(v.begin(), v.end());
  for (std::size_t i = 0; i < howell.rows(); ++i) {
    auto row = howell.row(i);
    std::size_t p = leading_index(row);
    if (p == row.size() || b[p] == 0) continue;
    Scalar pv = row[p];
    if (b[p] % pv != 0) return false;
    axpy(R, b, row, R.neg(b[p] / pv));
  }
  return is_zero_vec(b);
}

LeftSolver::LeftSolver(const Mat& m)
    : m_(m), reduced_(howell_form(m.hstack(Mat::identity(m.ring(), m.rows())))) {
  while (pivot_rows_ < reduced_.rows() && leading_index(reduced_.row(pivot_rows_)) < m_.cols()) ++pivot_rows_;
}

std::optional<Vec> LeftSolver::solve(std::span<const Scalar> b) const {
  if (b.size() != m_.cols()) throw InvalidArgument("LeftSolver::solve: length mismatch");
  const CoeffRing& R = m_.ring();
  const std::size_t c = m_.cols();
  Vec rest(b.begin(), b.end());
  Vec x(m_.rows(), 0);
  for (std::size_t i = 0; i < pivot_rows_; ++i) {
    auto row = reduced_.row(i);
    std::size_t p = leading_index(row);
    if (rest[p] == 0) continue;
    Scalar pv = row[p];
    if (rest[p] % pv != 0) return std::nullopt;
    Scalar coef = static_cast<Scalar>(rest[p] / pv);
    axpy(R, rest, row.first(c), R.neg(coef));
    axpy(R, x, row.subspan(c), coef);
  }
  if (!is_zero_vec(rest)) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// Subquotients

Subquotient::Subquotient(Mat cycles, Mat boundaries, std::vector<std::uint32_t> exponents, Mat representatives)
    : cycles_(std::move(cycles)),
      boundaries_(std::move(boundaries)),
      exponents_(std::move(exponents)),
      representatives_(std::move(representatives)),
      coords_(representatives_.vstack(boundaries_)) {}

std::size_t Subquotient::free_rank() const {
  const std::uint32_t n = ring().precision();
  return static_cast<std::size_t>(std::count(exponents_.begin(), exponents_.end(), n));
}

std::size_t Subquotient::log_order() const {
  std::size_t s = 0;
  for (auto e : exponents_) s += e;
  return s;
}

std::optional<Vec> Subquotient::coordinates(std::span<const Scalar> v) const {
  if (!is_cycle(v)) return std::nullopt;
  auto x = coords_.solve(v);
  if (!x) throw InternalError("cycle not expressible through representatives and boundaries");
  x->resize(representatives_.rows());
  return x;
}

Subquotient homology(const Mat& d_in, const Mat& d_out) {
  if (d_in.cols() != d_out.rows())
    throw InvalidArgument("homology: d_in has " + std::to_string(d_in.cols()) + " columns but d_out has " +
                          std::to_string(d_out.rows()) + " rows");
  if (!(d_in.ring() == d_out.ring())) throw InvalidArgument("homology: ring mismatch");
  const CoeffRing& R = d_in.ring();
  if (d_in.rows() > 0 && d_out.cols() > 0 && !(d_in * d_out).is_zero())
    throw InvalidArgument("homology: d_in * d_out is not zero");

  Mat cycles = kernel_basis(d_out);
  Mat bounds = howell_form(d_in);
  const std::size_t log_b = span_log_size(bounds);

  // s_k = #{invariant factors l^e with e >= k}, read off from
  // |{z in Z : l^k z in B}| / |B| = l^(sum_i min(e_i, k)).
  std::vector<std::size_t> torsion_log(R.precision() + 1, 0);
  torsion_log[R.precision()] = span_log_size(cycles) - log_b;
  for (std::uint32_t k = 1; k < R.precision(); ++k) {
    Mat scaled = cycles;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
      kernels::active().scale(scaled.row(i), R.prime_power(k), R.modulus());
    Mat stacked = scaled.vstack(bounds);
    Mat ker = kernel_basis(stacked);
    Mat ys = ker.columns(0, cycles.rows());
    Mat t = howell_form(ys * cycles);
    torsion_log[k] = span_log_size(t) - log_b;
  }
  std::vector<std::size_t> at_least(R.precision() + 2, 0);
  for (std::uint32_t k = 1; k <= R.precision(); ++k) at_least[k] = torsion_log[k] - torsion_log[k - 1];
  std::vector<std::uint32_t> exps;
  for (std::uint32_t e = 1; e <= R.precision(); ++e) {
    std::size_t count = at_least[e] - at_least[e + 1];
    for (std::size_t i = 0; i < count; ++i) exps.push_back(e);
  }

  Mat reps(R, 0, d_out.rows());
  Mat acc = bounds;
  for (std::size_t i = 0; i < cycles.rows(); ++i) {
    auto z = cycles.row(i);
    if (in_row_span(acc, z)) continue;
    reps.append_row(z);
    Mat grown = acc;
    grown.append_row(z);
    acc = howell_form(grown);
  }
  return Subquotient(std::move(cycles), std::move(bounds), std::move(exps), std::move(reps));
}

}  // namespace lieforge

#pragma once
// Exact arithmetic over F_l and Z/l^N, plus canonical row-space linear
// algebra (Howell normal form) on dense matrices.
//
// Matrices act on row vectors: a map V -> W of free modules of ranks v, w is
// a v x w matrix and x |-> x * M. Every subspace is stored as the row span of
// a matrix in Howell form, which is canonical over the chain ring Z/l^N and
// is the reduced row echelon form when N = 1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieforge/error.hpp"

namespace lieforge {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

class CoeffRing {
 public:
  // Z/l^N. Throws InvalidArgument unless l is prime, N >= 1 and l^N < 2^31.
  CoeffRing(std::uint32_t prime, std::uint32_t precision = 1);

  std::uint32_t prime() const { return prime_; }
  std::uint32_t precision() const { return precision_; }
  Scalar modulus() const { return modulus_; }
  bool is_field() const { return precision_ == 1; }

  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(modulus_);
    return static_cast<Scalar>(r < 0 ? r + modulus_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= modulus_ ? s - modulus_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : static_cast<Scalar>(a + (modulus_ - b)); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : modulus_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} * b) % modulus_);
  }

  // Largest k with l^k | a; precision() for a == 0.
  std::uint32_t valuation(Scalar a) const;
  bool is_unit(Scalar a) const { return a % prime_ != 0; }
  // Inverse of a unit. Throws InvalidArgument for non-units.
  Scalar inverse(Scalar unit) const;
  // l^k reduced mod l^N (zero once k >= N).
  Scalar prime_power(std::uint32_t k) const;

  // The residue field F_l.
  CoeffRing residue_field() const { return CoeffRing(prime_, 1); }

  // "F_5" or "Z/125".
  std::string name() const;

  friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_;
  }

 private:
  std::uint32_t prime_;
  std::uint32_t precision_;
  Scalar modulus_;
};

class Mat {
 public:
  Mat(CoeffRing ring, std::size_t rows, std::size_t cols);
  static Mat identity(CoeffRing ring, std::size_t n);
  // Entries are reduced into the ring.
  static Mat from_rows(CoeffRing ring, std::size_t cols,
                       const std::vector<std::vector<std::int64_t>>& rows);

  const CoeffRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = v % ring_.modulus(); }
  void add_to(std::size_t i, std::size_t j, Scalar v) {
    data_[i * cols_ + j] = ring_.add(data_[i * cols_ + j], v % ring_.modulus());
  }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }

  void append_row(std::span<const Scalar> r);
  bool is_zero() const;
  Mat transpose() const;
  Mat hstack(const Mat& right) const;
  Mat vstack(const Mat& below) const;
  Mat columns(std::size_t begin, std::size_t end) const;
  Mat reduced_to(const CoeffRing& target) const;  // entrywise reduction to a quotient ring

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  CoeffRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// x * M for a row vector x of length M.rows().
Vec vec_mat(std::span<const Scalar> x, const Mat& m);
bool is_zero_vec(std::span<const Scalar> v);
// dst += c * src over the ring (through the active SIMD kernel).
void axpy(const CoeffRing& ring, std::span<Scalar> dst, std::span<const Scalar> src, Scalar c);

// Canonical generator matrix of the row span (zero rows dropped).
Mat howell_form(const Mat& m);
// Howell form of {x : x * m = 0}.
Mat kernel_basis(const Mat& m);
// log_l of the number of elements of the row span of a Howell-form matrix.
std::size_t span_log_size(const Mat& howell);
// Membership test against a Howell-form matrix.
bool in_row_span(const Mat& howell, std::span<const Scalar> v);

// Solves x * m = b repeatedly against a fixed m. The returned solution is the
// deterministic one produced by greedy reduction against the Howell form of
// [m | I].
class LeftSolver {
 public:
  explicit LeftSolver(const Mat& m);
  std::optional<Vec> solve(std::span<const Scalar> b) const;
  bool solvable(std::span<const Scalar> b) const { return solve(b).has_value(); }
  const Mat& matrix() const { return m_; }

 private:
  Mat m_;
  Mat reduced_;  // Howell form of [m | I]
  std::size_t pivot_rows_ = 0;  // leading rows whose pivot lies in the m-part
};

// ker(d_out) / im(d_in) for a composable pair source -> middle -> end.
class Subquotient {
 public:
  Subquotient(Mat cycles, Mat boundaries, std::vector<std::uint32_t> exponents, Mat representatives);

  const CoeffRing& ring() const { return cycles_.ring(); }
  std::size_t ambient() const { return cycles_.cols(); }
  const Mat& cycles() const { return cycles_; }
  const Mat& boundaries() const { return boundaries_; }
  // Invariant factors l^e, ascending.
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  // Minimal number of generators (the dimension over F_l).
  std::size_t dimension() const { return exponents_.size(); }
  // Number of invariant factors equal to l^N.
  std::size_t free_rank() const;
  std::size_t log_order() const;
  // Cycle representatives whose classes generate; a basis over F_l.
  const Mat& representatives() const { return representatives_; }

  bool is_cycle(std::span<const Scalar> v) const { return in_row_span(cycles_, v); }
  bool is_boundary(std::span<const Scalar> v) const { return in_row_span(boundaries_, v); }
  // Coordinates of the class of v on the representatives; nullopt when v is
  // not a cycle.
  std::optional<Vec> coordinates(std::span<const Scalar> v) const;

 private:
  Mat cycles_;
  Mat boundaries_;
  std::vector<std::uint32_t> exponents_;
  Mat representatives_;
  LeftSolver coords_;  // against [representatives; boundaries]
};

// Throws InvalidArgument when d_in * d_out != 0 or the shapes do not compose.
Subquotient homology(const Mat& d_in, const Mat& d_out);

}  // namespace lieforge

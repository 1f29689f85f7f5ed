#include "lieforge/ce_cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "lieforge/parallel.hpp"

namespace lieforge {

namespace {

struct Entry {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

// All k-subsets of {0..n-1} as increasing position lists.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Sign of the shuffle that moves positions S (increasing) to the front.
int shuffle_sign(const std::vector<std::size_t>& s) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < s.size(); ++i) inv += s[i] - i;
  return inv % 2 == 0 ? 1 : -1;
}

Scalar signed_scalar(const CoeffRing& R, int sign, Scalar v) { return sign > 0 ? v : R.neg(v); }

void require_adjoint(const CochainSpace& s, const char* what) {
  if (s.module()->dim() != s.algebra()->dim())
    throw InvalidArgument(std::string(what) + ": adjoint-type coefficients required");
}

}  // namespace

int sort_with_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

// ---------------------------------------------------------------------------
// CochainSpace

CochainSpace::CochainSpace(ModulePtr module, int arity, int grade)
    : module_(std::move(module)), arity_(arity), grade_(grade) {
  if (arity_ < 0) throw InvalidArgument("cochain arity must be non-negative");
  const auto& L = *module_->algebra();
  for (const auto& pos : subsets(L.dim(), static_cast<std::size_t>(arity_))) {
    int deg = 0;
    for (auto i : pos) deg += L.degree(i);
    const int target = deg - grade_;
    const auto& piece = module_->basis_of_degree(target);
    if (piece.empty()) continue;
    index_[pos] = tuples_.size();
    tuple_start_.push_back(basis_.size());
    target_degree_.push_back(target);
    for (auto m : piece) basis_.emplace_back(tuples_.size(), m);
    tuples_.push_back(pos);
  }
}

std::optional<std::size_t> CochainSpace::tuple_index(const Tuple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CochainSpace::coordinate(const Tuple& t, std::size_t m) const {
  auto ti = tuple_index(t);
  if (!ti) return std::nullopt;
  const auto& piece = module_->basis_of_degree(target_degree_[*ti]);
  auto it = std::lower_bound(piece.begin(), piece.end(), m);
  if (it == piece.end() || *it != m) return std::nullopt;
  return tuple_start_[*ti] + static_cast<std::size_t>(it - piece.begin());
}

Vec CochainSpace::evaluate(std::span<const Scalar> cochain, const Tuple& args) const {
  if (cochain.size() != dim()) throw InvalidArgument("cochain length does not match its space");
  if (args.size() != static_cast<std::size_t>(arity_)) throw InvalidArgument("wrong number of cochain arguments");
  Vec out(module_->dim(), 0);
  Tuple t = args;
  int sign = sort_with_sign(t);
  if (sign == 0) return out;
  auto ti = tuple_index(t);
  if (!ti) return out;
  const auto& piece = module_->basis_of_degree(target_degree_[*ti]);
  for (std::size_t j = 0; j < piece.size(); ++j)
    out[piece[j]] = signed_scalar(ring(), sign, cochain[tuple_start_[*ti] + j]);
  return out;
}

Vec CochainSpace::evaluate(std::span<const Scalar> cochain, const std::vector<Vec>& args) const {
  const CoeffRing& R = ring();
  Vec out(module_->dim(), 0);
  Tuple t(args.size());
  // Odometer over the nonzero coordinates of each argument.
  std::vector<std::vector<std::size_t>> support(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t k = 0; k < args[i].size(); ++k)
      if (args[i][k] != 0) support[i].push_back(k);
    if (support[i].empty()) return out;
  }
  std::vector<std::size_t> pos(args.size(), 0);
  while (true) {
    Scalar c = 1;
    for (std::size_t i = 0; i < args.size(); ++i) {
      t[i] = support[i][pos[i]];
      c = R.mul(c, args[i][t[i]]);
    }
    Vec v = evaluate(cochain, t);
    if (!is_zero_vec(v)) axpy(R, out, v, c);
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == support[i].size()) pos[i++] = 0;
    if (i == pos.size()) break;
  }
  return out;
}

Vec CochainSpace::from_function(const std::function<Vec(const Tuple&)>& f) const {
  Vec out(dim(), 0);
  for (std::size_t ti = 0; ti < tuples_.size(); ++ti) {
    Vec v = f(tuples_[ti]);
    const auto& piece = module_->basis_of_degree(target_degree_[ti]);
    for (std::size_t j = 0; j < piece.size(); ++j) {
      out[tuple_start_[ti] + j] = v[piece[j]];
      v[piece[j]] = 0;
    }
    if (!is_zero_vec(v))
      throw InternalError("cochain value on " + describe_tuple(tuples_[ti]) + " leaves degree " +
                          std::to_string(target_degree_[ti]));
  }
  return out;
}

std::string CochainSpace::describe_tuple(const Tuple& t) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << algebra()->label(t[i]);
  os << ")";
  return os.str();
}

std::string CochainSpace::describe(std::size_t i) const {
  const auto& [ti, m] = basis_[i];
  return "g" + describe_tuple(tuples_[ti]) + " -> " + module_->label(m);
}

// ---------------------------------------------------------------------------
// Differential

Mat delta_matrix(const CochainSpace& from, const CochainSpace& to) {
  if (from.module() != to.module() || to.arity() != from.arity() + 1 || to.grade() != from.grade())
    throw InvalidArgument("delta_matrix: spaces are not consecutive in one complex");
  const auto& L = *from.algebra();
  const auto& M = *from.module();
  const CoeffRing& R = from.ring();
  const std::size_t q1 = static_cast<std::size_t>(to.arity());

  auto per_tuple = parallel_map<std::vector<Entry>>(to.tuples().size(), [&](std::size_t ti) {
    std::vector<Entry> out;
    const Tuple& T = to.tuples()[ti];
    for (std::size_t s = 0; s < q1; ++s) {
      for (std::size_t t = s + 1; t < q1; ++t) {
        auto br = L.bracket(T[s], T[t]);
        const int st_sign = (s + t) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < br.size(); ++k) {
          if (br[k] == 0) continue;
          Tuple args{k};
          for (std::size_t u = 0; u < q1; ++u)
            if (u != s && u != t) args.push_back(T[u]);
          int sg = sort_with_sign(args);
          if (sg == 0) continue;
          auto fi = from.tuple_index(args);
          if (!fi) continue;
          const Scalar c = signed_scalar(R, st_sign * sg, br[k]);
          const auto& piece = from.piece(*fi);
          for (std::size_t j = 0; j < piece.size(); ++j) {
            auto col = to.coordinate(T, piece[j]);
            if (!col) throw InternalError("delta_matrix: bracket term leaves the target piece");
            out.push_back({from.tuple_start(*fi) + j, *col, c});
          }
        }
      }
    }
    for (std::size_t u = 0; u < q1; ++u) {
      Tuple rest;
      for (std::size_t v = 0; v < q1; ++v)
        if (v != u) rest.push_back(T[v]);
      auto fi = from.tuple_index(rest);
      if (!fi) continue;
      const int u_sign = u % 2 == 0 ? 1 : -1;
      const auto& piece = from.piece(*fi);
      for (std::size_t j = 0; j < piece.size(); ++j) {
        const std::size_t row = from.tuple_start(*fi) + j;
        auto act = M.action(T[u], piece[j]);
        for (std::size_t m2 = 0; m2 < act.size(); ++m2) {
          if (act[m2] == 0) continue;
          auto col = to.coordinate(T, m2);
          if (!col) throw InternalError("delta_matrix: action term leaves the target piece");
          out.push_back({row, *col, signed_scalar(R, u_sign, act[m2])});
        }
      }
    }
    return out;
  });

  Mat d(R, from.dim(), to.dim());
  for (const auto& entries : per_tuple)
    for (const auto& e : entries) d.add_to(e.row, e.col, e.value);
  return d;
}

CohomologySpace cohomology_space(const ModulePtr& module, int q, int m) {
  if (q < 0) throw InvalidArgument("cohomology degree must be non-negative");
  CochainSpace cq(module, q, m);
  CochainSpace cnext(module, q + 1, m);
  Mat din = q == 0 ? Mat(module->ring(), 0, cq.dim()) : delta_matrix(CochainSpace(module, q - 1, m), cq);
  Mat dout = delta_matrix(cq, cnext);
  Subquotient h = homology(din, dout);
  return CohomologySpace{std::move(cq), std::move(cnext), std::move(din), std::move(dout), std::move(h)};
}

std::vector<std::size_t> cochain_dimensions(const ModulePtr& module, int qmax, int m) {
  std::vector<std::size_t> dims;
  for (int q = 0; q <= qmax; ++q) dims.push_back(CochainSpace(module, q, m).dim());
  return dims;
}

// ---------------------------------------------------------------------------
// Products

Vec bracket_cochain(const CochainSpace& c2) {
  require_adjoint(c2, "bracket_cochain");
  if (c2.arity() != 2 || c2.grade() != 0) throw InvalidArgument("bracket_cochain: needs C^2(L, L)(0)");
  const auto& L = *c2.algebra();
  return c2.from_function([&](const Tuple& t) {
    auto b = L.bracket(t[0], t[1]);
    return Vec(b.begin(), b.end());
  });
}

Vec compose(const CochainSpace& sphi, std::span<const Scalar> phi, const CochainSpace& spsi,
            std::span<const Scalar> psi, const CochainSpace& to) {
  require_adjoint(sphi, "compose");
  require_adjoint(spsi, "compose");
  const int p = sphi.arity(), q = spsi.arity();
  if (p < 1 || q < 1) throw InvalidArgument("cochain bracket: arity-0 operands are not allowed");
  if (to.arity() != p + q - 1 || to.grade() != sphi.grade() + spsi.grade())
    throw InvalidArgument("cochain bracket: target space has the wrong arity or grade");
  const CoeffRing& R = to.ring();
  const auto shuffles = subsets(static_cast<std::size_t>(p + q - 1), static_cast<std::size_t>(q));
  return to.from_function([&](const Tuple& T) {
    Vec val(to.module()->dim(), 0);
    for (const auto& s : shuffles) {
      Tuple ts, tr;
      std::size_t k = 0;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (k < s.size() && s[k] == i) {
          ts.push_back(T[i]);
          ++k;
        } else {
          tr.push_back(T[i]);
        }
      }
      Vec inner = spsi.evaluate(psi, ts);
      if (is_zero_vec(inner)) continue;
      const int sg = shuffle_sign(s);
      for (std::size_t e = 0; e < inner.size(); ++e) {
        if (inner[e] == 0) continue;
        Tuple args{e};
        args.insert(args.end(), tr.begin(), tr.end());
        Vec v = sphi.evaluate(phi, args);
        if (!is_zero_vec(v)) axpy(R, val, v, signed_scalar(R, sg, inner[e]));
      }
    }
    return val;
  });
}

Vec nr_bracket(const CochainSpace& sphi, std::span<const Scalar> phi, const CochainSpace& spsi,
               std::span<const Scalar> psi, const CochainSpace& to) {
  const int p = sphi.arity(), q = spsi.arity();
  Vec a = compose(sphi, phi, spsi, psi, to);
  Vec b = compose(spsi, psi, sphi, phi, to);
  const CoeffRing& R = to.ring();
  const bool odd = ((p - 1) * (q - 1)) % 2 != 0;
  axpy(R, a, b, odd ? 1 : R.neg(1));
  return a;
}

Vec cup_product(const CochainSpace& sa, std::span<const Scalar> a, const CochainSpace& sb,
                std::span<const Scalar> b, const CochainSpace& to, const PairingFn& pair) {
  const int p = sa.arity(), q = sb.arity();
  if (to.arity() != p + q || to.grade() != sa.grade() + sb.grade())
    throw InvalidArgument("cup_product: target space has the wrong arity or grade");
  const CoeffRing& R = to.ring();
  const auto shuffles = subsets(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p));
  return to.from_function([&](const Tuple& T) {
    Vec val(to.module()->dim(), 0);
    for (const auto& s : shuffles) {
      Tuple ts, tr;
      std::size_t k = 0;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (k < s.size() && s[k] == i) {
          ts.push_back(T[i]);
          ++k;
        } else {
          tr.push_back(T[i]);
        }
      }
      Vec va = sa.evaluate(a, ts);
      Vec vb = sb.evaluate(b, tr);
      if (is_zero_vec(va) || is_zero_vec(vb)) continue;
      Vec v = pair(va, vb);
      axpy(R, val, v, signed_scalar(R, shuffle_sign(s), 1));
    }
    return val;
  });
}

}  // namespace lieforge

#pragma once

// Concrete coefficient spaces X: scalars, l^inf_k, M_d with the operator norm,
// and weighted l^1_k. Elements of X and of the dual X' share one coordinate
// layout; the pairing and dual norm for each family are
//
//   Scalar      <x, x'> = x x'                 ||x'|| = |x'|
//   LinfK(k)    <x, x'> = sum_j x_j x'_j       ||x'|| = sum_j |x'_j|          (l^1)
//   MatOp(d)    <A, B>  = tr(B* A)             ||B||  = nuclear norm
//   WeightedL1  <x, x'> = sum_j x_j x'_j       ||x'|| = max_j |x'_j| / w_j
//
// Matrix levels M_n(X) carry the min quantization for the commutative
// families and the block operator norm for MatOp.
//
// Every supremum over the dual ball returns a NormEstimate. Closed forms
// exist for Scalar and LinfK; the other families get a certified bracket
// whose lower end is attained at an explicit dual-ball point and whose upper
// end is a triangle-inequality bound.

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gvm/complex.hpp"
#include "gvm/linalg.hpp"
#include "gvm/random.hpp"

namespace gvm {

enum class SpaceKind { Scalar, LinfK, MatOp, WeightedL1 };

class CoefficientSpace {
 public:
  static CoefficientSpace scalar() { return CoefficientSpace(SpaceKind::Scalar, 1, {}); }
  static CoefficientSpace linf(std::size_t k) {
    if (k == 0) throw std::invalid_argument("linf space needs k >= 1");
    return CoefficientSpace(SpaceKind::LinfK, k, {});
  }
  static CoefficientSpace matop(std::size_t d) {
    if (d == 0) throw std::invalid_argument("matop space needs d >= 1");
    return CoefficientSpace(SpaceKind::MatOp, d, {});
  }
  static CoefficientSpace weighted_l1(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("weighted l1 space needs k >= 1");
    for (double w : weights)
      if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be strictly positive");
    auto k = weights.size();
    return CoefficientSpace(SpaceKind::WeightedL1, k, std::move(weights));
  }

  SpaceKind kind() const noexcept { return kind_; }
  /// k for LinfK / WeightedL1, d for MatOp, 1 for Scalar.
  std::size_t param() const noexcept { return param_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t coord_count() const noexcept { return kind_ == SpaceKind::MatOp ? param_ * param_ : param_; }
  /// True when dual-ball suprema have closed forms.
  bool exact_sup() const noexcept { return kind_ == SpaceKind::Scalar || kind_ == SpaceKind::LinfK; }

  std::string label() const {
    switch (kind_) {
      case SpaceKind::Scalar: return "scalar";
      case SpaceKind::LinfK: return "linf:" + std::to_string(param_);
      case SpaceKind::MatOp: return "matop:" + std::to_string(param_);
      case SpaceKind::WeightedL1: {
        bool unit = std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
        if (unit) return "wl1:" + std::to_string(param_);
        std::ostringstream os;
        os.precision(17);
        os << "wl1:";
        for (std::size_t j = 0; j < weights_.size(); ++j) os << (j ? "," : "") << weights_[j];
        return os.str();
      }
    }
    return "?";
  }

  bool operator==(const CoefficientSpace&) const = default;

 private:
  CoefficientSpace(SpaceKind kind, std::size_t param, std::vector<double> weights)
      : kind_(kind), param_(param), weights_(std::move(weights)) {}

  SpaceKind kind_;
  std::size_t param_;
  std::vector<double> weights_;
};

using SpacePtr = std::shared_ptr<const CoefficientSpace>;

inline SpacePtr make_space(CoefficientSpace s) { return std::make_shared<const CoefficientSpace>(std::move(s)); }

/// "scalar", "linf:2", "matop:2", "wl1:3" (unit weights), "wl1:0.5,0.25",
/// "l1haar:4" (k = 4 with weights 1/4, the finite analogue of X = L^1(G)).
inline SpacePtr parse_space(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto need_size = [&]() -> std::size_t {
    try {
      std::size_t used = 0;
      long v = std::stol(arg, &used);
      if (used != arg.size() || v <= 0) throw std::invalid_argument("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed space descriptor '" + std::string(text) + "'");
    }
  };
  if (head == "scalar" || head == "c") return make_space(CoefficientSpace::scalar());
  if (head == "linf") return make_space(CoefficientSpace::linf(need_size()));
  if (head == "matop") return make_space(CoefficientSpace::matop(need_size()));
  if (head == "l1haar") {
    auto k = need_size();
    return make_space(CoefficientSpace::weighted_l1(std::vector<double>(k, 1.0 / static_cast<double>(k))));
  }
  if (head == "wl1") {
    if (arg.find(',') == std::string::npos && arg.find('.') == std::string::npos)
      return make_space(CoefficientSpace::weighted_l1(std::vector<double>(need_size(), 1.0)));
    std::vector<double> w;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        w.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed weight in '" + std::string(text) + "'");
      }
    }
    return make_space(CoefficientSpace::weighted_l1(std::move(w)));
  }
  throw std::invalid_argument("unknown space descriptor '" + std::string(text) + "'");
}

inline void require_same_space(const CoefficientSpace& a, const CoefficientSpace& b) {
  if (!(a == b)) throw std::invalid_argument("space mismatch: " + a.label() + " vs " + b.label());
}

namespace detail {

/// Coordinates over a space. Tag separates X from X'.
template <class Tag>
class CoordVector {
 public:
  CoordVector(SpacePtr space, std::vector<cd> coords) : space_(std::move(space)), c_(std::move(coords)) {
    if (!space_) throw std::invalid_argument("vector needs a space");
    if (c_.size() != space_->coord_count())
      throw std::invalid_argument("coordinate count " + std::to_string(c_.size()) + " does not match space " +
                                  space_->label());
  }
  static CoordVector zero(SpacePtr space) {
    auto n = space->coord_count();
    return {std::move(space), std::vector<cd>(n)};
  }

  const SpacePtr& space_ptr() const noexcept { return space_; }
  const CoefficientSpace& space() const noexcept { return *space_; }
  const std::vector<cd>& coords() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }
  cd operator[](std::size_t j) const { return c_[j]; }
  cd& operator[](std::size_t j) { return c_[j]; }

  CoordVector& operator+=(const CoordVector& o) {
    require_same_space(*space_, *o.space_);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
  }
  CoordVector& operator-=(const CoordVector& o) {
    require_same_space(*space_, *o.space_);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
  }
  CoordVector& operator*=(cd a) {
    for (auto& v : c_) v *= a;
    return *this;
  }
  /// this += a * o
  void axpy(cd a, const CoordVector& o) {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += a * o.c_[j];
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](cd z) { return z == cd{}; });
  }

  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
  friend CoordVector operator*(cd s, CoordVector a) { return a *= s; }

 private:
  SpacePtr space_;
  std::vector<cd> c_;
};

struct PrimalTag {};
struct DualTag {};

}  // namespace detail

using XVector = detail::CoordVector<detail::PrimalTag>;
using DualVector = detail::CoordVector<detail::DualTag>;

/// d x d matrix view of a MatOp(d) vector (row-major coordinates).
template <class V>
inline Matrix as_matrix(const V& x) {
  auto d = static_cast<Eigen::Index>(x.space().param());
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = x[static_cast<std::size_t>(i * d + j)];
  return m;
}

template <class V>
inline V from_matrix(SpacePtr space, const Matrix& m) {
  auto d = static_cast<Eigen::Index>(space->param());
  std::vector<cd> c(static_cast<std::size_t>(d * d));
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) c[static_cast<std::size_t>(i * d + j)] = m(i, j);
  return V(std::move(space), std::move(c));
}

inline double norm(const XVector& x) {
  const auto& s = x.space();
  switch (s.kind()) {
    case SpaceKind::Scalar: return std::abs(x[0]);
    case SpaceKind::LinfK: {
      double m = 0.0;
      for (cd z : x.coords()) m = std::max(m, std::abs(z));
      return m;
    }
    case SpaceKind::MatOp: return linalg::op_norm(as_matrix(x));
    case SpaceKind::WeightedL1: {
      double acc = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) acc += s.weights()[j] * std::abs(x[j]);
      return acc;
    }
  }
  return 0.0;
}

inline double dual_norm(const DualVector& xp) {
  const auto& s = xp.space();
  switch (s.kind()) {
    case SpaceKind::Scalar: return std::abs(xp[0]);
    case SpaceKind::LinfK: {
      double acc = 0.0;
      for (cd z : xp.coords()) acc += std::abs(z);
      return acc;
    }
    case SpaceKind::MatOp: return linalg::nuclear_norm(as_matrix(xp));
    case SpaceKind::WeightedL1: {
      double m = 0.0;
      for (std::size_t j = 0; j < xp.size(); ++j) m = std::max(m, std::abs(xp[j]) / s.weights()[j]);
      return m;
    }
  }
  return 0.0;
}

/// Duality pairing <x, x'>; linear in x.
inline cd pair(const XVector& x, const DualVector& xp) {
  require_same_space(x.space(), xp.space());
  cd acc = 0.0;
  if (x.space().kind() == SpaceKind::MatOp) {
    for (std::size_t j = 0; j < x.size(); ++j) acc += std::conj(xp[j]) * x[j];
  } else {
    for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * xp[j];
  }
  return acc;
}

/// A dual-ball point x' with ||x'|| = 1 and <x, x'> = ||x||.
inline DualVector norming_functional(const XVector& x) {
  const auto& s = x.space();
  auto out = DualVector::zero(x.space_ptr());
  switch (s.kind()) {
    case SpaceKind::Scalar: out[0] = std::conj(phase_of(x[0])); break;
    case SpaceKind::LinfK: {
      std::size_t best = 0;
      for (std::size_t j = 1; j < x.size(); ++j)
        if (std::abs(x[j]) > std::abs(x[best])) best = j;
      out[best] = std::conj(phase_of(x[best]));
      break;
    }
    case SpaceKind::MatOp: {
      auto sp = linalg::top_singular_pair(as_matrix(x));
      Matrix b = sp.u * sp.v.adjoint();
      return from_matrix<DualVector>(x.space_ptr(), b);
    }
    case SpaceKind::WeightedL1:
      for (std::size_t j = 0; j < x.size(); ++j) out[j] = s.weights()[j] * std::conj(phase_of(x[j]));
      break;
  }
  return out;
}

/// Random extreme point of the dual unit ball.
inline DualVector random_dual_extreme(const SpacePtr& space, Rng& rng) {
  auto out = DualVector::zero(space);
  switch (space->kind()) {
    case SpaceKind::Scalar: out[0] = random_phase(rng); break;
    case SpaceKind::LinfK: {
      std::uniform_int_distribution<std::size_t> pick(0, space->param() - 1);
      out[pick(rng)] = random_phase(rng);
      break;
    }
    case SpaceKind::MatOp: {
      auto d = static_cast<Eigen::Index>(space->param());
      Matrix b = random_unit_vector(rng, d) * random_unit_vector(rng, d).adjoint();
      return from_matrix<DualVector>(space, b);
    }
    case SpaceKind::WeightedL1:
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = space->weights()[j] * random_phase(rng);
      break;
  }
  return out;
}

/// A two-sided bound on a real quantity. `exact` means lower == upper is the value.
struct NormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = true;

  static NormEstimate exact_value(double v) { return {v, v, true}; }
  /// Bracket with lower clipped into [0, upper].
  static NormEstimate bracket(double lo, double hi) {
    hi = std::max(hi, 0.0);
    return {std::clamp(lo, 0.0, hi), hi, false};
  }
  double mid() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
  bool contains(double v, double tol) const { return v >= lower - tol && v <= upper + tol; }
};

/// Componentwise max: the bracket for max(a, b).
inline NormEstimate max(const NormEstimate& a, const NormEstimate& b) {
  return {std::max(a.lower, b.lower), std::max(a.upper, b.upper), a.exact && b.exact};
}

/// Monotone power transform v -> v^e (e > 0).
inline NormEstimate pow(const NormEstimate& a, double e) {
  return {std::pow(a.lower, e), std::pow(a.upper, e), a.exact};
}

inline NormEstimate operator*(double c, const NormEstimate& a) { return {c * a.lower, c * a.upper, a.exact}; }

inline NormEstimate operator*(const NormEstimate& a, const NormEstimate& b) {
  return {a.lower * b.lower, a.upper * b.upper, a.exact && b.exact};
}

/// Settings for the alternating phase ascent behind inexact suprema.
struct AscentOptions {
  int restarts = 64;
  int iterations = 100;
  double tol = 1e-10;
  std::uint64_t seed = 0x6a09e667f3bcc908ULL;
};

namespace detail {

inline double lp_mean_norm(std::span<const double> mags, double p) {
  if (mags.empty()) return 0.0;
  if (std::isinf(p)) return *std::max_element(mags.begin(), mags.end());
  double acc = 0.0;
  for (double m : mags) acc += std::pow(m, p);
  return std::pow(acc / static_cast<double>(mags.size()), 1.0 / p);
}

}  // namespace detail

/// sup over x' in B_X' of || t -> N <v_t, x'> ||_{L^p(m_N)}, N = v.size(), p in [1, inf],
/// with m_N the normalized counting measure on the N atoms.
///
/// By Holder duality this is the operator norm of alpha -> sum_t alpha_t v_t
/// on L^{p'}(m_N), i.e. the p-semivariation of the atomic measure {v_t}; at
/// p = 1 it is sup_{x'} sum_t |<v_t, x'>|, the semivariation.
inline NormEstimate lp_dual_sup(std::span<const XVector> v, double p, const AscentOptions& opts = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
  const std::size_t n = v.size();
  if (n == 0) return NormEstimate::exact_value(0.0);
  const auto& sp = v[0].space_ptr();
  for (const auto& x : v) require_same_space(*sp, x.space());
  const double big_n = static_cast<double>(n);

  std::vector<double> mags(n);
  for (std::size_t t = 0; t < n; ++t) mags[t] = big_n * norm(v[t]);
  const double upper = detail::lp_mean_norm(mags, p);
  if (std::isinf(p) || upper == 0.0) return NormEstimate::exact_value(upper);

  if (sp->kind() == SpaceKind::Scalar) return NormEstimate::exact_value(upper);
  if (sp->kind() == SpaceKind::LinfK) {
    double best = 0.0;
    for (std::size_t j = 0; j < sp->coord_count(); ++j) {
      for (std::size_t t = 0; t < n; ++t) mags[t] = big_n * std::abs(v[t][j]);
      best = std::max(best, detail::lp_mean_norm(mags, p));
    }
    return NormEstimate::exact_value(best);
  }

  // Alternating ascent: x' -> h_t = N<v_t,x'> -> optimal alpha for h -> y = sum alpha_t v_t -> x' = norming(y).
  std::vector<cd> h(n);
  auto evaluate = [&](const DualVector& xp) {
    for (std::size_t t = 0; t < n; ++t) {
      h[t] = big_n * pair(v[t], xp);
      mags[t] = std::abs(h[t]);
    }
    return detail::lp_mean_norm(mags, p);
  };
  auto step = [&]() {
    auto y = XVector::zero(sp);
    for (std::size_t t = 0; t < n; ++t) {
      double a = mags[t];
      if (a == 0.0) continue;
      cd alpha = std::conj(h[t] / a) * (p == 1.0 ? 1.0 : std::pow(a, p - 1.0));
      y.axpy(alpha, v[t]);
    }
    return norming_functional(y);
  };
  auto climb = [&](DualVector xp) {
    double value = evaluate(xp);
    for (int it = 0; it < opts.iterations; ++it) {
      DualVector next = step();
      double nv = evaluate(next);
      if (nv <= value + opts.tol * std::max(1.0, value)) {
        value = std::max(value, nv);
        break;
      }
      value = nv;
    }
    return value;
  };

  double lower = 0.0;
  auto total = XVector::zero(sp);
  for (const auto& x : v) total += x;
  if (!total.is_zero()) lower = std::max(lower, climb(norming_functional(total)));
  for (const auto& x : v)
    if (!x.is_zero()) lower = std::max(lower, climb(norming_functional(x)));
  Rng rng(opts.seed);
  for (int r = 0; r < opts.restarts; ++r) lower = std::max(lower, climb(random_dual_extreme(sp, rng)));
  return NormEstimate::bracket(lower, upper);
}

/// sup over x' in B_X' of sum_t c_t |<v_t, x'>| for weights c_t >= 0.
inline NormEstimate dual_ball_sup(const CoefficientSpace& space, std::span<const std::pair<double, XVector>> atoms,
                                  const AscentOptions& opts = {}) {
  std::vector<XVector> scaled;
  scaled.reserve(atoms.size());
  for (const auto& [c, x] : atoms) {
    require_same_space(space, x.space());
    if (c < 0.0) throw std::invalid_argument("atom weights must be non-negative");
    scaled.push_back(c * x);
  }
  return lp_dual_sup(scaled, 1.0, opts);
}

/// n x n matrix with entries in X (row-major), an element of M_n(X).
class MatrixOverX {
 public:
  MatrixOverX(std::size_t n, std::vector<XVector> entries) : n_(n), e_(std::move(entries)) {
    if (n_ == 0) throw std::invalid_argument("matrix level must be positive");
    if (e_.size() != n_ * n_) throw std::invalid_argument("matrix over X needs n*n entries");
    for (const auto& x : e_) require_same_space(e_[0].space(), x.space());
  }
  static MatrixOverX zero(SpacePtr space, std::size_t n) {
    return MatrixOverX(n, std::vector<XVector>(n * n, XVector::zero(std::move(space))));
  }

  std::size_t level() const noexcept { return n_; }
  const SpacePtr& space_ptr() const noexcept { return e_[0].space_ptr(); }
  const CoefficientSpace& space() const noexcept { return e_[0].space(); }
  const XVector& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  XVector& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const std::vector<XVector>& entries() const noexcept { return e_; }

  /// Scalar matrix [ x_ij coordinate c ].
  Matrix coordinate(std::size_t c) const {
    Matrix m(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(Eigen::Index(i), Eigen::Index(j)) = (*this)(i, j)[c];
    return m;
  }

  double max_entry_norm() const {
    double m = 0.0;
    for (const auto& x : e_) m = std::max(m, norm(x));
    return m;
  }

  MatrixOverX& operator*=(cd a) {
    for (auto& x : e_) x *= a;
    return *this;
  }
  MatrixOverX& operator-=(const MatrixOverX& o) {
    if (o.n_ != n_) throw std::invalid_argument("matrix level mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend MatrixOverX operator-(MatrixOverX a, const MatrixOverX& b) { return a -= b; }
  friend MatrixOverX operator*(cd s, MatrixOverX a) { return a *= s; }

 private:
  std::size_t n_;
  std::vector<XVector> e_;
};

/// (A B)_ij = sum_k A_ik B_kj with X-valued A and complex B.
inline MatrixOverX operator*(const MatrixOverX& a, const Matrix& b) {
  const std::size_t n = a.level();
  if (b.rows() != static_cast<Eigen::Index>(n) || b.cols() != static_cast<Eigen::Index>(n))
    throw std::invalid_argument("matrix product level mismatch");
  auto out = MatrixOverX::zero(a.space_ptr(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j).axpy(b(Eigen::Index(k), Eigen::Index(j)), a(i, k));
  return out;
}

/// Largest entry norm of a - b.
inline double max_entry_difference(const MatrixOverX& a, const MatrixOverX& b) { return (a - b).max_entry_norm(); }

/// Block diagonal x (+) y in M_{m+n}(X).
inline MatrixOverX direct_sum(const MatrixOverX& x, const MatrixOverX& y) {
  require_same_space(x.space(), y.space());
  const std::size_t m = x.level(), n = y.level();
  auto out = MatrixOverX::zero(x.space_ptr(), m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = x(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(m + i, m + j) = y(i, j);
  return out;
}

/// Assembles an (N*b) x (N*b) X-matrix from an N x N grid of level-b blocks; block (I,J) sits at rows I*b...
inline MatrixOverX assemble_blocks(const std::vector<std::vector<MatrixOverX>>& grid) {
  const std::size_t outer = grid.size();
  if (outer == 0) throw std::invalid_argument("empty block grid");
  const std::size_t b = grid[0][0].level();
  auto out = MatrixOverX::zero(grid[0][0].space_ptr(), outer * b);
  for (std::size_t bi = 0; bi < outer; ++bi) {
    if (grid[bi].size() != outer) throw std::invalid_argument("block grid is not square");
    for (std::size_t bj = 0; bj < outer; ++bj) {
      if (grid[bi][bj].level() != b) throw std::invalid_argument("blocks must share a level");
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) out(bi * b + i, bj * b + j) = grid[bi][bj](i, j);
    }
  }
  return out;
}

/// Block operator matrix of a MatOp-valued X-matrix (n d x n d).
inline Matrix block_matrix(const MatrixOverX& m) {
  const auto n = static_cast<Eigen::Index>(m.level());
  const auto d = static_cast<Eigen::Index>(m.space().param());
  Matrix out(n * d, n * d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.block(i * d, j * d, d, d) = as_matrix(m(std::size_t(i), std::size_t(j)));
  return out;
}

/// [ <x_ij, x'> ] as a complex matrix.
inline Matrix scalarize(const MatrixOverX& m, const DualVector& xp) {
  const auto n = m.level();
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(Eigen::Index(i), Eigen::Index(j)) = pair(m(i, j), xp);
  return out;
}

/// ||[x_ij]||_{M_n(X)}. Exact for Scalar, LinfK, MatOp; certified bracket for WeightedL1.
inline NormEstimate amplified_norm(const MatrixOverX& m, const AscentOptions& opts = {}) {
  const auto& s = m.space();
  const double entry_max = m.max_entry_norm();
  const double entry_bound = static_cast<double>(m.level()) * entry_max;
  switch (s.kind()) {
    case SpaceKind::Scalar: return NormEstimate::exact_value(linalg::op_norm(m.coordinate(0)));
    case SpaceKind::MatOp: return NormEstimate::exact_value(linalg::op_norm(block_matrix(m)));
    case SpaceKind::LinfK: {
      double best = 0.0;
      for (std::size_t c = 0; c < s.coord_count(); ++c) best = std::max(best, linalg::op_norm(m.coordinate(c)));
      return NormEstimate::exact_value(best);
    }
    case SpaceKind::WeightedL1: break;
  }
  // min quantization: sup over |x'_j| <= w_j of || sum_j x'_j M_j ||_op.
  const std::size_t k = s.coord_count();
  std::vector<Matrix> coord(k);
  double triangle = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    coord[c] = m.coordinate(c);
    triangle += s.weights()[c] * linalg::op_norm(coord[c]);
  }
  const double upper = std::min(entry_bound, triangle);
  auto combine = [&](const DualVector& xp) {
    Matrix acc = Matrix::Zero(coord[0].rows(), coord[0].cols());
    for (std::size_t c = 0; c < k; ++c) acc += xp[c] * coord[c];
    return acc;
  };
  auto climb = [&](DualVector xp) {
    double value = 0.0;
    for (int it = 0; it < opts.iterations; ++it) {
      auto sv = linalg::top_singular_pair(combine(xp));
      if (sv.sigma <= value + opts.tol * std::max(1.0, value)) {
        value = std::max(value, sv.sigma);
        break;
      }
      value = sv.sigma;
      for (std::size_t c = 0; c < k; ++c) {
        cd y = sv.u.dot(coord[c] * sv.v);  // u* M_c v
        xp[c] = s.weights()[c] * std::conj(phase_of(y));
      }
    }
    return value;
  };
  double lower = entry_max;
  Rng rng(opts.seed);
  auto ones = DualVector::zero(m.space_ptr());
  for (std::size_t c = 0; c < k; ++c) ones[c] = s.weights()[c];
  lower = std::max(lower, climb(ones));
  for (const auto& x : m.entries())
    if (!x.is_zero()) lower = std::max(lower, climb(norming_functional(x)));
  for (int r = 0; r < opts.restarts; ++r) lower = std::max(lower, climb(random_dual_extreme(m.space_ptr(), rng)));
  return NormEstimate::bracket(lower, upper);
}

/// m x m matrix over X' (row-major).
struct DualMatrix {
  std::size_t level = 1;
  std::vector<DualVector> entries;

  const DualVector& operator()(std::size_t k, std::size_t l) const { return entries[k * level + l]; }
};

/// Matrix pairing <<[x_ij], [x'_kl]>> = [<x_ij, x'_kl>] as an (n m) x (n m) matrix;
/// row i*m + k, column j*m + l.
inline Matrix matrix_pair(const MatrixOverX& x, const DualMatrix& xp) {
  const std::size_t n = x.level(), m = xp.level;
  if (xp.entries.size() != m * m) throw std::invalid_argument("dual matrix needs m*m entries");
  Matrix out(static_cast<Eigen::Index>(n * m), static_cast<Eigen::Index>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          out(Eigen::Index(i * m + k), Eigen::Index(j * m + l)) = pair(x(i, j), xp(k, l));
  return out;
}

inline Matrix matrix_pair(const MatrixOverX& x, const DualVector& xp) {
  return matrix_pair(x, DualMatrix{1, {xp}});
}

}  // namespace gvm

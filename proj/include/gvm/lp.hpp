#pragma once

// Norms on function spaces over a finite group: L^p(G), L^p(nu), the N and N_w
// norms at matrix level n, and the Dunford/Pettis p-norm P_p(G,X).
//
// On a finite group with finite-dimensional X the strong and weak variants
// (L^p(nu) vs L^p_w(nu), Dunford vs Pettis) coincide, so one norm serves each
// pair. L^p(nu) is read as ||f||_{nu,p} = || |f|^p ||_nu^{1/p}.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gvm/coeff_space.hpp"
#include "gvm/function.hpp"
#include "gvm/vector_measure.hpp"

namespace gvm {

class VectorFunction {
 public:
  VectorFunction(GroupPtr group, SpacePtr space, std::vector<XVector> values)
      : group_(std::move(group)), space_(std::move(space)), values_(std::move(values)) {
    if (!group_ || !space_) throw std::invalid_argument("function needs a group and a space");
    if (values_.size() != group_->order()) throw std::invalid_argument("function length does not match group order");
    for (const auto& x : values_) require_same_space(*space_, x.space());
  }
  static VectorFunction zeros(GroupPtr g, SpacePtr s) {
    std::vector<XVector> v(g->order(), XVector::zero(s));
    return {std::move(g), std::move(s), std::move(v)};
  }
  /// t -> f(t) x0
  static VectorFunction rank_one(const ScalarFunction& f, const XVector& x0) {
    std::vector<XVector> v;
    for (Element t = 0; t < f.size(); ++t) v.push_back(f(t) * x0);
    return {f.group(), x0.space_ptr(), std::move(v)};
  }

  const GroupPtr& group() const noexcept { return group_; }
  const FiniteGroup& g() const noexcept { return *group_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const CoefficientSpace& space() const noexcept { return *space_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<XVector>& values() const noexcept { return values_; }
  const XVector& operator()(Element t) const { return values_[t]; }
  XVector& operator[](Element t) { return values_[t]; }

 private:
  GroupPtr group_;
  SpacePtr space_;
  std::vector<XVector> values_;
};

inline double max_value_difference(const VectorFunction& a, const VectorFunction& b) {
  require_same_group(a.g(), b.g());
  double m = 0.0;
  for (Element t = 0; t < a.size(); ++t) m = std::max(m, norm(a(t) - b(t)));
  return m;
}

/// t -> <Phi(t), x'>
inline ScalarFunction scalarize(const VectorFunction& phi, const DualVector& xp) {
  std::vector<cd> v(phi.size());
  for (Element t = 0; t < v.size(); ++t) v[t] = pair(phi(t), xp);
  return {phi.group(), std::move(v)};
}

inline double lp_norm_haar(const ScalarFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
  double acc = 0.0;
  if (std::isinf(p)) {
    for (cd z : f.values()) acc = std::max(acc, std::abs(z));
    return acc;
  }
  for (cd z : f.values()) acc += std::pow(std::abs(z), p);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

/// nu-essential sup: max |f| over atoms that are not nu-null.
inline double linf_nu_norm(const ScalarFunction& f, const VectorMeasure& nu) {
  require_same_group(f.g(), nu.g());
  double m = 0.0;
  for (Element t : nu.support()) m = std::max(m, std::abs(f(t)));
  return m;
}

/// ||f||_{nu,p}; p = inf gives the nu-essential sup.
inline NormEstimate lp_nu_norm(const ScalarFunction& f, const VectorMeasure& nu, double p,
                               const AscentOptions& opts = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
  require_same_group(f.g(), nu.g());
  if (std::isinf(p)) return NormEstimate::exact_value(linf_nu_norm(f, nu));
  std::vector<std::pair<double, XVector>> atoms;
  atoms.reserve(f.size());
  for (Element t = 0; t < f.size(); ++t) atoms.emplace_back(std::pow(std::abs(f(t)), p), nu[t]);
  auto e = dual_ball_sup(nu.space(), atoms, opts);
  return p == 1.0 ? e : pow(e, 1.0 / p);
}

/// N(F) = sup_{x'} int ||F|| d|<nu,x'>|, the norm of M_n(L^1(nu)).
inline NormEstimate N_norm(const MatrixFunction& f, const VectorMeasure& nu, const AscentOptions& opts = {}) {
  require_same_group(*f.group(), nu.g());
  std::vector<std::pair<double, XVector>> atoms;
  for (Element t = 0; t < nu.size(); ++t) atoms.emplace_back(linalg::op_norm(f(t)), nu[t]);
  return dual_ball_sup(nu.space(), atoms, opts);
}

/// N_w(F) = sup over the trace-class unit ball of M_n of ||<F, y'>||_nu.
/// Sampled at rank-one y' = u v* (the extreme points), with <A, u v*> = u* A v.
inline NormEstimate Nw_norm(const MatrixFunction& f, const VectorMeasure& nu, int samples, std::uint64_t seed,
                            const AscentOptions& opts = {}) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  require_same_group(*f.group(), nu.g());
  const auto n = static_cast<Eigen::Index>(f.level());
  if (n == 1) return lp_nu_norm(f.entry(0, 0), nu, 1.0, opts);
  auto upper = N_norm(f, nu, opts).upper;
  auto value = [&](const Vector& u, const Vector& v) {
    std::vector<cd> vals(f.values().size());
    for (std::size_t t = 0; t < vals.size(); ++t) vals[t] = u.dot(f(t) * v);
    return lp_nu_norm(ScalarFunction(f.group(), std::move(vals)), nu, 1.0, opts).lower;
  };
  double lower = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) lower = std::max(lower, value(Vector::Unit(n, i), Vector::Unit(n, j)));
  // Top singular directions of the values themselves are natural candidates.
  for (const auto& m : f.values()) {
    auto sp = linalg::top_singular_pair(m);
    if (sp.sigma > 0.0) lower = std::max(lower, value(sp.u, sp.v));
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) lower = std::max(lower, value(random_unit_vector(rng, n), random_unit_vector(rng, n)));
  return NormEstimate::bracket(lower, upper);
}

/// ||Phi||_{P_p(G,X)} = sup_{x'} ||<Phi, x'>||_p; also the Dunford p-norm.
inline NormEstimate Pp_norm(const VectorFunction& phi, double p, const AscentOptions& opts = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
  const double inv_n = 1.0 / static_cast<double>(phi.size());
  std::vector<XVector> v;
  v.reserve(phi.size());
  for (const auto& x : phi.values()) v.push_back(inv_n * x);
  return lp_dual_sup(v, p, opts);
}

/// (P) int_A Phi dm_G
inline XVector pettis_integral(const VectorFunction& phi, const ElementSet& a) {
  auto out = XVector::zero(phi.space_ptr());
  const double inv_n = 1.0 / static_cast<double>(phi.size());
  for (Element t : a) out.axpy(inv_n, phi(t));
  return out;
}
inline XVector pettis_integral(const VectorFunction& phi) { return pettis_integral(phi, all_elements(phi.g())); }

/// f_h = f o h^{-1}; translation tau_t f(s) = f(s t^{-1}), inversion f~(t) = f(t^{-1}).
inline ScalarFunction function_pushforward(const ScalarFunction& f, const GroupMap& h) {
  require_same_group(f.g(), *h.group());
  auto hinv = h.inverse();
  std::vector<cd> v(f.size());
  for (Element t = 0; t < v.size(); ++t) v[t] = f(hinv(t));
  return {f.group(), std::move(v)};
}

/// f~(t) = f(t^{-1})
inline ScalarFunction reflect(const ScalarFunction& f) {
  return function_pushforward(f, GroupMap::inversion(f.group()));
}

}  // namespace gvm

#pragma once

// Convolutions on a finite group.
//
//   f * g (t)         = (1/|G|) sum_s f(t s^-1) g(s)
//   f *_nu g (x')     = f * (g h_{x'})
//   f *^nu g (t)      = sum_s f(t s^-1) g(s) x_s         (an X-valued function)
//   (mu * nu)({s})    = sum_t mu({s t^-1}) x_t
//   (nu * mu)({s})    = sum_t x_{s t^-1} mu({t})
//   f_nu (t)          = sum_s f(t s^-1) x_s              (density of f * nu)
//
// Integrability provisos in the general theory are vacuous here: every sum is finite.

#include <stdexcept>
#include <vector>

#include "gvm/lp.hpp"
#include "gvm/vector_measure.hpp"

namespace gvm {

inline ScalarFunction conv_classical(const ScalarFunction& f, const ScalarFunction& g) {
  require_same_group(f.g(), g.g());
  const auto& grp = f.g();
  const std::size_t n = grp.order();
  std::vector<cd> v(n);
  for (Element t = 0; t < n; ++t) {
    cd acc = 0.0;
    for (Element s = 0; s < n; ++s) acc += f(grp.mul(t, grp.inv(s))) * g(s);
    v[t] = acc / static_cast<double>(n);
  }
  return {f.group(), std::move(v)};
}

inline ScalarFunction conv_weak(const ScalarFunction& f, const ScalarFunction& g, const VectorMeasure& nu,
                                const DualVector& xp) {
  require_same_group(f.g(), nu.g());
  return conv_classical(f, pointwise_product(g, radon_nikodym(nu, xp)));
}

inline VectorFunction conv_vector(const ScalarFunction& f, const ScalarFunction& g, const VectorMeasure& nu) {
  require_same_group(f.g(), g.g());
  require_same_group(f.g(), nu.g());
  const auto& grp = f.g();
  auto out = VectorFunction::zeros(f.group(), nu.space_ptr());
  for (Element t = 0; t < grp.order(); ++t)
    for (Element s = 0; s < grp.order(); ++s) out[t].axpy(f(grp.mul(t, grp.inv(s))) * g(s), nu[s]);
  return out;
}

/// mu * nu for a scalar measure mu.
inline VectorMeasure conv_measure_sv(const VectorMeasure& mu, const VectorMeasure& nu) {
  if (mu.space().kind() != SpaceKind::Scalar) throw std::invalid_argument("left factor must be a scalar measure");
  require_same_group(mu.g(), nu.g());
  const auto& grp = nu.g();
  auto out = VectorMeasure::zero(nu.group(), nu.space_ptr());
  for (Element s = 0; s < grp.order(); ++s)
    for (Element t = 0; t < grp.order(); ++t) out[s].axpy(mu[grp.mul(s, grp.inv(t))][0], nu[t]);
  return out;
}

/// nu * mu for a scalar measure mu.
inline VectorMeasure conv_measure_vs(const VectorMeasure& nu, const VectorMeasure& mu) {
  if (mu.space().kind() != SpaceKind::Scalar) throw std::invalid_argument("right factor must be a scalar measure");
  require_same_group(mu.g(), nu.g());
  const auto& grp = nu.g();
  auto out = VectorMeasure::zero(nu.group(), nu.space_ptr());
  for (Element s = 0; s < grp.order(); ++s)
    for (Element t = 0; t < grp.order(); ++t) out[s].axpy(mu[t][0], nu[grp.mul(s, grp.inv(t))]);
  return out;
}

/// f_nu, the density of f * nu w.r.t. m_G.
inline VectorFunction conv_function_measure(const ScalarFunction& f, const VectorMeasure& nu) {
  return conv_vector(f, ScalarFunction::constant(f.group(), 1.0), nu);
}

/// X-valued matrix times complex matrix: (A B)_ij = sum_k A_ik B_kj.
inline MatrixOverX block_product(const MatrixOverX& a, const Matrix& b) { return a * b; }

}  // namespace gvm

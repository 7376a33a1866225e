#pragma once

// Fourier transforms on a finite group with the 1/d_pi normalization
//
//   f^(pi)    = (1/d_pi) int f(t) pi(t)* dm_G(t)
//   f^nu(pi)  = (1/d_pi) int f(t) pi(t)* dnu(t)        in M_{d_pi}(X)
//   nu^(pi)   = (1/d_pi) int pi(t)* dnu(t)
//   f^_nu(x') = (f h_{x'})^
//
// so that ||f||_2^2 = sum_pi d_pi^3 tr(f^(pi)* f^(pi)) and
// f = sum_pi d_pi^2 tr(f^(pi) pi(.)). On Z_2 every d_pi = 1 and both reduce to
// the familiar two-point formulas, e.g. f^(chi_1) = (f(e) - f(a)) / 2.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gvm/dual.hpp"
#include "gvm/lp.hpp"
#include "gvm/vector_measure.hpp"

namespace gvm {

struct FourierCoefficients {
  DualPtr dual;
  std::vector<Matrix> blocks;  // one d_pi x d_pi block per irrep

  const Matrix& operator[](std::size_t k) const { return blocks[k]; }
};

struct VectorFourierCoefficients {
  DualPtr dual;
  SpacePtr space;
  std::vector<MatrixOverX> blocks;  // level d_pi (or n d_pi for amplified transforms)

  const MatrixOverX& operator[](std::size_t k) const { return blocks[k]; }
};

inline double max_block_difference(const FourierCoefficients& a, const FourierCoefficients& b) {
  if (a.blocks.size() != b.blocks.size()) throw std::invalid_argument("coefficient sets differ in size");
  double m = 0.0;
  for (std::size_t k = 0; k < a.blocks.size(); ++k) m = std::max(m, linalg::max_abs(a[k] - b[k]));
  return m;
}

inline double max_block_difference(const VectorFourierCoefficients& a, const VectorFourierCoefficients& b) {
  if (a.blocks.size() != b.blocks.size()) throw std::invalid_argument("coefficient sets differ in size");
  double m = 0.0;
  for (std::size_t k = 0; k < a.blocks.size(); ++k) m = std::max(m, max_entry_difference(a[k], b[k]));
  return m;
}

inline FourierCoefficients ft_classical(const ScalarFunction& f, const DualPtr& dual) {
  require_same_group(f.g(), *dual->group);
  const double n = static_cast<double>(f.size());
  FourierCoefficients out{dual, {}};
  for (const auto& pi : dual->irreps) {
    auto d = static_cast<Eigen::Index>(pi.dim);
    Matrix acc = Matrix::Zero(d, d);
    for (Element t = 0; t < f.size(); ++t) acc += f(t) * pi(t).adjoint();
    out.blocks.push_back(acc / (static_cast<double>(pi.dim) * n));
  }
  return out;
}

inline ScalarFunction ft_inverse(const FourierCoefficients& c) {
  const auto& dual = *c.dual;
  const std::size_t n = dual.group->order();
  std::vector<cd> v(n);
  for (std::size_t k = 0; k < dual.size(); ++k) {
    const double d = static_cast<double>(dual[k].dim);
    for (Element t = 0; t < n; ++t) v[t] += d * d * (c[k] * dual[k](t)).trace();
  }
  return {dual.group, std::move(v)};
}

struct PlancherelSides {
  double lhs = 0.0;  // ||f||_2^2
  double rhs = 0.0;  // sum d^3 tr(f^* f^)
};

inline PlancherelSides plancherel_check(const ScalarFunction& f, const DualPtr& dual) {
  PlancherelSides s;
  for (cd z : f.values()) s.lhs += std::norm(z);
  s.lhs /= static_cast<double>(f.size());
  auto c = ft_classical(f, dual);
  for (std::size_t k = 0; k < dual->size(); ++k) {
    const double d = static_cast<double>((*dual)[k].dim);
    s.rhs += d * d * d * (c[k].adjoint() * c[k]).trace().real();
  }
  return s;
}

inline VectorFourierCoefficients ft_vector(const ScalarFunction& f, const VectorMeasure& nu, const DualPtr& dual) {
  require_same_group(f.g(), nu.g());
  require_same_group(nu.g(), *dual->group);
  VectorFourierCoefficients out{dual, nu.space_ptr(), {}};
  for (const auto& pi : dual->irreps) {
    std::vector<Matrix> vals(f.size());
    const double inv_d = 1.0 / static_cast<double>(pi.dim);
    for (Element t = 0; t < f.size(); ++t) vals[t] = (inv_d * f(t)) * pi(t).adjoint();
    out.blocks.push_back(tensor_integrate(MatrixFunction(f.group(), pi.dim, std::move(vals)), nu));
  }
  return out;
}

inline VectorFourierCoefficients ft_measure(const VectorMeasure& nu, const DualPtr& dual) {
  return ft_vector(ScalarFunction::constant(nu.group(), 1.0), nu, dual);
}

inline FourierCoefficients ft_weak(const ScalarFunction& f, const VectorMeasure& nu, const DualVector& xp,
                                   const DualPtr& dual) {
  require_same_space(nu.space(), xp.space());
  return ft_classical(pointwise_product(f, radon_nikodym(nu, xp)), dual);
}

/// <<c, x'>> blockwise.
inline FourierCoefficients pair_blocks(const VectorFourierCoefficients& c, const DualVector& xp) {
  FourierCoefficients out{c.dual, {}};
  for (const auto& b : c.blocks) out.blocks.push_back(matrix_pair(b, xp));
  return out;
}

/// sup_pi ||c(pi)||_{M_{d_pi}(X)}
inline NormEstimate ft_sup_norm(const VectorFourierCoefficients& c, const AscentOptions& opts = {}) {
  NormEstimate best = NormEstimate::exact_value(0.0);
  for (const auto& b : c.blocks) best = max(best, amplified_norm(b, opts));
  return best;
}

inline double ft_sup_norm(const FourierCoefficients& c) {
  double m = 0.0;
  for (const auto& b : c.blocks) m = std::max(m, linalg::op_norm(b));
  return m;
}

/// Amplified transform of [f_ij] in M_n(L^1(nu)): block pi is [f_ij^nu(pi)] at level n d_pi,
/// row i d_pi + k, column j d_pi + l.
inline VectorFourierCoefficients ft_vector_amplified(const MatrixFunction& f, const VectorMeasure& nu,
                                                     const DualPtr& dual) {
  require_same_group(*f.group(), nu.g());
  VectorFourierCoefficients out{dual, nu.space_ptr(), {}};
  for (const auto& pi : dual->irreps) {
    std::vector<Matrix> vals(nu.size());
    const double inv_d = 1.0 / static_cast<double>(pi.dim);
    for (Element t = 0; t < nu.size(); ++t) vals[t] = inv_d * linalg::kron(f(t), pi(t).adjoint());
    out.blocks.push_back(tensor_integrate(MatrixFunction(f.group(), f.level() * pi.dim, std::move(vals)), nu));
  }
  return out;
}

/// Transform of an M_n(X)-valued measure (the matrix [nu_ij] of X-valued measures).
inline VectorFourierCoefficients ft_matrix_measure(const std::vector<MatrixOverX>& atoms, const DualPtr& dual) {
  const auto& g = *dual->group;
  if (atoms.size() != g.order()) throw std::invalid_argument("atom count does not match group order");
  const std::size_t n = atoms[0].level();
  VectorFourierCoefficients out{dual, atoms[0].space_ptr(), {}};
  for (const auto& pi : dual->irreps) {
    const std::size_t d = pi.dim;
    auto block = MatrixOverX::zero(atoms[0].space_ptr(), n * d);
    for (Element t = 0; t < g.order(); ++t) {
      Matrix ps = pi(t).adjoint() / static_cast<double>(d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l)
              block(i * d + k, j * d + l).axpy(ps(Eigen::Index(k), Eigen::Index(l)), atoms[t](i, j));
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

namespace detail {

inline void append_coords(std::vector<cd>& out, const VectorFourierCoefficients& c) {
  for (const auto& b : c.blocks)
    for (const auto& x : b.entries()) out.insert(out.end(), x.coords().begin(), x.coords().end());
}

inline std::size_t kernel_dimension(const std::vector<std::vector<cd>>& columns, double rel_tol) {
  if (columns.empty()) return 0;
  const auto rows = static_cast<Eigen::Index>(columns[0].size());
  Matrix m(rows, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, Eigen::Index(c)) = columns[c][std::size_t(r)];
  return columns.size() - linalg::rank(m, rel_tol);
}

}  // namespace detail

/// Kernel dimension of f -> f^nu on functions supported on the non-null atoms of nu.
inline std::size_t function_transform_kernel_dimension(const VectorMeasure& nu, const DualPtr& dual,
                                                       double rel_tol = 1e-8) {
  std::vector<std::vector<cd>> cols;
  for (Element t : nu.support()) {
    std::vector<cd> col;
    detail::append_coords(col, ft_vector(ScalarFunction::delta(nu.group(), t), nu, dual));
    cols.push_back(std::move(col));
  }
  return detail::kernel_dimension(cols, rel_tol);
}

/// Kernel dimension of f -> (x' -> f^_nu(x')), probing x' on the coordinate functionals.
inline std::size_t weak_transform_kernel_dimension(const VectorMeasure& nu, const DualPtr& dual,
                                                   double rel_tol = 1e-8) {
  std::vector<std::vector<cd>> cols;
  const std::size_t k = nu.space().coord_count();
  for (Element t : nu.support()) {
    std::vector<cd> col;
    for (std::size_t c = 0; c < k; ++c) {
      auto xp = DualVector::zero(nu.space_ptr());
      xp[c] = 1.0;
      for (const auto& b : ft_weak(ScalarFunction::delta(nu.group(), t), nu, xp, dual).blocks)
        col.insert(col.end(), b.data(), b.data() + b.size());
    }
    cols.push_back(std::move(col));
  }
  return detail::kernel_dimension(cols, rel_tol);
}

/// Kernel dimension of nu -> nu^ on all X-valued measures over the dual's group.
inline std::size_t measure_transform_kernel_dimension(const SpacePtr& space, const DualPtr& dual,
                                                      double rel_tol = 1e-8) {
  const auto& g = dual->group;
  std::vector<std::vector<cd>> cols;
  for (Element t = 0; t < g->order(); ++t)
    for (std::size_t c = 0; c < space->coord_count(); ++c) {
      auto x = XVector::zero(space);
      x[c] = 1.0;
      std::vector<cd> col;
      detail::append_coords(col, ft_measure(VectorMeasure::point_mass(g, t, x), dual));
      cols.push_back(std::move(col));
    }
  return detail::kernel_dimension(cols, rel_tol);
}

}  // namespace gvm

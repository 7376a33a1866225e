#pragma once

#include <algorithm>
#include <cmath>

#include "gvm/complex.hpp"

namespace gvm::linalg {

/// Largest singular value.
inline double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 || a.cols() == 1) return a.norm();
  if (a.rows() == 2 && a.cols() == 2) {
    // sigma_max^2 = (s + sqrt(s^2 - 4|det|^2)) / 2 with s = ||A||_F^2.
    double s = a.squaredNorm();
    double det = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    double disc = std::max(0.0, s * s - 4.0 * det * det);
    return std::sqrt(std::max(0.0, 0.5 * (s + std::sqrt(disc))));
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

/// Top singular triple (sigma, u, v) with a v = sigma u.
struct SingularPair {
  double sigma = 0.0;
  Vector u;
  Vector v;
};

inline SingularPair top_singular_pair(const Matrix& a) {
  if (a.rows() == 2 && a.cols() == 2) {
    // Largest eigenpair of the Hermitian 2x2 A*A in closed form.
    Eigen::Matrix2cd h = a.adjoint() * a;
    double p = h(0, 0).real(), q = h(1, 1).real();
    cd b = h(0, 1);
    double lambda = 0.5 * (p + q) + std::sqrt(0.25 * (p - q) * (p - q) + std::norm(b));
    Vector v(2);
    Vector v1(2), v2(2);
    v1 << b, lambda - p;
    v2 << lambda - q, std::conj(b);
    v = v1.squaredNorm() >= v2.squaredNorm() ? v1 : v2;
    double nv = v.norm();
    if (nv < 1e-300) {
      v << 1.0, 0.0;
    } else {
      v /= nv;
    }
    SingularPair out;
    Vector av = a * v;
    out.sigma = av.norm();
    out.v = v;
    if (out.sigma > 0.0) {
      out.u = av / out.sigma;
    } else {
      out.u = Vector::Zero(2);
      out.u(0) = 1.0;
    }
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SingularPair out;
  out.sigma = svd.singularValues()(0);
  out.u = svd.matrixU().col(0);
  out.v = svd.matrixV().col(0);
  return out;
}

inline double nuclear_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

/// Numerical rank with tolerance relative to the largest singular value.
inline std::size_t rank(const Matrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > rel_tol * s(0)) ++r;
  return r;
}

/// Kronecker product; entry (i*b.rows()+k, j*b.cols()+l) = a(i,j) b(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace gvm::linalg

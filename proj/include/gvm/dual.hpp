#pragma once

// Unitary duals of the built-in groups as curated representation tables, plus
// the residual checks that certify them (homomorphism, unitarity,
// irreducibility, Schur orthogonality, completeness).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvm/complex.hpp"
#include "gvm/function.hpp"
#include "gvm/group.hpp"
#include "gvm/linalg.hpp"

namespace gvm {

struct UnitaryIrrep {
  std::size_t dim = 1;
  std::vector<Matrix> matrices;  // pi(t) for every element t
  std::string label;

  const Matrix& operator()(Element t) const { return matrices[t]; }
  cd character(Element t) const { return matrices[t].trace(); }
};

struct UnitaryDual {
  GroupPtr group;
  std::vector<UnitaryIrrep> irreps;

  std::size_t size() const noexcept { return irreps.size(); }
  const UnitaryIrrep& operator[](std::size_t k) const { return irreps[k]; }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& pi : irreps) d.push_back(pi.dim);
    return d;
  }
};

using DualPtr = std::shared_ptr<const UnitaryDual>;

namespace detail {

inline UnitaryIrrep one_dim(const FiniteGroup& g, std::string label, auto&& value) {
  UnitaryIrrep pi{1, {}, std::move(label)};
  pi.matrices.reserve(g.order());
  for (Element t = 0; t < g.order(); ++t) pi.matrices.push_back(Matrix::Constant(1, 1, value(t)));
  return pi;
}

/// Orthonormal basis of the sum-zero subspace of C^n (Helmert columns).
inline Eigen::MatrixXd helmert_basis(std::size_t n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - 1));
  for (std::size_t k = 1; k < n; ++k) {
    double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t x = 0; x < k; ++x) b(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(k - 1)) = s;
    b(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = -static_cast<double>(k) * s;
  }
  return b;
}

/// Standard representation: permutation matrix restricted to the sum-zero subspace.
inline Matrix standard_rep(const std::vector<std::size_t>& perm) {
  std::size_t n = perm.size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) p(static_cast<Eigen::Index>(perm[x]), static_cast<Eigen::Index>(x)) = 1.0;
  Eigen::MatrixXd b = helmert_basis(n);
  return (b.transpose() * p * b).cast<cd>();
}

inline int parity(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) sign = -sign;
  return sign;
}

inline UnitaryDual cyclic_product_dual(const GroupPtr& g, const std::vector<std::size_t>& moduli) {
  UnitaryDual dual{g, {}};
  std::size_t order = g->order();
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
      d[k] = x % moduli[k];
      x /= moduli[k];
    }
    return d;
  };
  for (std::size_t m = 0; m < order; ++m) {
    auto dm = digits(m);
    std::string label = "chi(";
    for (std::size_t k = 0; k < dm.size(); ++k) label += (k ? "," : "") + std::to_string(dm[k]);
    label += ")";
    dual.irreps.push_back(one_dim(*g, label, [&](Element t) {
      auto dt = digits(t);
      cd value = 1.0;
      for (std::size_t k = 0; k < dt.size(); ++k) value *= root_of_unity(dm[k] * dt[k], moduli[k]);
      return value;
    }));
  }
  return dual;
}

inline UnitaryDual dihedral_dual(const GroupPtr& g, std::size_t n) {
  UnitaryDual dual{g, {}};
  auto rot = [n](Element x) { return x % n; };
  auto refl = [n](Element x) { return x / n; };
  dual.irreps.push_back(one_dim(*g, "trivial", [](Element) { return cd{1.0}; }));
  dual.irreps.push_back(one_dim(*g, "sign", [&](Element x) { return cd{refl(x) ? -1.0 : 1.0}; }));
  if (n % 2 == 0) {
    dual.irreps.push_back(one_dim(*g, "alt-r", [&](Element x) { return cd{rot(x) % 2 ? -1.0 : 1.0}; }));
    dual.irreps.push_back(one_dim(*g, "alt-rs", [&](Element x) {
      return cd{((rot(x) + refl(x)) % 2) ? -1.0 : 1.0};
    }));
  }
  for (std::size_t h = 1; 2 * h < n; ++h) {
    UnitaryIrrep pi{2, {}, "rho" + std::to_string(h)};
    for (Element x = 0; x < g->order(); ++x) {
      Matrix d = Matrix::Zero(2, 2);
      d(0, 0) = root_of_unity(h * rot(x), n);
      d(1, 1) = std::conj(d(0, 0));
      Matrix swap = Matrix::Zero(2, 2);
      swap(0, 1) = swap(1, 0) = 1.0;
      pi.matrices.push_back(refl(x) ? Matrix(d * swap) : d);
    }
    dual.irreps.push_back(std::move(pi));
  }
  return dual;
}

inline UnitaryDual symmetric_dual(const GroupPtr& g, std::size_t n) {
  UnitaryDual dual{g, {}};
  auto perms = groups::permutations(n);
  dual.irreps.push_back(one_dim(*g, "trivial", [](Element) { return cd{1.0}; }));
  if (n >= 2) dual.irreps.push_back(one_dim(*g, "sign", [&](Element t) { return cd{double(parity(perms[t]))}; }));
  if (n == 3) {
    UnitaryIrrep std2{2, {}, "standard"};
    for (const auto& p : perms) std2.matrices.push_back(standard_rep(p));
    dual.irreps.push_back(std::move(std2));
  }
  if (n == 4) {
    // S4 -> S3 through the action on the three pairings {01|23}, {02|13}, {03|12}.
    const std::array<std::array<std::size_t, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    auto pairing_index = [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& q = pairings[k];
        if ((q[0] == a && q[1] == b) || (q[0] == b && q[1] == a) || (q[2] == a && q[3] == b) ||
            (q[2] == b && q[3] == a))
          return k;
      }
      return std::size_t{3};
    };
    UnitaryIrrep two{2, {}, "pairings"};
    UnitaryIrrep std3{3, {}, "standard"};
    UnitaryIrrep std3s{3, {}, "standard-x-sign"};
    for (const auto& p : perms) {
      std::vector<std::size_t> image(3);
      for (std::size_t k = 0; k < 3; ++k) image[k] = pairing_index(p[pairings[k][0]], p[pairings[k][1]]);
      two.matrices.push_back(standard_rep(image));
      Matrix s = standard_rep(p);
      std3.matrices.push_back(s);
      std3s.matrices.push_back(double(parity(p)) * s);
    }
    dual.irreps.push_back(std::move(two));
    dual.irreps.push_back(std::move(std3));
    dual.irreps.push_back(std::move(std3s));
  }
  return dual;
}

inline UnitaryDual quaternion_dual(const GroupPtr& g) {
  UnitaryDual dual{g, {}};
  // Index order 1,-1,i,-i,j,-j,k,-k: unit = index / 2.
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      std::string label = std::string("chi(") + (a > 0 ? "+" : "-") + "," + (b > 0 ? "+" : "-") + ")";
      dual.irreps.push_back(one_dim(*g, label, [=](Element t) {
        switch (t / 2) {
          case 1: return cd{double(a)};
          case 2: return cd{double(b)};
          case 3: return cd{double(a * b)};
          default: return cd{1.0};
        }
      }));
    }
  auto mats = groups::quaternion_matrices();
  dual.irreps.push_back(UnitaryIrrep{2, std::vector<Matrix>(mats.begin(), mats.end()), "quaternion"});
  return dual;
}

}  // namespace detail

/// Curated unitary dual of a built-in group family.
inline DualPtr unitary_dual(const GroupPtr& g) {
  const auto& fam = g->family();
  using K = GroupFamily::Kind;
  switch (fam.kind) {
    case K::Cyclic:
    case K::CyclicProduct:
      return std::make_shared<const UnitaryDual>(detail::cyclic_product_dual(g, fam.params));
    case K::Dihedral:
      return std::make_shared<const UnitaryDual>(detail::dihedral_dual(g, fam.params.at(0)));
    case K::Symmetric:
      return std::make_shared<const UnitaryDual>(detail::symmetric_dual(g, fam.params.at(0)));
    case K::Quaternion:
      return std::make_shared<const UnitaryDual>(detail::quaternion_dual(g));
    case K::Custom:
      break;
  }
  throw std::invalid_argument("no curated dual for group '" + g->label() +
                              "'; supply a dual table file (see read_dual_table)");
}

struct DualValidationReport {
  double homomorphism = 0.0;
  double unitarity = 0.0;
  double irreducibility = 0.0;
  double orthogonality = 0.0;
  double completeness = 0.0;
  bool pass = false;

  double max_residual() const {
    return std::max({homomorphism, unitarity, irreducibility, orthogonality, completeness});
  }
};

/// Throws std::invalid_argument on structural mismatch (wrong matrix count or shape).
inline DualValidationReport validate_dual(const FiniteGroup& g, const UnitaryDual& dual, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = g.order();
  for (const auto& pi : dual.irreps) {
    if (pi.dim == 0) throw std::invalid_argument("irrep '" + pi.label + "' has dimension 0");
    if (pi.matrices.size() != n)
      throw std::invalid_argument("irrep '" + pi.label + "' has " + std::to_string(pi.matrices.size()) +
                                  " matrices for a group of order " + std::to_string(n));
    for (const auto& m : pi.matrices)
      if (m.rows() != static_cast<Eigen::Index>(pi.dim) || m.cols() != static_cast<Eigen::Index>(pi.dim))
        throw std::invalid_argument("irrep '" + pi.label + "' has a matrix of the wrong shape");
  }

  DualValidationReport r;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::size_t sum_sq = 0;
  for (const auto& pi : dual.irreps) {
    sum_sq += pi.dim * pi.dim;
    Matrix id = Matrix::Identity(static_cast<Eigen::Index>(pi.dim), static_cast<Eigen::Index>(pi.dim));
    double chi2 = 0.0;
    for (Element s = 0; s < n; ++s) {
      r.unitarity = std::max(r.unitarity, linalg::max_abs(pi(s) * pi(s).adjoint() - id));
      chi2 += std::norm(pi.character(s));
      for (Element t = 0; t < n; ++t)
        r.homomorphism = std::max(r.homomorphism, linalg::max_abs(pi(g.mul(s, t)) - pi(s) * pi(t)));
    }
    r.irreducibility = std::max(r.irreducibility, std::abs(chi2 * inv_n - 1.0));
  }
  for (std::size_t a = 0; a < dual.size(); ++a)
    for (std::size_t b = 0; b < dual.size(); ++b) {
      const auto& pi = dual[a];
      const auto& sigma = dual[b];
      for (std::size_t i = 0; i < pi.dim; ++i)
        for (std::size_t j = 0; j < pi.dim; ++j)
          for (std::size_t k = 0; k < sigma.dim; ++k)
            for (std::size_t l = 0; l < sigma.dim; ++l) {
              cd sum = 0.0;
              for (Element t = 0; t < n; ++t)
                sum += pi(t)(Eigen::Index(i), Eigen::Index(j)) * std::conj(sigma(t)(Eigen::Index(k), Eigen::Index(l)));
              double expect = (a == b && i == k && j == l) ? 1.0 / static_cast<double>(pi.dim) : 0.0;
              r.orthogonality = std::max(r.orthogonality, std::abs(sum * inv_n - expect));
            }
    }
  r.completeness = std::abs(static_cast<double>(sum_sq) - static_cast<double>(n));
  r.pass = r.max_residual() <= tol;
  return r;
}

/// t -> pi(t)_{ij} for irrep `k` of the dual (0-based i, j).
inline ScalarFunction matrix_coefficient(const UnitaryDual& dual, std::size_t k, std::size_t i, std::size_t j) {
  const auto& pi = dual.irreps.at(k);
  if (i >= pi.dim || j >= pi.dim)
    throw std::out_of_range("matrix coefficient index out of range for irrep of dimension " + std::to_string(pi.dim));
  std::vector<cd> v(pi.matrices.size());
  for (std::size_t t = 0; t < v.size(); ++t) v[t] = pi(t)(Eigen::Index(i), Eigen::Index(j));
  return {dual.group, std::move(v)};
}

/// Copy of `dual` with pi(t) of one irrep shifted by `eps` in entry (0,0); used for fault injection.
inline UnitaryDual perturbed_dual(const UnitaryDual& dual, std::size_t irrep, Element t, double eps) {
  UnitaryDual out = dual;
  out.irreps.at(irrep).matrices.at(t)(0, 0) += eps;
  return out;
}

}  // namespace gvm

#pragma once

// Scalar- and matrix-valued functions on a finite group. Every function on a
// finite group is simple, so these double as S(G).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gvm/complex.hpp"
#include "gvm/group.hpp"

namespace gvm {

class ScalarFunction {
 public:
  ScalarFunction(GroupPtr group, std::vector<cd> values) : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw std::invalid_argument("function needs a group");
    if (values_.size() != group_->order()) throw std::invalid_argument("function length does not match group order");
  }

  static ScalarFunction zeros(GroupPtr g) {
    auto n = g->order();
    return {std::move(g), std::vector<cd>(n)};
  }
  static ScalarFunction constant(GroupPtr g, cd c) {
    auto n = g->order();
    return {std::move(g), std::vector<cd>(n, c)};
  }
  static ScalarFunction indicator(GroupPtr g, const std::vector<Element>& set) {
    auto f = zeros(std::move(g));
    for (Element t : set) f.values_.at(t) = 1.0;
    return f;
  }
  static ScalarFunction delta(GroupPtr g, Element t) { return indicator(std::move(g), {t}); }

  const GroupPtr& group() const noexcept { return group_; }
  const FiniteGroup& g() const noexcept { return *group_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<cd>& values() const noexcept { return values_; }
  cd operator()(Element t) const { return values_[t]; }
  cd& operator[](Element t) { return values_[t]; }
  cd operator[](Element t) const { return values_[t]; }

  ScalarFunction& operator*=(cd c) {
    for (auto& v : values_) v *= c;
    return *this;
  }

 private:
  GroupPtr group_;
  std::vector<cd> values_;
};

inline ScalarFunction operator*(cd c, ScalarFunction f) { return f *= c; }

inline ScalarFunction pointwise_product(const ScalarFunction& f, const ScalarFunction& g) {
  require_same_group(f.g(), g.g());
  std::vector<cd> out(f.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = f(t) * g(t);
  return {f.group(), std::move(out)};
}

inline ScalarFunction operator-(const ScalarFunction& f, const ScalarFunction& g) {
  require_same_group(f.g(), g.g());
  std::vector<cd> out(f.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = f(t) - g(t);
  return {f.group(), std::move(out)};
}

/// t -> |f(t)|^p
inline ScalarFunction abs_pow(const ScalarFunction& f, double p) {
  std::vector<cd> out(f.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = std::pow(std::abs(f(t)), p);
  return {f.group(), std::move(out)};
}

inline double max_abs_difference(const ScalarFunction& f, const ScalarFunction& g) {
  require_same_group(f.g(), g.g());
  double m = 0.0;
  for (std::size_t t = 0; t < f.size(); ++t) m = std::max(m, std::abs(f(t) - g(t)));
  return m;
}

/// An n x n complex matrix per group element (an element of M_n(S(G))).
class MatrixFunction {
 public:
  MatrixFunction(GroupPtr group, std::size_t n, std::vector<Matrix> values)
      : group_(std::move(group)), n_(n), values_(std::move(values)) {
    if (!group_) throw std::invalid_argument("function needs a group");
    if (values_.size() != group_->order()) throw std::invalid_argument("function length does not match group order");
    for (const auto& m : values_)
      if (m.rows() != static_cast<Eigen::Index>(n_) || m.cols() != static_cast<Eigen::Index>(n_))
        throw std::invalid_argument("matrix function values must all be n x n");
  }

  /// Level-1 matrix function from a scalar function.
  static MatrixFunction from_scalar(const ScalarFunction& f) {
    std::vector<Matrix> v(f.size(), Matrix(1, 1));
    for (std::size_t t = 0; t < f.size(); ++t) v[t](0, 0) = f(t);
    return {f.group(), 1, std::move(v)};
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t level() const noexcept { return n_; }
  const Matrix& operator()(Element t) const { return values_[t]; }
  const std::vector<Matrix>& values() const noexcept { return values_; }

  ScalarFunction entry(std::size_t i, std::size_t j) const {
    std::vector<cd> v(values_.size());
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = values_[t](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return {group_, std::move(v)};
  }

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<Matrix> values_;
};

}  // namespace gvm

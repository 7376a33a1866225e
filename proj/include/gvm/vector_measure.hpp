#pragma once

// X-valued measures on a finite group. Every such measure is atomic, regular
// and absolutely continuous w.r.t. Haar measure, so a measure is nothing more
// than its atoms x_t = nu({t}).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gvm/coeff_space.hpp"
#include "gvm/function.hpp"
#include "gvm/group.hpp"

namespace gvm {

using ElementSet = std::vector<Element>;

inline ElementSet all_elements(const FiniteGroup& g) {
  ElementSet a(g.order());
  std::iota(a.begin(), a.end(), Element{0});
  return a;
}

class VectorMeasure {
 public:
  VectorMeasure(GroupPtr group, SpacePtr space, std::vector<XVector> atoms)
      : group_(std::move(group)), space_(std::move(space)), atoms_(std::move(atoms)) {
    if (!group_ || !space_) throw std::invalid_argument("measure needs a group and a space");
    if (atoms_.size() != group_->order()) throw std::invalid_argument("atom count does not match group order");
    for (const auto& x : atoms_) require_same_space(*space_, x.space());
  }

  static VectorMeasure zero(GroupPtr g, SpacePtr s) {
    std::vector<XVector> a(g->order(), XVector::zero(s));
    return {std::move(g), std::move(s), std::move(a)};
  }
  /// x0 at t, zero elsewhere.
  static VectorMeasure point_mass(GroupPtr g, Element t, const XVector& x0) {
    auto m = zero(std::move(g), x0.space_ptr());
    m.atoms_.at(t) = x0;
    return m;
  }
  /// x0 * m_G: every atom is x0 / |G|.
  static VectorMeasure haar_multiple(GroupPtr g, const XVector& x0) {
    auto n = g->order();
    std::vector<XVector> a(n, (1.0 / static_cast<double>(n)) * x0);
    return {std::move(g), x0.space_ptr(), std::move(a)};
  }

  const GroupPtr& group() const noexcept { return group_; }
  const FiniteGroup& g() const noexcept { return *group_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const CoefficientSpace& space() const noexcept { return *space_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<XVector>& atoms() const noexcept { return atoms_; }
  const XVector& operator[](Element t) const { return atoms_[t]; }
  XVector& operator[](Element t) { return atoms_[t]; }

  /// Atoms that are nonzero; the others are nu-null.
  ElementSet support() const {
    ElementSet s;
    for (Element t = 0; t < atoms_.size(); ++t)
      if (!atoms_[t].is_zero()) s.push_back(t);
    return s;
  }

 private:
  GroupPtr group_;
  SpacePtr space_;
  std::vector<XVector> atoms_;
};

/// A complex measure (space = Scalar).
inline VectorMeasure scalar_measure(GroupPtr g, const std::vector<cd>& values) {
  auto s = make_space(CoefficientSpace::scalar());
  if (values.size() != g->order()) throw std::invalid_argument("atom count does not match group order");
  std::vector<XVector> a;
  for (cd v : values) a.emplace_back(s, std::vector<cd>{v});
  return {std::move(g), std::move(s), std::move(a)};
}

inline VectorMeasure dirac(GroupPtr g, Element t) {
  auto n = g->order();
  std::vector<cd> v(n);
  v.at(t) = 1.0;
  return scalar_measure(std::move(g), v);
}

inline void require_same_measure_frame(const VectorMeasure& a, const VectorMeasure& b) {
  require_same_group(a.g(), b.g());
  require_same_space(a.space(), b.space());
}

inline double max_atom_difference(const VectorMeasure& a, const VectorMeasure& b) {
  require_same_measure_frame(a, b);
  double m = 0.0;
  for (Element t = 0; t < a.size(); ++t) m = std::max(m, norm(a[t] - b[t]));
  return m;
}

/// A bijection of G.
class GroupMap {
 public:
  GroupMap(GroupPtr g, std::vector<Element> table) : group_(std::move(g)), table_(std::move(table)) {
    if (!group_) throw std::invalid_argument("map needs a group");
    if (table_.size() != group_->order()) throw std::invalid_argument("map table length does not match group order");
    std::vector<bool> hit(table_.size(), false);
    for (Element e : table_) {
      if (e >= table_.size() || hit[e]) throw std::invalid_argument("group map is not a bijection");
      hit[e] = true;
    }
  }

  static GroupMap identity(GroupPtr g) { return {g, all_elements(*g)}; }
  /// tau_t : s -> s t
  static GroupMap translation(GroupPtr g, Element t) {
    std::vector<Element> tab(g->order());
    for (Element s = 0; s < tab.size(); ++s) tab[s] = g->mul(s, t);
    return {std::move(g), std::move(tab)};
  }
  /// t -> t^{-1}
  static GroupMap inversion(GroupPtr g) {
    std::vector<Element> tab(g->order());
    for (Element s = 0; s < tab.size(); ++s) tab[s] = g->inv(s);
    return {std::move(g), std::move(tab)};
  }

  const GroupPtr& group() const noexcept { return group_; }
  Element operator()(Element s) const { return table_[s]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  GroupMap inverse() const {
    std::vector<Element> tab(table_.size());
    for (Element s = 0; s < tab.size(); ++s) tab[table_[s]] = s;
    return {group_, std::move(tab)};
  }

 private:
  GroupPtr group_;
  std::vector<Element> table_;
};

/// (h o k)(s) = h(k(s))
inline GroupMap compose(const GroupMap& h, const GroupMap& k) {
  require_same_group(*h.group(), *k.group());
  std::vector<Element> tab(h.table().size());
  for (Element s = 0; s < tab.size(); ++s) tab[s] = h(k(s));
  return {h.group(), std::move(tab)};
}

inline XVector evaluate(const VectorMeasure& nu, const ElementSet& a) {
  auto out = XVector::zero(nu.space_ptr());
  for (Element t : a) out += nu[t];
  return out;
}

inline VectorMeasure scalarize(const VectorMeasure& nu, const DualVector& xp) {
  std::vector<cd> v(nu.size());
  for (Element t = 0; t < v.size(); ++t) v[t] = pair(nu[t], xp);
  return scalar_measure(nu.group(), v);
}

/// |nu|(A); the singleton partition attains the supremum.
inline double variation(const VectorMeasure& nu, const ElementSet& a) {
  double acc = 0.0;
  for (Element t : a) acc += norm(nu[t]);
  return acc;
}
inline double variation(const VectorMeasure& nu) { return variation(nu, all_elements(nu.g())); }

inline NormEstimate semivariation(const VectorMeasure& nu, const ElementSet& a, const AscentOptions& opts = {}) {
  std::vector<XVector> v;
  v.reserve(a.size());
  for (Element t : a) v.push_back(nu[t]);
  return lp_dual_sup(v, 1.0, opts);
}
inline NormEstimate semivariation(const VectorMeasure& nu, const AscentOptions& opts = {}) {
  return semivariation(nu, all_elements(nu.g()), opts);
}

/// ||nu||_{p,m_G} = ||T_nu : L^{p'}(G) -> X|| = sup_{x'} ||h_{x'}||_p.
/// The upper end of a bracket is || t -> |G| ||x_t|| ||_p, i.e. |G|^{1/p'} (sum_t ||x_t||^p)^{1/p}.
inline NormEstimate p_semivariation(const VectorMeasure& nu, double p, const AscentOptions& opts = {}) {
  if (!(p > 1.0)) throw std::invalid_argument("p-semivariation needs p > 1");
  return lp_dual_sup(nu.atoms(), p, opts);
}

/// h_{x'} = d<nu, x'> / dm_G, i.e. t -> |G| <x_t, x'>.
inline ScalarFunction radon_nikodym(const VectorMeasure& nu, const DualVector& xp) {
  std::vector<cd> v(nu.size());
  const double n = static_cast<double>(nu.size());
  for (Element t = 0; t < v.size(); ++t) v[t] = n * pair(nu[t], xp);
  return {nu.group(), std::move(v)};
}

/// nu_h(A) = nu(h(A)), so the atom at t is x_{h(t)}.
inline VectorMeasure pushforward(const VectorMeasure& nu, const GroupMap& h) {
  require_same_group(nu.g(), *h.group());
  std::vector<XVector> a;
  a.reserve(nu.size());
  for (Element t = 0; t < nu.size(); ++t) a.push_back(nu[h(t)]);
  return {nu.group(), nu.space_ptr(), std::move(a)};
}

/// nu_f(A) = int_A f dnu
inline VectorMeasure measure_from_density(const VectorMeasure& nu, const ScalarFunction& f) {
  require_same_group(nu.g(), f.g());
  std::vector<XVector> a;
  a.reserve(nu.size());
  for (Element t = 0; t < nu.size(); ++t) a.push_back(f(t) * nu[t]);
  return {nu.group(), nu.space_ptr(), std::move(a)};
}

inline XVector integrate(const ScalarFunction& f, const VectorMeasure& nu) {
  require_same_group(nu.g(), f.g());
  auto out = XVector::zero(nu.space_ptr());
  for (Element t = 0; t < nu.size(); ++t) out.axpy(f(t), nu[t]);
  return out;
}

/// int F dnu in M_n(X): entry (i,j) is sum_t F(t)_ij x_t.
inline MatrixOverX tensor_integrate(const MatrixFunction& f, const VectorMeasure& nu) {
  require_same_group(nu.g(), *f.group());
  const std::size_t n = f.level();
  auto out = MatrixOverX::zero(nu.space_ptr(), n);
  for (Element t = 0; t < nu.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j).axpy(f(t)(Eigen::Index(i), Eigen::Index(j)), nu[t]);
  return out;
}

/// |<nu,x'>|(A) <= k m_G(A) for all A, x'; on a finite group this is |G| max_t ||x_t|| <= k.
inline bool is_k_scalarly_bounded(const VectorMeasure& nu, double k) {
  if (k < 0.0) throw std::invalid_argument("k must be non-negative");
  double m = 0.0;
  for (const auto& x : nu.atoms()) m = std::max(m, norm(x));
  return static_cast<double>(nu.size()) * m <= k * (1.0 + 1e-12);
}

/// Semivariation over G of an M_n(X)-valued atomic measure, sup_{|e_t|<=1} ||sum_t e_t X_t||.
/// Lower: best phase combination found; upper: the variation sum_t ||X_t||.
inline NormEstimate matrix_measure_semivariation(const std::vector<MatrixOverX>& atoms, const AscentOptions& opts = {}) {
  if (atoms.empty()) return NormEstimate::exact_value(0.0);
  double upper = 0.0, lower = 0.0;
  for (const auto& x : atoms) {
    auto e = amplified_norm(x, opts);
    upper += e.upper;
    lower = std::max(lower, e.lower);
  }
  auto combo = [&](const std::vector<cd>& phases) {
    auto acc = MatrixOverX::zero(atoms[0].space_ptr(), atoms[0].level());
    for (std::size_t t = 0; t < atoms.size(); ++t)
      for (std::size_t k = 0; k < acc.entries().size(); ++k)
        acc(k / acc.level(), k % acc.level()).axpy(phases[t], atoms[t].entries()[k]);
    return amplified_norm(acc, opts).lower;
  };
  lower = std::max(lower, combo(std::vector<cd>(atoms.size(), 1.0)));
  Rng rng(opts.seed);
  int tries = std::min(opts.restarts, 8);
  for (int r = 0; r < tries; ++r) {
    std::vector<cd> ph(atoms.size());
    for (auto& z : ph) z = random_phase(rng);
    lower = std::max(lower, combo(ph));
  }
  if (atoms.size() == 1) return NormEstimate{lower, upper, lower == upper};
  return NormEstimate::bracket(lower, upper);
}

/// Result of sampling the semivariation h-invariance condition ||(nu_h)_phi|| = ||nu_phi||.
struct InvarianceReport {
  std::size_t tested = 0;
  double max_certified_gap = 0.0;  // > 0 only when the two brackets are disjoint
  double max_estimate_gap = 0.0;   // gap between bracket midpoints
  bool refuted = false;
  ScalarFunction witness;  // test function with the largest certified gap (zero if none)
};

inline InvarianceReport check_semivariation_invariance(const VectorMeasure& nu, const GroupMap& h, int trials,
                                                       std::uint64_t seed, double tol = 1e-8,
                                                       const AscentOptions& opts = {}) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  require_same_group(nu.g(), *h.group());
  const auto& g = nu.group();
  const std::size_t n = g->order();
  auto nu_h = pushforward(nu, h);
  InvarianceReport rep{0, 0.0, 0.0, false, ScalarFunction::zeros(g)};

  auto test = [&](const ScalarFunction& phi) {
    auto a = semivariation(measure_from_density(nu_h, phi), opts);
    auto b = semivariation(measure_from_density(nu, phi), opts);
    double gap = std::max({0.0, a.lower - b.upper, b.lower - a.upper});
    rep.max_estimate_gap = std::max(rep.max_estimate_gap, std::abs(a.mid() - b.mid()));
    if (gap > rep.max_certified_gap) {
      rep.max_certified_gap = gap;
      rep.witness = phi;
    }
    ++rep.tested;
  };

  for (Element t = 0; t < n; ++t) test(ScalarFunction::delta(g, t));
  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r < trials; ++r) {
    ElementSet s;
    for (Element t = 0; t < n; ++t)
      if (coin(rng)) s.push_back(t);
    test(ScalarFunction::indicator(g, s));
  }
  for (int r = 0; r < trials; ++r) {
    std::vector<cd> v(n);
    for (auto& z : v) z = random_gaussian(rng);
    test(ScalarFunction(g, std::move(v)));
  }
  rep.refuted = rep.max_certified_gap > tol;
  return rep;
}

}  // namespace gvm

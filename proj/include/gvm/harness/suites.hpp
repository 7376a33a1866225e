#pragma once

// Verification suites: each samples instances of one identity or inequality and tallies
// certified violations. Trial i runs on group i mod |groups| and space (i / |groups|) mod |spaces|,
// so the first |groups| trials already visit every group.

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvm/convolution.hpp"
#include "gvm/fourier.hpp"
#include "gvm/harness/config.hpp"
#include "gvm/harness/fixtures.hpp"
#include "gvm/harness/report.hpp"

namespace gvm::harness {

inline double conj_exp(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}
inline double recip(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }
/// Exponent with the given reciprocal (0 -> inf).
inline double from_recip(double r) { return r <= 1e-15 ? kInf : 1.0 / r; }

inline const std::vector<double>& exponent_grid() {
  static const std::vector<double> e{1.0, 1.5, 2.0, 3.0, 4.0};
  return e;
}

inline std::string fmt_exp(double p) {
  if (std::isinf(p)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", p);
  return buf;
}

class SuiteContext {
 public:
  SuiteContext(const RunConfig& cfg, const std::string& suite, std::size_t default_trials)
      : cfg_(cfg), rng_(derive_seed(cfg.seed, suite)) {
    for (const auto& spec : cfg.groups) {
      auto gc = make_group_case(spec);
      if (cfg.fault == Fault::PerturbedIrrep) {
        Element t = gc.group->order() > 1 ? 1 : 0;
        gc.dual = std::make_shared<const UnitaryDual>(perturbed_dual(*gc.dual, gc.dual->size() - 1, t, 1e-3));
      }
      groups_.push_back(std::move(gc));
    }
    for (const auto& s : cfg.spaces) spaces_.push_back(parse_space(s));
    trials_ = cfg.trials > 0 ? static_cast<std::size_t>(cfg.trials) : default_trials;
    opts_.restarts = cfg.restarts;
    opts_.seed = derive_seed(cfg.seed, suite + "/ascent");
  }

  const RunConfig& cfg() const { return cfg_; }
  Fault fault() const { return cfg_.fault; }
  std::size_t trials() const { return trials_; }
  const AscentOptions& opts() const { return opts_; }
  Rng& rng() { return rng_; }
  std::uint64_t next_seed() { return rng_(); }

  const std::vector<GroupCase>& groups() const { return groups_; }
  const std::vector<SpacePtr>& spaces() const { return spaces_; }
  const GroupCase& group(std::size_t i) const { return groups_[i % groups_.size()]; }
  const SpacePtr& space(std::size_t i) const { return spaces_[(i / groups_.size()) % spaces_.size()]; }
  /// Pass index over the whole (group, space) grid.
  std::size_t sweep(std::size_t i) const { return i / (groups_.size() * spaces_.size()); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng_)];
  }

  ScalarFunction function(const GroupCase& gc) { return random_function(gc.group, rng_); }
  DualVector dual_vector(const SpacePtr& s) { return random_dual(s, rng_); }
  VectorMeasure measure(FixtureKind k, const GroupCase& gc, const SpacePtr& s) {
    return generate_fixture(k, gc.group, s, next_seed());
  }

  /// Alternates random-gaussian and haar-like measures by sweep.
  VectorMeasure mixed_measure(std::size_t i) {
    return measure(sweep(i) % 2 ? FixtureKind::HaarLike : FixtureKind::RandomGaussian, group(i), space(i));
  }

  /// Vector transform as computed under the configured fault.
  VectorFourierCoefficients ftv(const ScalarFunction& f, const VectorMeasure& nu, const DualPtr& dual) const {
    auto c = ft_vector(f, nu, dual);
    if (cfg_.fault == Fault::DropInvDimFt)
      for (std::size_t k = 0; k < c.blocks.size(); ++k) c.blocks[k] *= cd(double((*dual)[k].dim));
    return c;
  }
  /// d_pi, or 1 when the fault drops it from the given identity.
  double dim_factor(std::size_t d, Fault dropped) const { return cfg_.fault == dropped ? 1.0 : double(d); }

  /// A fixture satisfying the semivariation invariance hypothesis (under translations and inversion),
  /// re-checked once per (group, space, kind) before use. Empty when the re-check fails.
  std::optional<VectorMeasure> invariant_fixture(std::size_t i, Tally& tally) {
    const auto& gc = group(i);
    SpacePtr s = space(i);
    FixtureKind kind = FixtureKind::HaarLike;
    if (s->kind() == SpaceKind::LinfK && sweep(i) % 2 == 1) {
      kind = FixtureKind::TranslationInvariant;
      s = make_space(CoefficientSpace::linf(std::max(s->param(), gc.group->order())));
    }
    auto nu = measure(kind, gc, s);
    std::string key = gc.spec + "|" + s->label() + "|" + fixture_name(kind);
    auto it = precheck_.find(key);
    if (it == precheck_.end()) {
      AscentOptions quick = opts_;
      quick.restarts = std::min(opts_.restarts, 8);
      bool ok = true;
      const auto& g = gc.group;
      for (Element t = 0; t < g->order() && ok; ++t)
        ok = !check_semivariation_invariance(nu, GroupMap::translation(g, t), 1, next_seed(), cfg_.tol_bracket, quick)
                  .refuted;
      if (ok)
        ok = !check_semivariation_invariance(nu, GroupMap::inversion(g), 1, next_seed(), cfg_.tol_bracket, quick).refuted;
      it = precheck_.emplace(key, ok).first;
    }
    if (!it->second) {
      tally.skip("fixture " + key + " failed the invariance re-check");
      return std::nullopt;
    }
    tally.note("invariant fixtures: haar-like, and translation-invariant on linf spaces; re-checked at start");
    return nu;
  }

 private:
  const RunConfig& cfg_;
  Rng rng_;
  std::vector<GroupCase> groups_;
  std::vector<SpacePtr> spaces_;
  std::size_t trials_ = 0;
  AscentOptions opts_;
  std::map<std::string, bool> precheck_;
};

using SuiteFn = std::function<void(SuiteContext&, Tally&)>;

struct SuiteInfo {
  std::string id;
  std::string anchor;
  std::size_t default_trials;
  SuiteFn run;
};

namespace suites {

inline double block_diff(const FourierCoefficients& a, const FourierCoefficients& b) { return max_block_difference(a, b); }

inline void dual_validation(SuiteContext& c, Tally& t) {
  for (const auto& gc : c.groups()) {
    auto r = validate_dual(*gc.group, *gc.dual, c.cfg().tol_exact);
    t.exact(r.max_residual());
    t.instance();
  }
}

inline void plancherel(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    auto f = c.function(gc);
    auto s = plancherel_check(f, gc.dual);
    t.exact(std::abs(s.lhs - s.rhs));
    t.exact(max_abs_difference(ft_inverse(ft_classical(f, gc.dual)), f));
    t.instance();
  }
}

inline void weak_plancherel(SuiteContext& c, Tally& t) {
  t.note("nu is k-scalarly bounded with k = |G| max ||x_t||, so the hypothesis always holds on finite G");
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc);
    auto xp = c.dual_vector(s);
    double k = 0.0;
    for (const auto& x : nu.atoms()) k = std::max(k, norm(x));
    t.require(is_k_scalarly_bounded(nu, double(gc.group->order()) * k));
    auto fh = pointwise_product(f, radon_nikodym(nu, xp));
    auto w = ft_weak(f, nu, xp, gc.dual);
    double lhs = 0.0, rhs = 0.0;
    for (cd z : fh.values()) lhs += std::norm(z);
    lhs /= double(fh.size());
    for (std::size_t q = 0; q < w.blocks.size(); ++q) {
      double d = double((*gc.dual)[q].dim);
      rhs += d * d * d * (w[q].adjoint() * w[q]).trace().real();
    }
    t.exact(std::abs(lhs - rhs) / std::max(1.0, lhs));
    t.exact(max_abs_difference(ft_inverse(w), fh));
    t.instance();
  }
}

inline void bounds_fn(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto kind = i % 5 == 4 ? FixtureKind::PointMass : FixtureKind::RandomGaussian;
    auto nu = c.measure(kind, gc, s);
    auto f = c.function(gc);
    t.at_most(ft_sup_norm(c.ftv(f, nu, gc.dual), c.opts()), lp_nu_norm(f, nu, 1.0, c.opts()));
    t.instance();
  }
}

inline void bounds_weak(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc);
    auto xp = c.dual_vector(s);
    t.at_most(ft_sup_norm(ft_weak(f, nu, xp, gc.dual)), dual_norm(xp) * lp_nu_norm(f, nu, 1.0, c.opts()));
    t.instance();
  }
}

inline void bounds_measure(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(i % 5 == 4 ? FixtureKind::PointMass : FixtureKind::RandomGaussian, gc, s);
    t.at_most(ft_sup_norm(ft_measure(nu, gc.dual), c.opts()), semivariation(nu, c.opts()));
    t.instance();
  }
}

inline void cb_fn(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    const std::size_t n = 1 + c.sweep(i) % 3;
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto F = random_matrix_function(gc.group, n, c.rng());
    auto rhs = N_norm(F, nu, c.opts());
    auto amp = ft_vector_amplified(F, nu, gc.dual);
    if (c.fault() == Fault::DropInvDimFt)
      for (std::size_t k = 0; k < amp.blocks.size(); ++k) amp.blocks[k] *= cd(double((*gc.dual)[k].dim));
    t.at_most(ft_sup_norm(amp, c.opts()), rhs);
    t.at_most(amplified_norm(tensor_integrate(F, nu), c.opts()), rhs);
    t.instance();
  }
}

inline void cb_measure(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    const std::size_t n = 1 + c.sweep(i) % 3;
    const double scale = 1.0 / double(n * gc.group->order());
    std::vector<MatrixOverX> atoms;
    for (Element u = 0; u < gc.group->order(); ++u) {
      std::vector<XVector> e;
      for (std::size_t k = 0; k < n * n; ++k) e.push_back(scale * random_vector(s, c.rng()));
      atoms.emplace_back(n, std::move(e));
    }
    t.at_most(ft_sup_norm(ft_matrix_measure(atoms, gc.dual), c.opts()), matrix_measure_semivariation(atoms, c.opts()));
    t.instance();
  }
}

inline void pairing(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc);
    auto xp = c.dual_vector(s);
    t.exact(block_diff(pair_blocks(c.ftv(f, nu, gc.dual), xp), ft_weak(f, nu, xp, gc.dual)));
    t.instance();
  }
}

inline void ft_density(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc);
    auto xp = c.dual_vector(s);
    auto nf = ft_measure(measure_from_density(nu, f), gc.dual);
    t.exact(max_block_difference(c.ftv(f, nu, gc.dual), nf));
    t.exact(block_diff(ft_weak(f, nu, xp, gc.dual), pair_blocks(nf, xp)));
    t.instance();
  }
}

inline void scalarization(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc), g = c.function(gc);
    auto xp = c.dual_vector(s);
    t.exact(max_abs_difference(scalarize(conv_vector(f, g, nu), xp), conv_weak(f, g, nu, xp)));
    t.instance();
  }
}

inline void ft_conv_weak(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc), g = c.function(gc);
    auto xp = c.dual_vector(s);
    auto lhs = ft_classical(conv_weak(f, g, nu, xp), gc.dual);
    auto gv = c.ftv(g, nu, gc.dual);
    auto fh = ft_classical(f, gc.dual);
    FourierCoefficients rhs{gc.dual, {}};
    for (std::size_t k = 0; k < gc.dual->size(); ++k)
      rhs.blocks.push_back(c.dim_factor((*gc.dual)[k].dim, Fault::DropDimConv6) * matrix_pair(gv[k] * fh[k], xp));
    t.exact(block_diff(lhs, rhs));
    // Entrywise: (g^nu f^)_ij = d^-2 int (f~ * conj(pi_ji)) g dnu.
    const auto ft = reflect(f);
    for (std::size_t k = 0; k < gc.dual->size(); ++k) {
      const auto& pi = (*gc.dual)[k];
      auto prod = gv[k] * fh[k];
      const double d = double(pi.dim);
      for (std::size_t a = 0; a < pi.dim; ++a)
        for (std::size_t b = 0; b < pi.dim; ++b) {
          auto phi = matrix_coefficient(*gc.dual, k, b, a);
          std::vector<cd> v(phi.size());
          for (Element u = 0; u < v.size(); ++u) v[u] = std::conj(phi(u));
          auto psi = conv_classical(ft, ScalarFunction(gc.group, std::move(v)));
          auto x = (1.0 / (d * d)) * integrate(pointwise_product(psi, g), nu);
          t.exact(norm(prod(a, b) - x));
        }
    }
    t.instance();
  }
}

inline void ft_conv_measure(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto mv = c.function(gc);
    auto mu = scalar_measure(gc.group, mv.values());
    // mu^(pi) = (1/d) sum_t mu_t pi(t)*, the classical transform of |G| mu.
    auto muh = ft_classical(double(gc.group->order()) * mv, gc.dual);
    auto nuh = ft_measure(nu, gc.dual);
    auto lhs = ft_measure(conv_measure_sv(mu, nu), gc.dual);
    VectorFourierCoefficients rhs{gc.dual, s, {}};
    for (std::size_t k = 0; k < gc.dual->size(); ++k)
      rhs.blocks.push_back(cd(c.dim_factor((*gc.dual)[k].dim, Fault::DropDimConv8)) * (nuh[k] * muh[k]));
    t.exact(max_block_difference(lhs, rhs));
    t.instance();
  }
}

inline void pettis(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    const auto& grp = *gc.group;
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc), g = c.function(gc);
    auto phi = conv_vector(f, g, nu);
    cd mean = 0.0;
    for (cd z : f.values()) mean += z;
    mean /= double(f.size());
    t.exact(norm(pettis_integral(phi) - mean * integrate(g, nu)));
    ElementSet a;
    std::bernoulli_distribution coin(0.5);
    for (Element u = 0; u < grp.order(); ++u)
      if (coin(c.rng())) a.push_back(u);
    auto xa = XVector::zero(s);
    for (Element v = 0; v < grp.order(); ++v) {
      cd w = 0.0;
      for (Element u : a) w += f(grp.mul(u, grp.inv(v)));
      xa.axpy(w / double(grp.order()) * g(v), nu[v]);
    }
    t.exact(norm(pettis_integral(phi, a) - xa));
    t.at_most(Pp_norm(phi, 1.0, c.opts()), lp_norm_haar(f, 1.0) * lp_nu_norm(g, nu, 1.0, c.opts()));
    t.instance();
  }
}

inline void duality(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    auto f = c.function(gc), g = c.function(gc), phi = c.function(gc);
    auto xp = c.dual_vector(s);
    auto cw = conv_weak(f, g, nu, xp);
    cd lhs = 0.0;
    for (Element u = 0; u < cw.size(); ++u) lhs += cw(u) * phi(u);
    lhs /= double(cw.size());
    cd rhs = pair(integrate(pointwise_product(conv_classical(reflect(f), phi), g), nu), xp);
    t.exact(std::abs(lhs - rhs));
    t.instance();
  }
}

inline void uniqueness_fn(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
    if (c.sweep(i) % 2 == 1) {
      std::uniform_int_distribution<Element> pick(0, gc.group->order() - 1);
      nu[pick(c.rng())] = XVector::zero(s);
      t.note("odd sweeps zero one atom: functions agreeing off a null set are identified");
    }
    t.require(function_transform_kernel_dimension(nu, gc.dual) == 0);
    t.require(weak_transform_kernel_dimension(nu, gc.dual) == 0);
    t.instance();
  }
}

inline void uniqueness_measure(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    t.require(measure_transform_kernel_dimension(c.space(i), c.group(i).dual) == 0);
    t.instance();
  }
}

inline void young_weak(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    double p = c.pick(exponent_grid());
    auto nu = c.mixed_measure(i);
    auto f = c.function(gc), g = c.function(gc);
    auto xp = c.dual_vector(s);
    t.at_most(lp_norm_haar(conv_weak(f, g, nu, xp), p),
              (lp_norm_haar(f, p) * dual_norm(xp)) * lp_nu_norm(g, nu, 1.0, c.opts()));
    t.instance();
  }
}

/// Candidate functionals for a supremum over the dual unit ball.
inline std::vector<DualVector> dual_candidates(SuiteContext& c, const VectorMeasure& nu) {
  std::vector<DualVector> out;
  auto total = evaluate(nu, all_elements(nu.g()));
  if (!total.is_zero()) out.push_back(norming_functional(total));
  for (const auto& x : nu.atoms())
    if (!x.is_zero()) {
      out.push_back(norming_functional(x));
      break;
    }
  for (int r = 0; r < 4; ++r) out.push_back(random_dual_extreme(nu.space_ptr(), c.rng()));
  return out;
}

inline NormEstimate conv_weak_sup(SuiteContext& c, const ScalarFunction& f, const ScalarFunction& g,
                                  const VectorMeasure& nu, double r) {
  NormEstimate best = NormEstimate::exact_value(0.0);
  for (const auto& xp : dual_candidates(c, nu)) {
    auto e = lp_nu_norm(conv_weak(f, g, nu, xp), nu, r, c.opts());
    best.lower = std::max(best.lower, e.lower);
  }
  best.upper = best.lower;
  return best;
}

inline void young_nu(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    double p = c.pick(exponent_grid());
    auto f = c.function(gc), g = c.function(gc);
    t.at_most(conv_weak_sup(c, f, g, *nu, p), lp_nu_norm(f, *nu, p, c.opts()) * lp_nu_norm(g, *nu, 1.0, c.opts()));
    t.instance();
  }
}

/// (p, q, r) with q <= p' and 1/p + 1/q = 1 + 1/r over the exponent grid.
inline std::vector<std::array<double, 3>> young_triples() {
  std::vector<std::array<double, 3>> out;
  for (double p : exponent_grid())
    for (double q : exponent_grid()) {
      if (q > conj_exp(p) + 1e-12) continue;
      double rr = recip(p) + recip(q) - 1.0;
      out.push_back({p, q, from_recip(std::max(rr, 0.0))});
    }
  return out;
}

inline void young_nu_pq(SuiteContext& c, Tally& t) {
  static const auto triples = young_triples();
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    auto [p, q, r] = c.pick(triples);
    auto f = c.function(gc), g = c.function(gc);
    t.at_most(conv_weak_sup(c, f, g, *nu, r), lp_nu_norm(f, *nu, p, c.opts()) * lp_nu_norm(g, *nu, q, c.opts()));
    t.instance();
  }
}

inline double total_mass_norm(const VectorMeasure& nu) { return norm(evaluate(nu, all_elements(nu.g()))); }

inline void dunford_p(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    double p = c.pick(exponent_grid());
    auto f = c.function(gc), g = c.function(gc);
    double m = total_mass_norm(*nu);
    auto rhs = std::pow(m, -1.0 / p) * (lp_nu_norm(f, *nu, p, c.opts()) * lp_nu_norm(g, *nu, 1.0, c.opts()));
    t.at_most(Pp_norm(conv_vector(f, g, *nu), p, c.opts()), rhs);
    t.instance();
  }
}

inline void dunford_pq(SuiteContext& c, Tally& t) {
  static const auto triples = young_triples();
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    auto [p, q, r] = c.pick(triples);
    auto f = c.function(gc), g = c.function(gc);
    double m = total_mass_norm(*nu);
    auto rhs = std::pow(m, -recip(r)) * (lp_nu_norm(f, *nu, p, c.opts()) * lp_nu_norm(g, *nu, q, c.opts()));
    t.at_most(Pp_norm(conv_vector(f, g, *nu), r, c.opts()), rhs);
    t.instance();
  }
}

inline void young_density(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.mixed_measure(i);
    auto f = c.function(gc);
    auto fn = conv_function_measure(f, nu);
    if (i % 2 == 0) {
      double p = c.pick(exponent_grid());
      t.at_most(Pp_norm(fn, p, c.opts()), lp_norm_haar(f, p) * semivariation(nu, c.opts()));
    } else {
      static const std::vector<double> ps{1.5, 2.0, 3.0, 4.0};
      double p = c.pick(ps);
      std::vector<double> qs;
      for (double q : exponent_grid())
        if (recip(p) + recip(q) > 1.0 + 1e-12) qs.push_back(q);
      double q = c.pick(qs);
      double r = from_recip(recip(p) + recip(q) - 1.0);
      t.at_most(Pp_norm(fn, r, c.opts()), lp_norm_haar(f, q) * p_semivariation(nu, p, c.opts()));
    }
    t.instance();
  }
}

inline void young_measure(SuiteContext& c, Tally& t) {
  std::vector<std::array<double, 3>> cases;
  for (double p : exponent_grid()) {
    if (p == 1.0) continue;
    for (double q : exponent_grid())
      if (q >= conj_exp(p) - 1e-12) cases.push_back({p, q, from_recip(recip(p) + recip(q))});
  }
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.mixed_measure(i);
    auto f = c.function(gc);
    auto [p, q, r] = c.pick(cases);
    auto nf = conv_measure_sv(scalar_measure(gc.group, f.values()), nu);
    // nu_f = f * nu as a measure; its density is f_nu / |G|, i.e. atoms (f * nu)({s}) scaled by m_G.
    for (Element u = 0; u < nf.size(); ++u) nf[u] *= 1.0 / double(nf.size());
    auto lhs = std::abs(r - 1.0) < 1e-12 ? semivariation(nf, c.opts()) : p_semivariation(nf, r, c.opts());
    t.at_most(lhs, lp_norm_haar(f, q) * p_semivariation(nu, p, c.opts()));
    t.instance();
  }
}

inline void young_triple(SuiteContext& c, Tally& t) {
  std::vector<std::array<double, 3>> triples;
  std::size_t invalid = 0;
  for (double p1 : exponent_grid())
    for (double p2 : exponent_grid())
      for (double p3 : exponent_grid()) {
        double s = recip(p1) + recip(p2);
        if (s > 0.0 && s < 1.0 && s + recip(p3) > 1.0) triples.push_back({p1, p2, p3});
        else ++invalid;
      }
  t.note(std::to_string(invalid) + " exponent triples outside the admissible region were skipped");
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.mixed_measure(i);
    auto f = c.function(gc), g = c.function(gc);
    auto phi = conv_vector(f, g, nu);
    if (i % 2 == 0 || triples.empty()) {
      double p = c.pick(exponent_grid());
      t.at_most(Pp_norm(phi, p, c.opts()), lp_norm_haar(f, p) * lp_nu_norm(g, nu, 1.0, c.opts()));
    } else {
      auto [p1, p2, p3] = c.pick(triples);
      double r = from_recip(recip(p1) + recip(p2) + recip(p3) - 1.0);
      t.at_most(Pp_norm(phi, r, c.opts()),
                (lp_norm_haar(g, p2) * lp_norm_haar(f, p3)) * p_semivariation(nu, p1, c.opts()));
    }
    t.instance();
  }
}

inline void young_lnu(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    double p = c.pick(exponent_grid());
    auto f = c.function(gc), g = c.function(gc);
    auto lhs = lp_nu_norm(conv_classical(f, g), *nu, p, c.opts());
    if (i % 2 == 0) {
      double m = total_mass_norm(*nu);
      t.at_most(lhs, (lp_norm_haar(g, p) * std::pow(m, -recip(conj_exp(p)))) * lp_nu_norm(f, *nu, 1.0, c.opts()));
    } else {
      t.at_most(lhs, lp_norm_haar(g, 1.0) * lp_nu_norm(f, *nu, p, c.opts()));
    }
    t.instance();
  }
}

inline void embedding(SuiteContext& c, Tally& t) {
  static const std::vector<double> ps{1.5, 2.0, 3.0, 4.0};
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& gc = c.group(i);
    const auto& s = c.space(i);
    auto nu = c.mixed_measure(i);
    auto f = c.function(gc);
    double p = c.pick(ps);
    t.at_most(norm(integrate(f, nu)), lp_norm_haar(f, conj_exp(p)) * p_semivariation(nu, p, c.opts()));
    t.instance();
  }
}

inline void invariance(SuiteContext& c, Tally& t) {
  {  // Negative control: unequal atoms on Z2 are not translation invariant.
    auto g = build_group("Z2");
    auto s = make_space(CoefficientSpace::linf(2));
    auto nu = VectorMeasure::zero(g, s);
    nu[0][0] = 2.0;
    nu[1][1] = 1.0;
    auto rep = check_semivariation_invariance(nu, GroupMap::translation(g, 1), 1, c.next_seed(), c.cfg().tol_bracket,
                                              c.opts());
    t.require(rep.refuted);
    t.note("negative control: atoms (2,0),(0,1) on Z2 are refuted as non-invariant");
  }
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    const auto& g = gc.group;
    const bool exact = nu->space().exact_sup();
    std::vector<GroupMap> maps;
    for (Element u = 0; u < g->order(); ++u) maps.push_back(GroupMap::translation(g, u));
    maps.push_back(GroupMap::inversion(g));
    auto phi = c.function(gc);
    for (const auto& h : maps) {
      auto rep = check_semivariation_invariance(*nu, h, 2, c.next_seed(), c.cfg().tol_bracket, c.opts());
      if (exact) t.exact(rep.max_estimate_gap);
      else {
        t.require(!rep.refuted);
        if (rep.max_estimate_gap > c.cfg().tol_bracket) t.near_miss();
      }
      auto ph = function_pushforward(phi, h);
      for (double p : {1.0, 2.0, 3.0}) {
        auto a = lp_nu_norm(ph, *nu, p, c.opts());
        auto b = lp_nu_norm(phi, *nu, p, c.opts());
        if (exact) t.exact(std::abs(a.mid() - b.mid()));
        else {
          double gap = std::max({0.0, a.lower - b.upper, b.lower - a.upper});
          t.require(gap <= c.cfg().tol_bracket * std::max(1.0, b.upper));
        }
      }
      t.instance();
    }
  }
}

inline void inclusion(SuiteContext& c, Tally& t) {
  for (std::size_t i = 0; i < c.trials(); ++i) {
    auto nu = c.invariant_fixture(i, t);
    if (!nu) continue;
    const auto& gc = c.group(i);
    double p = i % 2 == 0 ? 1.0 : 2.0;
    auto f = c.function(gc);
    double m = total_mass_norm(*nu);
    t.at_most(lp_norm_haar(f, p), std::pow(m, -1.0 / p) * lp_nu_norm(f, *nu, p, c.opts()));
    t.instance();
  }
}

inline void commutativity(SuiteContext& c, Tally& t) {
  std::size_t abelian = 0;
  for (const auto& gc : c.groups()) abelian += gc.group->is_abelian() ? 1 : 0;
  const std::size_t per_abelian = abelian ? std::max<std::size_t>(1, c.trials() / abelian) : 0;
  for (const auto& gc : c.groups()) {
    const auto& g = gc.group;
    for (const auto& s : c.spaces()) {
      if (!g->is_abelian()) {
        std::optional<std::pair<Element, Element>> w;
        for (Element a = 0; a < g->order() && !w; ++a)
          for (Element b = 0; b < g->order() && !w; ++b)
            if (g->mul(a, b) != g->mul(b, a)) w = std::pair{a, b};
        if (!w) {
          t.require(false);
          continue;
        }
        auto x0 = random_unit_norm_vector(s, c.rng());
        auto mu = dirac(g, w->first);
        auto nu = VectorMeasure::point_mass(g, w->second, x0);
        double gap = max_atom_difference(conv_measure_sv(mu, nu), conv_measure_vs(nu, mu));
        t.require(gap >= 0.5);
        t.note(g->label() + ": mu = delta_" + std::to_string(w->first) + ", nu = x0 delta_" +
               std::to_string(w->second) + " do not commute");
        t.instance();
      } else {
        std::size_t per_space = std::max<std::size_t>(1, per_abelian / c.spaces().size());
        for (std::size_t r = 0; r < per_space; ++r) {
          auto nu = c.measure(FixtureKind::RandomGaussian, gc, s);
          auto mu = scalar_measure(g, c.function(gc).values());
          double res = max_atom_difference(conv_measure_sv(mu, nu), conv_measure_vs(nu, mu));
          t.require(res <= 1e-12);
          t.exact(res);
          t.instance();
        }
      }
    }
  }
}

/// max over phases e_0 = 1, e_t in {e^{2 pi i k / K}} of ||sum_t e_t c_t v_t||.
inline double brute_force_sup(const std::vector<std::pair<double, XVector>>& atoms, int K) {
  const std::size_t m = atoms.size();
  std::vector<int> idx(m, 0);
  double best = 0.0;
  const double two_pi = 2.0 * std::acos(-1.0);
  while (true) {
    auto acc = XVector::zero(atoms[0].second.space_ptr());
    for (std::size_t t = 0; t < m; ++t) acc.axpy(atoms[t].first * std::polar(1.0, two_pi * idx[t] / K), atoms[t].second);
    best = std::max(best, norm(acc));
    std::size_t k = 1;
    while (k < m && ++idx[k] == K) idx[k++] = 0;
    if (k >= m) break;
  }
  return best;
}

inline void calibration(SuiteContext& c, Tally& t) {
  constexpr int K = 24;
  std::vector<SpacePtr> small;
  for (const auto& s : c.spaces())
    if (s->param() <= 2) small.push_back(s);
  if (small.empty())
    for (const char* d : {"scalar", "linf:2", "matop:2", "wl1:2"}) small.push_back(parse_space(d));
  const double shrink = std::cos(std::acos(-1.0) / K);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  for (std::size_t i = 0; i < c.trials(); ++i) {
    const auto& s = small[i % small.size()];
    const std::size_t m = 1 + (i / small.size()) % 4;
    std::vector<std::pair<double, XVector>> atoms;
    for (std::size_t k = 0; k < m; ++k) atoms.emplace_back(weight(c.rng()), random_vector(s, c.rng()));
    auto est = dual_ball_sup(*s, atoms, c.opts());
    double brute = brute_force_sup(atoms, K);
    const double tol = c.cfg().tol_bracket * std::max(1.0, brute);
    t.require(brute <= est.upper + tol);
    t.require(est.lower * shrink <= brute + tol);
    if (est.exact) t.require(std::abs(brute - est.upper) <= 0.02 * est.upper + tol);
    if (est.lower < brute - tol) t.near_miss();
    t.instance();
  }
  t.note("brute force over 24 phases per atom; it under-estimates the supremum by at most a factor cos(pi/24)");
}

}  // namespace suites

inline const std::vector<SuiteInfo>& suite_catalog() {
  using namespace suites;
  static const std::vector<SuiteInfo> cat{
      {"dual-validation", "curated irreps are unitary homomorphisms with Schur orthogonality and sum d^2 = |G|", 1,
       dual_validation},
      {"plancherel", "||f||_2^2 = sum d^3 tr(f^* f^) and f = sum d^2 tr(f^ pi)", 1000, plancherel},
      {"weak-plancherel-4.14", "Plancherel and inversion for f h_x' via the weak transform", 200, weak_plancherel},
      {"bounds-4.4", "sup_pi ||f^nu(pi)||_{M_d(X)} <= ||f||_nu", 4000, bounds_fn},
      {"bounds-4.8", "sup_pi ||f^_nu(x')(pi)|| <= ||f||_nu ||x'||", 4000, bounds_weak},
      {"bounds-7", "sup_pi ||nu^(pi)||_{M_d(X)} <= ||nu||(G)", 4000, bounds_measure},
      {"cb-4.4", "||[f_ij^nu(pi)]||_{M_nd(X)} <= N([f_ij]) and ||int F dnu||_{M_n(X)} <= N(F)", 200, cb_fn},
      {"cb-7", "sup_pi ||[nu_ij^(pi)]||_{M_nd(X)} <= semivariation of [nu_ij] in M_n(X)", 200, cb_measure},
      {"pairing-4.9", "<<f^nu(pi), x'>> = f^_nu(x')(pi)", 200, pairing},
      {"ft-measure-7.3", "f^nu = (nu_f)^ and f^_nu(x') = <<(nu_f)^, x'>>", 200, ft_density},
      {"scalarization-6.8", "<f *^nu g, x'> = f *_nu g (x')", 200, scalarization},
      {"ft-conv-6", "(f *_nu g (x'))^(pi) = d_pi <<g^nu(pi) f^(pi), x'>>", 200, ft_conv_weak},
      {"ft-conv-8", "(mu * nu)^(pi) = d_pi nu^(pi) mu^(pi)", 200, ft_conv_measure},
      {"pettis-6.9", "(P) int_A f *^nu g = x_A and ||f *^nu g||_{P_1} <= ||f||_1 ||g||_nu", 200, pettis},
      {"duality-6.6", "int (f *_nu g (x')) phi dm = <int (f~ * phi) g dnu, x'>", 200, duality},
      {"uniqueness-4.10", "f -> f^nu and f -> f^_nu are injective on L^1(nu)", 64, uniqueness_fn},
      {"uniqueness-7.5", "nu -> nu^ is injective", 32, uniqueness_measure},
      {"young-6.2", "||f *_nu g (x')||_p <= ||f||_p ||g||_nu ||x'||", 1000, young_weak},
      {"young-6.4", "sup_x' ||f *_nu g (x')||_{nu,p} <= ||f||_{nu,p} ||g||_nu (invariant nu)", 1000, young_nu},
      {"young-6.5", "sup_x' ||f *_nu g (x')||_{nu,r} <= ||f||_{nu,p} ||g||_{nu,q}, 1/p+1/q = 1+1/r (invariant nu)", 1000,
       young_nu_pq},
      {"dunford-6.10", "||f *^nu g||_{P_p} <= ||f||_{nu,p} ||g||_nu ||nu(G)||^{-1/p} (invariant nu)", 1000, dunford_p},
      {"dunford-6.11", "||f *^nu g||_{P_r} <= ||f||_{nu,p} ||g||_{nu,q} ||nu(G)||^{-1/r} (invariant nu)", 1000,
       dunford_pq},
      {"young-9.1", "||f_nu||_{P_p} <= ||f||_p ||nu||(G); ||f_nu||_{P_r} <= ||f||_q ||nu||_p", 1000, young_density},
      {"young-9.2", "||nu_f||_r <= ||nu||_p ||f||_q with 1/r = 1/p + 1/q", 1000, young_measure},
      {"young-9.3", "||f *^nu g||_{P_r} <= ||nu||_{p1} ||g||_{p2} ||f||_{p3}", 1000, young_triple},
      {"young-9.4", "||f * g||_{nu,p} <= ||f||_nu ||g||_p ||nu(G)||^{-1/p'} and <= ||f||_{nu,p} ||g||_1 (invariant nu)",
       1000, young_lnu},
      {"embedding-4.13", "||int f dnu|| <= ||nu||_p ||f||_{p'}", 500, embedding},
      {"invariance-5.2", "h-invariance of ||.||(G) carries over to ||phi o h^-1||_{nu,p} = ||phi||_{nu,p}", 32,
       invariance},
      {"inclusion-5.5", "||f||_p <= ||f||_{nu,p} ||nu(G)||^{-1/p} (invariant nu)", 500, inclusion},
      {"commutativity-8.5", "mu * nu = nu * mu on abelian groups; a witness pair fails on nonabelian ones", 200,
       commutativity},
      {"calibration", "semivariation estimates bracket a brute-force phase search", 200, calibration},
  };
  return cat;
}

inline std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : suite_catalog()) ids.push_back(s.id);
  return ids;
}

inline const SuiteInfo& find_suite(const std::string& id) {
  for (const auto& s : suite_catalog())
    if (s.id == id) return s;
  throw ConfigError("unknown suite '" + id + "'");
}

inline TheoremReport run_suite(const std::string& id, const RunConfig& cfg) {
  const auto& info = find_suite(id);
  TheoremReport rep;
  rep.suite = info.id;
  rep.anchor = info.anchor;
  auto start = std::chrono::steady_clock::now();
  SuiteContext ctx(cfg, info.id, info.default_trials);
  Tally tally(rep, cfg);
  info.run(ctx, tally);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Runs the configured suites (all when none are listed), in catalog order.
inline std::vector<TheoremReport> run_suites(const RunConfig& cfg) {
  cfg.validate();
  std::vector<std::string> ids;
  if (cfg.suites.empty()) ids = suite_ids();
  else
    for (const auto& id : suite_ids())
      if (std::find(cfg.suites.begin(), cfg.suites.end(), id) != cfg.suites.end()) ids.push_back(id);
  for (const auto& id : cfg.suites) find_suite(id);  // reject unknown ids
  for (const auto& g : cfg.groups) {
    try {
      make_group_case(g);
    } catch (const std::exception& e) {
      throw ConfigError("group '" + g + "': " + e.what());
    }
  }
  for (const auto& s : cfg.spaces) {
    try {
      parse_space(s);
    } catch (const std::exception& e) {
      throw ConfigError("space '" + s + "': " + e.what());
    }
  }

  std::vector<TheoremReport> out(ids.size());
  if (cfg.jobs <= 1) {
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = run_suite(ids[k], cfg);
    return out;
  }
  std::size_t next = 0;
  while (next < ids.size()) {
    std::vector<std::future<TheoremReport>> batch;
    std::size_t first = next;
    for (; next < ids.size() && batch.size() < static_cast<std::size_t>(cfg.jobs); ++next)
      batch.push_back(std::async(std::launch::async, run_suite, ids[next], std::cref(cfg)));
    for (std::size_t k = 0; k < batch.size(); ++k) out[first + k] = batch[k].get();
  }
  return out;
}

}  // namespace gvm::harness

#pragma once

// Seeded random fixtures for the verification suites.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvm/dual.hpp"
#include "gvm/lp.hpp"
#include "gvm/random.hpp"
#include "gvm/vector_measure.hpp"

namespace gvm::harness {

enum class FixtureKind { HaarLike, RandomGaussian, PointMass, TranslationInvariant };

inline const char* fixture_name(FixtureKind k) {
  switch (k) {
    case FixtureKind::HaarLike: return "haar-like";
    case FixtureKind::RandomGaussian: return "random-gaussian";
    case FixtureKind::PointMass: return "point-mass";
    case FixtureKind::TranslationInvariant: return "translation-invariant";
  }
  return "?";
}

inline FixtureKind parse_fixture_kind(const std::string& s) {
  for (auto k : {FixtureKind::HaarLike, FixtureKind::RandomGaussian, FixtureKind::PointMass,
                 FixtureKind::TranslationInvariant})
    if (s == fixture_name(k)) return k;
  throw std::invalid_argument("unknown fixture kind '" + s + "'");
}

inline XVector random_vector(const SpacePtr& s, Rng& rng) {
  std::vector<cd> c(s->coord_count());
  for (auto& z : c) z = random_gaussian(rng);
  return {s, std::move(c)};
}

inline XVector random_unit_norm_vector(const SpacePtr& s, Rng& rng) {
  auto x = random_vector(s, rng);
  double n = norm(x);
  return n > 0.0 ? (1.0 / n) * x : x;
}

inline DualVector random_dual(const SpacePtr& s, Rng& rng) {
  std::vector<cd> c(s->coord_count());
  for (auto& z : c) z = random_gaussian(rng);
  return {s, std::move(c)};
}

inline ScalarFunction random_function(const GroupPtr& g, Rng& rng) {
  std::vector<cd> v(g->order());
  for (auto& z : v) z = random_gaussian(rng);
  return {g, std::move(v)};
}

inline MatrixFunction random_matrix_function(const GroupPtr& g, std::size_t n, Rng& rng) {
  std::vector<Matrix> v(g->order(), Matrix(Eigen::Index(n), Eigen::Index(n)));
  for (auto& m : v)
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = random_gaussian(rng);
  return {g, n, std::move(v)};
}

/// Reproducible measure of the given kind.
///  haar-like              x0 m_G with ||x0|| = 1.
///  random-gaussian        Gaussian atoms, scaled so the semivariation estimate is about 1.
///  point-mass             x0 at the identity.
///  translation-invariant  on linf:k with k >= |G|, x_t = r e^{i theta_t} e_t (the atoms sit on
///                         distinct coordinates, so ||nu_phi|| = r max|phi| is invariant under every
///                         permutation of G); on other spaces the haar-like measure.
inline VectorMeasure generate_fixture(FixtureKind kind, const GroupPtr& g, const SpacePtr& s, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = g->order();
  switch (kind) {
    case FixtureKind::HaarLike: return VectorMeasure::haar_multiple(g, random_unit_norm_vector(s, rng));
    case FixtureKind::PointMass: return VectorMeasure::point_mass(g, g->identity(), random_unit_norm_vector(s, rng));
    case FixtureKind::TranslationInvariant: {
      if (s->kind() != SpaceKind::LinfK || s->param() < n)
        return VectorMeasure::haar_multiple(g, random_unit_norm_vector(s, rng));
      std::uniform_real_distribution<double> radius(0.5, 1.5);
      const double r = radius(rng);
      auto nu = VectorMeasure::zero(g, s);
      for (Element t = 0; t < n; ++t) nu[t][t] = r * random_phase(rng);
      return nu;
    }
    case FixtureKind::RandomGaussian: {
      std::vector<XVector> atoms;
      for (std::size_t t = 0; t < n; ++t) atoms.push_back(random_vector(s, rng));
      VectorMeasure nu(g, s, std::move(atoms));
      AscentOptions quick;
      quick.restarts = 4;
      quick.seed = seed;
      double m = semivariation(nu, quick).mid();
      if (m > 0.0)
        for (Element t = 0; t < n; ++t) nu[t] *= 1.0 / m;
      return nu;
    }
  }
  throw std::invalid_argument("unknown fixture kind");
}

/// A group with its curated dual.
struct GroupCase {
  std::string spec;
  GroupPtr group;
  DualPtr dual;
};

inline GroupCase make_group_case(const std::string& spec) {
  auto g = build_group(spec);
  return {spec, g, unitary_dual(g)};
}

}  // namespace gvm::harness

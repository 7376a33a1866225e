#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "gvm/complex.hpp"

namespace gvm {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a label (FNV-1a mixed).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(base ^ splitmix64(h));
}

inline cd random_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0 / std::sqrt(2.0));
  double re = n(rng);
  double im = n(rng);
  return {re, im};
}

inline cd random_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  return std::polar(1.0, u(rng));
}

inline Vector random_unit_vector(Rng& rng, Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v(k) = random_gaussian(rng);
  double nv = v.norm();
  if (nv == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / nv;
}

}  // namespace gvm

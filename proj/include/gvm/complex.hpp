#pragma once

// Complex scalar aliases and the "a+bi" text form used by every fixture file.

#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace gvm {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

namespace detail {

inline double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  double v = 0.0;
  auto begin = s.data();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed complex literal '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

/// Parses "3", "-1.5", "2i", "-i", "0.5-0.25i", "1e-3+2e-1i".
inline cd parse_complex(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {detail::parse_real(s, text), 0.0};

  s.remove_suffix(1);
  // Split at the last sign that is not an exponent sign and not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, detail::parse_real(s, text)};
  return {detail::parse_real(s.substr(0, split), text), detail::parse_real(s.substr(split), text)};
}

/// Round-trippable "a+bi" text.
inline std::string format_complex(cd z) {
  char buf[64];
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", re, im);
  return buf;
}

inline cd phase_of(cd z) {
  double a = std::abs(z);
  return a > 0.0 ? z / a : cd{1.0, 0.0};
}

/// e^{2 pi i k / n}, exact at multiples of a quarter turn.
inline cd root_of_unity(std::size_t k, std::size_t n) {
  k %= n;
  if ((4 * k) % n == 0) {
    static const cd quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return quarter[4 * k / n];
  }
  return std::polar(1.0, 2.0 * std::acos(-1.0) * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace gvm

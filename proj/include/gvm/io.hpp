#pragma once

// Plain-text fixture formats.
//
// Group table:       first line the order, then one row of the Cayley table per line.
// Dual table:        "irreps <count>", then per irrep "irrep <dim> [label]" followed by
//                    |G| lines, each a row-major d x d matrix of "a+bi" literals.
// Measure:           "group <descriptor>" and "space <descriptor>" header lines, then
//                    "element_index coord_0 coord_1 ..." per atom (missing atoms are zero).
// Coefficient dump:  per irrep "block <label> <level>", then row-major entries, one per line;
//                    vector coefficients print all coordinates of an entry on its line.
//
// '#' starts a comment anywhere.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvm/coeff_space.hpp"
#include "gvm/dual.hpp"
#include "gvm/fourier.hpp"
#include "gvm/group.hpp"
#include "gvm/vector_measure.hpp"

namespace gvm::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

namespace detail {

/// Non-empty lines with comments stripped, tokenized on whitespace.
struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ss(raw);
    Line l{no, {}};
    for (std::string tok; ss >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

inline std::size_t to_index(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
  }
}

inline cd to_complex(const std::string& s, std::size_t line) {
  try {
    return parse_complex(s);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

inline GroupPtr read_group_table(std::istream& in, std::string label = "custom") {
  auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty group table");
  if (lines[0].tokens.size() != 1) throw ParseError(lines[0].number, "first line must hold the group order");
  const std::size_t n = detail::to_index(lines[0].tokens[0], lines[0].number);
  if (lines.size() != n + 1)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " table rows, got " +
                                              std::to_string(lines.size() - 1));
  std::vector<std::vector<Element>> table;
  for (std::size_t r = 1; r <= n; ++r) {
    if (lines[r].tokens.size() != n) throw ParseError(lines[r].number, "row length differs from order");
    std::vector<Element> row;
    for (const auto& tok : lines[r].tokens) row.push_back(detail::to_index(tok, lines[r].number));
    table.push_back(std::move(row));
  }
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(label),
                                             GroupFamily{GroupFamily::Kind::Custom, {}});
}

inline void write_group_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (Element s = 0; s < g.order(); ++s) {
    for (Element t = 0; t < g.order(); ++t) out << (t ? " " : "") << g.mul(s, t);
    out << '\n';
  }
}

inline DualPtr read_dual_table(std::istream& in, const GroupPtr& g) {
  auto lines = detail::tokenize(in);
  std::size_t pos = 0;
  auto need = [&](const char* what) -> const detail::Line& {
    if (pos >= lines.size()) throw ParseError(lines.empty() ? 0 : lines.back().number, std::string("missing ") + what);
    return lines[pos++];
  };
  const auto& head = need("irreps header");
  if (head.tokens.size() != 2 || head.tokens[0] != "irreps") throw ParseError(head.number, "expected 'irreps <count>'");
  const std::size_t count = detail::to_index(head.tokens[1], head.number);
  UnitaryDual dual{g, {}};
  for (std::size_t k = 0; k < count; ++k) {
    const auto& h = need("irrep header");
    if (h.tokens.size() < 2 || h.tokens[0] != "irrep") throw ParseError(h.number, "expected 'irrep <dim> [label]'");
    UnitaryIrrep pi;
    pi.dim = detail::to_index(h.tokens[1], h.number);
    if (pi.dim == 0) throw ParseError(h.number, "irrep dimension must be positive");
    pi.label = h.tokens.size() > 2 ? h.tokens[2] : "pi" + std::to_string(k);
    const auto d = static_cast<Eigen::Index>(pi.dim);
    for (Element t = 0; t < g->order(); ++t) {
      const auto& row = need("irrep matrix");
      if (row.tokens.size() != pi.dim * pi.dim)
        throw ParseError(row.number, "expected " + std::to_string(pi.dim * pi.dim) + " matrix entries");
      Matrix m(d, d);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = detail::to_complex(row.tokens[std::size_t(i * d + j)], row.number);
      pi.matrices.push_back(std::move(m));
    }
    dual.irreps.push_back(std::move(pi));
  }
  if (pos != lines.size()) throw ParseError(lines[pos].number, "trailing content after dual table");
  return std::make_shared<const UnitaryDual>(std::move(dual));
}

inline void write_dual_table(std::ostream& out, const UnitaryDual& dual) {
  out << "irreps " << dual.size() << '\n';
  for (const auto& pi : dual.irreps) {
    out << "irrep " << pi.dim << ' ' << pi.label << '\n';
    for (const auto& m : pi.matrices) {
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << (i || j ? " " : "") << format_complex(m(i, j));
      out << '\n';
    }
  }
}

inline VectorMeasure read_measure(std::istream& in) {
  auto lines = detail::tokenize(in);
  GroupPtr g;
  SpacePtr s;
  std::size_t pos = 0;
  for (; pos < lines.size() && (!g || !s); ++pos) {
    const auto& l = lines[pos];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'group <spec>' and 'space <spec>' headers");
    try {
      if (l.tokens[0] == "group") g = build_group(l.tokens[1]);
      else if (l.tokens[0] == "space") s = parse_space(l.tokens[1]);
      else throw ParseError(l.number, "unknown header '" + l.tokens[0] + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(l.number, e.what());
    }
  }
  if (!g || !s) throw ParseError(lines.empty() ? 0 : lines.back().number, "missing group or space header");
  auto nu = VectorMeasure::zero(g, s);
  std::vector<bool> seen(g->order(), false);
  for (; pos < lines.size(); ++pos) {
    const auto& l = lines[pos];
    const std::size_t t = detail::to_index(l.tokens[0], l.number);
    if (t >= g->order()) throw ParseError(l.number, "element index out of range");
    if (seen[t]) throw ParseError(l.number, "duplicate atom");
    seen[t] = true;
    if (l.tokens.size() != s->coord_count() + 1)
      throw ParseError(l.number, "expected " + std::to_string(s->coord_count()) + " coordinates for " + s->label());
    std::vector<cd> c;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) c.push_back(detail::to_complex(l.tokens[k], l.number));
    nu[t] = XVector(s, std::move(c));
  }
  return nu;
}

/// `group_spec` is the descriptor written into the header (the group's label by default).
inline void write_measure(std::ostream& out, const VectorMeasure& nu, std::string group_spec = "") {
  out << "group " << (group_spec.empty() ? nu.g().label() : group_spec) << '\n';
  out << "space " << nu.space().label() << '\n';
  for (Element t = 0; t < nu.size(); ++t) {
    out << t;
    for (cd z : nu[t].coords()) out << ' ' << format_complex(z);
    out << '\n';
  }
}

inline void write_coefficients(std::ostream& out, const FourierCoefficients& c) {
  for (std::size_t k = 0; k < c.blocks.size(); ++k) {
    const auto& b = c[k];
    out << "block " << (*c.dual)[k].label << ' ' << b.rows() << '\n';
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) out << format_complex(b(i, j)) << '\n';
  }
}

inline void write_coefficients(std::ostream& out, const VectorFourierCoefficients& c) {
  for (std::size_t k = 0; k < c.blocks.size(); ++k) {
    const auto& b = c[k];
    out << "block " << (*c.dual)[k].label << ' ' << b.level() << '\n';
    for (const auto& x : b.entries()) {
      for (std::size_t j = 0; j < x.size(); ++j) out << (j ? " " : "") << format_complex(x[j]);
      out << '\n';
    }
  }
}

template <class F>
auto read_file(const std::string& path, F&& reader) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return reader(in);
}

}  // namespace gvm::io

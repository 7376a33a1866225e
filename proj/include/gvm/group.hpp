#pragma once

// Finite groups given by Cayley tables. Elements are dense indices 0..order-1
// and the table is the single source of truth; Haar measure is m_G({t}) = 1/|G|.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gvm/complex.hpp"

namespace gvm {

using Element = std::size_t;

/// Largest order accepted; associativity is checked exhaustively up to here.
inline constexpr std::size_t kMaxGroupOrder = 24;

struct GroupFamily {
  enum class Kind { Cyclic, CyclicProduct, Dihedral, Symmetric, Quaternion, Custom };
  Kind kind = Kind::Custom;
  std::vector<std::size_t> params;  // moduli, n for D_n / S_n

  bool operator==(const GroupFamily&) const = default;
};

class FiniteGroup {
 public:
  /// `cayley[s][t]` is the index of s*t. Throws std::invalid_argument unless the
  /// table is a group (Latin square, identity, inverses, associativity).
  FiniteGroup(std::vector<std::vector<Element>> cayley, std::string label,
              GroupFamily family = {}, std::vector<std::string> names = {})
      : order_(cayley.size()), label_(std::move(label)), family_(std::move(family)) {
    if (order_ == 0) throw std::invalid_argument("group order must be positive");
    if (order_ > kMaxGroupOrder)
      throw std::invalid_argument("group order " + std::to_string(order_) + " exceeds supported maximum " +
                                  std::to_string(kMaxGroupOrder));
    table_.reserve(order_ * order_);
    for (const auto& row : cayley) {
      if (row.size() != order_) throw std::invalid_argument("cayley table is not square");
      for (Element e : row) {
        if (e >= order_) throw std::invalid_argument("cayley entry out of range");
        table_.push_back(e);
      }
    }
    validate();
    if (names.empty()) {
      names.reserve(order_);
      for (std::size_t t = 0; t < order_; ++t) names.push_back("g" + std::to_string(t));
    }
    if (names.size() != order_) throw std::invalid_argument("element name count mismatch");
    names_ = std::move(names);
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element s, Element t) const noexcept { return table_[s * order_ + t]; }
  Element inv(Element t) const noexcept { return inverses_[t]; }
  const std::vector<Element>& inverses() const noexcept { return inverses_; }
  const std::string& label() const noexcept { return label_; }
  const GroupFamily& family() const noexcept { return family_; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  /// Normalized counting Haar measure of a single point.
  double haar_atom() const noexcept { return 1.0 / static_cast<double>(order_); }

  bool is_abelian() const noexcept {
    for (Element s = 0; s < order_; ++s)
      for (Element t = s + 1; t < order_; ++t)
        if (mul(s, t) != mul(t, s)) return false;
    return true;
  }

  std::vector<std::vector<Element>> cayley() const {
    std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
    for (Element s = 0; s < order_; ++s)
      for (Element t = 0; t < order_; ++t) out[s][t] = mul(s, t);
    return out;
  }

  bool same_table(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  void validate() {
    std::vector<char> seen(order_);
    for (Element s = 0; s < order_; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element t = 0; t < order_; ++t) {
        if (seen[mul(s, t)]++) throw std::invalid_argument("cayley table row " + std::to_string(s) + " is not a permutation");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Element t = 0; t < order_; ++t) {
        if (seen[mul(t, s)]++) throw std::invalid_argument("cayley table column " + std::to_string(s) + " is not a permutation");
      }
    }
    bool found = false;
    for (Element e = 0; e < order_ && !found; ++e) {
      bool ok = true;
      for (Element t = 0; t < order_ && ok; ++t) ok = mul(e, t) == t && mul(t, e) == t;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("cayley table has no identity element");
    inverses_.assign(order_, 0);
    for (Element t = 0; t < order_; ++t) {
      auto row = table_.begin() + static_cast<std::ptrdiff_t>(t * order_);
      auto it = std::find(row, row + static_cast<std::ptrdiff_t>(order_), identity_);
      inverses_[t] = static_cast<Element>(it - row);
      if (mul(inverses_[t], t) != identity_) throw std::invalid_argument("left and right inverses differ");
    }
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("cayley table is not associative");
  }

  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::string label_;
  GroupFamily family_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline bool same_group(const FiniteGroup& a, const FiniteGroup& b) noexcept {
  return &a == &b || a.same_table(b);
}

inline void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (!same_group(a, b))
    throw std::invalid_argument("group mismatch: '" + a.label() + "' vs '" + b.label() + "'");
}

namespace groups {

inline GroupPtr cyclic_product(const std::vector<std::size_t>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("product of cyclics needs at least one factor");
  std::size_t order = 1;
  for (std::size_t m : moduli) {
    if (m == 0) throw std::invalid_argument("cyclic factor must have positive order");
    order *= m;
    if (order > kMaxGroupOrder) throw std::invalid_argument("group order exceeds supported maximum 24");
  }
  auto digits = [&](Element x) {
    std::vector<std::size_t> d(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
      d[k] = x % moduli[k];
      x /= moduli[k];
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    Element x = 0;
    for (std::size_t k = 0; k < moduli.size(); ++k) x = x * moduli[k] + d[k];
    return x;
  };
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (Element s = 0; s < order; ++s) {
    auto ds = digits(s);
    std::string name = "(";
    for (std::size_t k = 0; k < ds.size(); ++k) name += (k ? "," : "") + std::to_string(ds[k]);
    names[s] = name + ")";
    for (Element t = 0; t < order; ++t) {
      auto dt = digits(t);
      for (std::size_t k = 0; k < ds.size(); ++k) dt[k] = (ds[k] + dt[k]) % moduli[k];
      table[s][t] = encode(dt);
    }
  }
  std::string label;
  for (std::size_t k = 0; k < moduli.size(); ++k) label += (k ? "xZ" : "Z") + std::to_string(moduli[k]);
  GroupFamily fam{moduli.size() == 1 ? GroupFamily::Kind::Cyclic : GroupFamily::Kind::CyclicProduct, moduli};
  if (moduli.size() == 1) {
    for (Element s = 0; s < order; ++s) names[s] = s == 0 ? "e" : "a^" + std::to_string(s);
  }
  return std::make_shared<const FiniteGroup>(std::move(table), label, fam, std::move(names));
}

inline GroupPtr cyclic(std::size_t n) { return cyclic_product({n}); }

/// Dihedral group of the regular n-gon (order 2n). Element r^k s^f has index k + n f.
inline GroupPtr dihedral(std::size_t n) {
  if (n == 0 || 2 * n > kMaxGroupOrder) throw std::invalid_argument("dihedral D_n supported for 1 <= n <= 12");
  std::size_t order = 2 * n;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (Element x = 0; x < order; ++x) {
    std::size_t a = x % n, f = x / n;
    names[x] = (a == 0 && f == 0) ? "e" : (a ? "r^" + std::to_string(a) : "") + (f ? "s" : "");
    for (Element y = 0; y < order; ++y) {
      std::size_t b = y % n, g = y / n;
      std::size_t k = f ? (a + n - b) % n : (a + b) % n;
      table[x][y] = k + n * ((f + g) % 2);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(table), "D" + std::to_string(n),
                                             GroupFamily{GroupFamily::Kind::Dihedral, {n}}, std::move(names));
}

/// All permutations of {0..n-1} in lexicographic order; (s t)(x) = s(t(x)).
inline std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw std::invalid_argument("symmetric S_n supported for 1 <= n <= 4");
  auto perms = permutations(n);
  std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (Element s = 0; s < order; ++s) {
    names[s] = "[";
    for (std::size_t k = 0; k < n; ++k) names[s] += std::to_string(perms[s][k]);
    names[s] += "]";
    for (Element t = 0; t < order; ++t) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[s][perms[t][x]];
      table[s][t] = index_of(c);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(table), "S" + std::to_string(n),
                                             GroupFamily{GroupFamily::Kind::Symmetric, {n}}, std::move(names));
}

/// Unit quaternions {1,-1,i,-i,j,-j,k,-k} as 2x2 unitaries, in index order.
inline std::array<Matrix, 8> quaternion_matrices() {
  const cd I{0.0, 1.0};
  Matrix one = Matrix::Identity(2, 2);
  Matrix qi(2, 2), qj(2, 2), qk(2, 2);
  qi << I, 0.0, 0.0, -I;
  qj << 0.0, 1.0, -1.0, 0.0;
  qk = qi * qj;
  return {one, -one, qi, -qi, qj, -qj, qk, -qk};
}

inline GroupPtr quaternion8() {
  auto mats = quaternion_matrices();
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (Element s = 0; s < 8; ++s)
    for (Element t = 0; t < 8; ++t) {
      Matrix p = mats[s] * mats[t];
      Element hit = 8;
      for (Element u = 0; u < 8; ++u)
        if ((p - mats[u]).cwiseAbs().maxCoeff() < 1e-12) hit = u;
      table[s][t] = hit;
    }
  return std::make_shared<const FiniteGroup>(std::move(table), "Q8", GroupFamily{GroupFamily::Kind::Quaternion, {8}},
                                             std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace groups

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("unsupported group descriptor '" + std::string(whole) + "'");
  return v;
}

inline bool consume_prefix(std::string& s, std::string_view prefix) {
  if (s.rfind(prefix, 0) == 0) {
    s.erase(0, prefix.size());
    return true;
  }
  return false;
}

}  // namespace detail

/// Builds a group from a descriptor: "Z4" / "cyclic 4", "Z2xZ2", "D4" / "dihedral 4",
/// "S3" / "symmetric 3", "Q8" / "quaternion8". Case and separators are ignored.
inline GroupPtr build_group(std::string_view descriptor) {
  std::string s;
  for (char c : descriptor)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != ':' && c != '_' && c != '-')
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.empty()) throw std::invalid_argument("empty group descriptor");
  if (s == "q8" || s == "quaternion8" || s == "quaternion") return groups::quaternion8();
  if (s.find('x') != std::string::npos) {
    std::vector<std::size_t> moduli;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find('x', start);
      std::string part = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!detail::consume_prefix(part, "cyclic") && !detail::consume_prefix(part, "z") &&
          !detail::consume_prefix(part, "c"))
        throw std::invalid_argument("unsupported group descriptor '" + std::string(descriptor) + "'");
      moduli.push_back(detail::parse_size(part, descriptor));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return groups::cyclic_product(moduli);
  }
  if (detail::consume_prefix(s, "cyclic") || detail::consume_prefix(s, "z") || detail::consume_prefix(s, "c"))
    return groups::cyclic(detail::parse_size(s, descriptor));
  if (detail::consume_prefix(s, "dihedral") || detail::consume_prefix(s, "d"))
    return groups::dihedral(detail::parse_size(s, descriptor));
  if (detail::consume_prefix(s, "symmetric") || detail::consume_prefix(s, "s"))
    return groups::symmetric(detail::parse_size(s, descriptor));
  throw std::invalid_argument("unsupported group descriptor '" + std::string(descriptor) + "'");
}

/// The groups shipped with curated duals.
inline std::vector<std::string> builtin_group_names() {
  return {"Z2", "Z3", "Z4", "Z2xZ2", "D4", "S3", "S4", "Q8"};
}

}  // namespace gvm

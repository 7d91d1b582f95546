#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bmpp/errors.hpp"

namespace bmpp {

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Exponent {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  std::uint32_t degree() const { return i + j; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // Storage order only (x-exponent first); term orders live in TermOrder.
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  friend Exponent operator+(Exponent a, Exponent b) { return {a.i + b.i, a.j + b.j}; }
};

inline constexpr Exponent kOne{0, 0};
inline constexpr Exponent kX{1, 0};
inline constexpr Exponent kY{0, 1};

/// a | b as monomials.
inline bool divides(Exponent a, Exponent b) { return a.i <= b.i && a.j <= b.j; }

struct ExponentHash {
  std::size_t operator()(Exponent e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.i} << 32) | e.j);
  }
};

// lex:     x-exponent decides, then y.
// inlex:   y-exponent decides, then x.
// tdinlex: total degree, ties broken by inlex.
// tdlex:   total degree, ties broken by lex.
enum class TermOrder { lex, inlex, tdinlex, tdlex };

inline bool is_degree_order(TermOrder order) { return order == TermOrder::tdinlex || order == TermOrder::tdlex; }

inline std::strong_ordering compare(TermOrder order, Exponent a, Exponent b) {
  switch (order) {
    case TermOrder::tdlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      [[fallthrough]];
    case TermOrder::lex:
      if (a.i != b.i) return a.i <=> b.i;
      return a.j <=> b.j;
    case TermOrder::tdinlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      [[fallthrough]];
    case TermOrder::inlex:
      if (a.j != b.j) return a.j <=> b.j;
      return a.i <=> b.i;
  }
  return std::strong_ordering::equal;
}

/// Strict-weak "less" functor for a term order.
struct OrderLess {
  TermOrder order;
  bool operator()(Exponent a, Exponent b) const { return compare(order, a, b) < 0; }
};

inline std::string_view to_string(TermOrder order) {
  switch (order) {
    case TermOrder::lex: return "lex";
    case TermOrder::inlex: return "inlex";
    case TermOrder::tdinlex: return "tdinlex";
    case TermOrder::tdlex: return "tdlex";
  }
  return "?";
}

inline TermOrder parse_term_order(std::string_view name) {
  if (name == "lex") return TermOrder::lex;
  if (name == "inlex") return TermOrder::inlex;
  if (name == "tdinlex") return TermOrder::tdinlex;
  if (name == "tdlex") return TermOrder::tdlex;
  throw BadSpec("unknown term order '" + std::string(name) + "' (expected lex, inlex, tdinlex or tdlex)");
}

inline std::string to_string(Exponent e) {
  if (e.i == 0 && e.j == 0) return "1";
  std::string s;
  if (e.i > 0) s += e.i == 1 ? "x" : "x^" + std::to_string(e.i);
  if (e.j > 0) s += e.j == 1 ? "y" : "y^" + std::to_string(e.j);
  return s;
}

inline void sort_ascending(std::vector<Exponent>& exps, TermOrder order) {
  std::sort(exps.begin(), exps.end(), OrderLess{order});
}

}  // namespace bmpp

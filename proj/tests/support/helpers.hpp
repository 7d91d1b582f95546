#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bmpp/bmpp.hpp"

namespace testing_support {

using bmpp::Exponent;
using bmpp::Point;
using bmpp::PointSet;
using bmpp::Polynomial;
using bmpp::PrimeField;
using bmpp::RationalField;
using bmpp::TermOrder;

using Coords = std::vector<std::pair<std::string, std::string>>;

template <typename F>
PointSet<F> points(const F& field, const Coords& coords) {
  std::vector<Point<F>> pts;
  for (const auto& [x, y] : coords) pts.push_back({field.parse(x), field.parse(y)});
  return PointSet<F>(field, std::move(pts));
}

template <typename F>
PointSet<F> int_points(const F& field, const std::vector<std::pair<int, int>>& coords) {
  std::vector<Point<F>> pts;
  for (auto [x, y] : coords) pts.push_back({field.from_int(x), field.from_int(y)});
  return PointSet<F>(field, std::move(pts));
}

template <typename F>
Polynomial<F> poly(const F& field, const std::string& text) {
  return bmpp::parse_polynomial(field, text);
}

template <typename F>
std::vector<Polynomial<F>> polys(const F& field, const std::vector<std::string>& texts) {
  std::vector<Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(poly(field, t));
  return out;
}

inline std::vector<Exponent> monomials(const std::vector<std::string>& texts) {
  RationalField q;
  std::vector<Exponent> out;
  for (const auto& t : texts) out.push_back(bmpp::leading_monomial(poly(q, t), TermOrder::lex));
  return out;
}

inline constexpr TermOrder kAllOrders[] = {TermOrder::lex, TermOrder::inlex, TermOrder::tdinlex, TermOrder::tdlex};

// Test-side randomness uses the standard engine, independent of the library's generator.
using Rng = std::mt19937_64;

inline PrimeField::Element random_element(const PrimeField& f, Rng& rng) {
  return f.from_int(static_cast<std::int64_t>(std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng)));
}

inline mpq_class random_element(const RationalField& f, Rng& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return f.canonicalize(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Distinct random points; rational coordinates come from a small grid of fractions.
template <typename F>
PointSet<F> random_point_set(const F& field, std::size_t n, Rng& rng) {
  std::vector<Point<F>> pts;
  std::size_t guard = 0;
  while (pts.size() < n) {
    if (++guard > 100000) throw std::runtime_error("cannot draw enough distinct points");
    Point<F> p{random_element(field, rng), random_element(field, rng)};
    bool dup = std::any_of(pts.begin(), pts.end(), [&](const Point<F>& q) {
      return field.equal(p.x, q.x) && field.equal(p.y, q.y);
    });
    if (!dup) pts.push_back(p);
  }
  return PointSet<F>(field, std::move(pts));
}

/// Points on few distinct abscissae and ordinates, so that lines carry several points.
template <typename F>
PointSet<F> clustered_point_set(const F& field, std::size_t n, std::size_t spread, Rng& rng) {
  std::vector<typename F::Element> xs, ys;
  for (std::size_t k = 0; k < spread; ++k) {
    xs.push_back(field.from_int(static_cast<std::int64_t>(k * 3 + 1)));
    ys.push_back(field.from_int(static_cast<std::int64_t>(k * 5 + 2)));
  }
  std::vector<Point<F>> pts;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < spread; ++a)
    for (std::size_t b = 0; b < spread; ++b) cells.push_back({a, b});
  std::shuffle(cells.begin(), cells.end(), rng);
  for (std::size_t k = 0; k < std::min(n, cells.size()); ++k) pts.push_back({xs[cells[k].first], ys[cells[k].second]});
  return PointSet<F>(field, std::move(pts));
}

template <typename F>
Polynomial<F> random_poly(const F& field, Rng& rng, std::uint32_t max_deg, std::size_t terms) {
  Polynomial<F> p(field);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  for (std::size_t k = 0; k < terms; ++k) p.add_term({deg(rng), deg(rng)}, random_element(field, rng));
  return p;
}

inline Exponent random_exponent(Rng& rng, std::uint32_t max = 12) {
  std::uniform_int_distribution<std::uint32_t> d(0, max);
  return {d(rng), d(rng)};
}

template <typename F>
std::vector<Polynomial<F>> sorted_by_lm(std::vector<Polynomial<F>> G, TermOrder order) {
  std::sort(G.begin(), G.end(), [order](const Polynomial<F>& a, const Polynomial<F>& b) {
    return bmpp::compare(order, bmpp::leading_monomial(a, order), bmpp::leading_monomial(b, order)) < 0;
  });
  return G;
}

template <typename F>
std::vector<Point<F>> permuted(const PointSet<F>& input, const std::vector<std::size_t>& perm) {
  std::vector<Point<F>> out;
  for (auto k : perm) out.push_back(input[k]);
  return out;
}

}  // namespace testing_support

#pragma once

// Newton bases on line covers, their evaluation matrix, and interpolation.

#include <cstddef>
#include <span>
#include <vector>

#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/geometry.hpp"
#include "bmpp/monomial.hpp"
#include "bmpp/polynomial.hpp"

namespace bmpp {

/// scale * prod(x - x_roots) * prod(y - y_roots): the unexpanded form of one basis polynomial.
template <Field F>
struct NewtonFactors {
  typename F::Element scale;
  std::vector<typename F::Element> x_roots;
  std::vector<typename F::Element> y_roots;
};

template <Field F>
typename F::Element evaluate(const F& field, const NewtonFactors<F>& f, const Point<F>& p) {
  auto acc = f.scale;
  for (const auto& r : f.x_roots) acc = field.mul(acc, field.sub(p.x, r));
  for (const auto& r : f.y_roots) acc = field.mul(acc, field.sub(p.y, r));
  return acc;
}

/// Newton basis built on a line cover. polys[k](point_order[m]) = delta_km for m <= k.
template <Field F>
struct NewtonBasis {
  F field;
  Axis axis = Axis::rows;
  TermOrder order = TermOrder::lex;       // lex for row covers, inlex for column covers
  std::vector<Polynomial<F>> polys;
  std::vector<Exponent> index_order;      // (i, j) of each polynomial
  std::vector<Point<F>> point_order;      // node u_ij of each polynomial
  std::vector<std::size_t> point_index;   // position of each node in the covered set
  std::vector<NewtonFactors<F>> factors;

  std::size_t size() const { return polys.size(); }

  typename F::Element value(std::size_t k, const Point<F>& p) const { return evaluate(field, factors[k], p); }

  LowerSet lower_set() const { return LowerSet::from_exponents(index_order); }
};

namespace detail {

template <Field F>
void push_newton_poly(NewtonBasis<F>& basis, const Polynomial<F>& product, NewtonFactors<F> factors, Exponent index,
                      const Point<F>& node, std::size_t node_index) {
  const F& field = basis.field;
  factors.scale = field.one();
  factors.scale = field.inv(evaluate(field, factors, node));
  basis.polys.push_back(scale(factors.scale, product));
  basis.factors.push_back(std::move(factors));
  basis.index_order.push_back(index);
  basis.point_order.push_back(node);
  basis.point_index.push_back(node_index);
}

}  // namespace detail

/// phi_ij = c_ij * prod_{t<j}(y - y_0t) * prod_{s<i}(x - x_sj), in increasing inlex on (i, j).
template <Field F>
NewtonBasis<F> newton_basis_rows(const LineCover<F>& cover) {
  if (cover.axis != Axis::rows) throw InvalidState("newton_basis_rows needs a row cover");
  if (cover.lines.empty()) throw EmptySet("Newton basis of an empty cover");
  const F& field = cover.field;
  NewtonBasis<F> basis{field, Axis::rows, TermOrder::lex, {}, {}, {}, {}, {}};

  auto y_part = Polynomial<F>::constant(field, field.one());
  std::vector<typename F::Element> y_roots;
  for (std::uint32_t j = 0; j < cover.lines.size(); ++j) {
    const auto& line = cover.lines[j];
    auto product = y_part;
    std::vector<typename F::Element> x_roots;
    for (std::uint32_t i = 0; i < line.points.size(); ++i) {
      detail::push_newton_poly(basis, product, NewtonFactors<F>{field.one(), x_roots, y_roots}, Exponent{i, j},
                               line.points[i], line.indices[i]);
      product = mul_linear(product, kX, line.points[i].x);
      x_roots.push_back(line.points[i].x);
    }
    // y_0j: ordinate of the first point on line j
    y_part = mul_linear(y_part, kY, line.key);
    y_roots.push_back(line.key);
  }
  return basis;
}

/// phi_ij = c_ij * prod_{s<i}(x - x_s0) * prod_{t<j}(y - y_it), in increasing lex on (i, j).
template <Field F>
NewtonBasis<F> newton_basis_cols(const LineCover<F>& cover) {
  if (cover.axis != Axis::columns) throw InvalidState("newton_basis_cols needs a column cover");
  if (cover.lines.empty()) throw EmptySet("Newton basis of an empty cover");
  const F& field = cover.field;
  NewtonBasis<F> basis{field, Axis::columns, TermOrder::inlex, {}, {}, {}, {}, {}};

  auto x_part = Polynomial<F>::constant(field, field.one());
  std::vector<typename F::Element> x_roots;
  for (std::uint32_t i = 0; i < cover.lines.size(); ++i) {
    const auto& line = cover.lines[i];
    auto product = x_part;
    std::vector<typename F::Element> y_roots;
    for (std::uint32_t j = 0; j < line.points.size(); ++j) {
      detail::push_newton_poly(basis, product, NewtonFactors<F>{field.one(), x_roots, y_roots}, Exponent{i, j},
                               line.points[j], line.indices[j]);
      product = mul_linear(product, kY, line.points[j].y);
      y_roots.push_back(line.points[j].y);
    }
    x_part = mul_linear(x_part, kX, line.key);
    x_roots.push_back(line.key);
  }
  return basis;
}

/// Row-echelon matrix: row r has a 1 at pivots[r] and zeros left of it. Rows appended later
/// are zero at every earlier pivot, so reducing in insertion order is exact.
template <Field F>
struct EchelonMatrix {
  using Elem = typename F::Element;

  F field;
  std::size_t columns = 0;
  std::vector<std::vector<Elem>> rows;
  std::vector<std::size_t> pivots;

  EchelonMatrix(F f, std::size_t cols) : field(std::move(f)), columns(cols) {}

  std::size_t row_count() const { return rows.size(); }

  void append(std::vector<Elem> row, std::size_t pivot) {
    if (row.size() != columns) throw LengthMismatch("row length does not match the column count");
    rows.push_back(std::move(row));
    pivots.push_back(pivot);
  }
};

/// Row k holds polys[k] evaluated at every point of `all`, which must start with the basis nodes.
template <Field F>
EchelonMatrix<F> evaluation_matrix(const NewtonBasis<F>& basis, std::span<const Point<F>> all) {
  const F& field = basis.field;
  if (all.size() < basis.size()) throw OrderingViolation("fewer points than basis polynomials");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!detail::point_equal(field, all[k], basis.point_order[k])) {
      throw OrderingViolation("point list does not start with the basis nodes (position " + std::to_string(k) + ")");
    }
  }
  EchelonMatrix<F> B(field, all.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<typename F::Element> row;
    row.reserve(all.size());
    for (const auto& p : all) row.push_back(basis.value(k, p));
    for (std::size_t m = 0; m < k; ++m) {
      if (!field.is_zero(row[m])) throw InvalidState("basis is not triangular on its nodes");
    }
    if (!field.equal(row[k], field.one())) throw InvalidState("basis is not normalized on its nodes");
    B.append(std::move(row), k);
  }
  return B;
}

template <Field F>
EchelonMatrix<F> evaluation_matrix(const NewtonBasis<F>& basis, const PointSet<F>& all) {
  return evaluation_matrix(basis, std::span<const Point<F>>(all.points()));
}

/// Unique p in span(polys) with p(point_order[m]) = values[m], by forward substitution.
template <Field F>
Polynomial<F> interpolate(const NewtonBasis<F>& basis, std::span<const typename F::Element> values) {
  if (values.size() != basis.size()) throw LengthMismatch("need one value per basis polynomial");
  const F& field = basis.field;
  std::vector<typename F::Element> coeffs;
  coeffs.reserve(values.size());
  for (std::size_t m = 0; m < values.size(); ++m) {
    auto c = values[m];
    for (std::size_t k = 0; k < m; ++k) {
      if (field.is_zero(coeffs[k])) continue;
      c = field.sub(c, field.mul(coeffs[k], basis.value(k, basis.point_order[m])));
    }
    coeffs.push_back(c);
  }
  Polynomial<F> p(field);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p += scale(coeffs[k], basis.polys[k]);
  return p;
}

}  // namespace bmpp

#pragma once

// Independent checks on (G, N, Q) and a dense-elimination oracle for ground truth.

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "bmpp/bm.hpp"
#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/geometry.hpp"
#include "bmpp/monomial.hpp"
#include "bmpp/polynomial.hpp"

namespace bmpp {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample when failed
};

struct VerifyReport {
  bool passed = true;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    passed = passed && ok;
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void merge(const VerifyReport& other) {
    for (const auto& c : other.checks) add(c.name, c.passed, c.detail);
  }

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
      if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
    out << (passed ? "verification passed" : "verification FAILED") << '\n';
    return out.str();
  }
};

template <Field F>
VerifyReport check_vanishing(std::span<const Polynomial<F>> G, const PointSet<F>& points) {
  VerifyReport r;
  for (std::size_t g = 0; g < G.size(); ++g) {
    for (const auto& p : points) {
      if (!points.field().is_zero(evaluate(G[g], p.x, p.y))) {
        r.add("vanishing", false, "G[" + std::to_string(g) + "] is nonzero at " + point_text(points.field(), p));
        return r;
      }
    }
  }
  r.add("vanishing", true);
  return r;
}

/// Shape of a reduced Groebner basis together with its escalier N for mu points.
template <Field F>
VerifyReport check_reduced_gb(std::span<const Polynomial<F>> G, std::span<const Exponent> N, TermOrder order,
                              std::size_t mu) {
  VerifyReport r;
  std::vector<Exponent> lms;
  bool nonzero = true;
  for (const auto& g : G) {
    if (g.is_zero()) {
      nonzero = false;
      continue;
    }
    lms.push_back(leading_monomial(g, order));
  }
  r.add("nonzero", nonzero, nonzero ? "" : "G contains the zero polynomial");

  {
    std::string bad;
    for (std::size_t k = 0; k < G.size() && bad.empty(); ++k) {
      if (G[k].is_zero()) continue;
      if (!G[k].field().equal(leading_term(G[k], order).second, G[k].field().one())) {
        bad = "G[" + std::to_string(k) + "] is not monic";
      }
    }
    r.add("monic", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t a = 0; a < lms.size() && bad.empty(); ++a) {
      for (std::size_t b = 0; b < lms.size(); ++b) {
        if (a != b && divides(lms[a], lms[b])) {
          bad = to_string(lms[a]) + " divides " + to_string(lms[b]);
          break;
        }
      }
    }
    r.add("leading monomials pairwise non-divisible", bad.empty(), bad);
  }
  std::vector<Exponent> sorted_n(N.begin(), N.end());
  std::sort(sorted_n.begin(), sorted_n.end());
  auto in_n = [&](Exponent e) { return std::binary_search(sorted_n.begin(), sorted_n.end(), e); };
  {
    std::string bad;
    for (std::size_t k = 0; k < G.size() && bad.empty(); ++k) {
      if (G[k].is_zero()) continue;
      auto lm = leading_monomial(G[k], order);
      for (const auto& [e, c] : G[k].terms()) {
        if (!(e == lm) && !in_n(e)) {
          bad = "G[" + std::to_string(k) + "] has tail monomial " + to_string(e) + " outside N";
          break;
        }
      }
    }
    r.add("tails lie in N", bad.empty(), bad);
  }
  r.add("N is a lower set", LowerSet::is_lower(N));
  r.add("#N = #points", N.size() == mu, "#N = " + std::to_string(N.size()) + ", #points = " + std::to_string(mu));
  {
    std::string bad;
    for (auto n : N) {
      for (auto m : lms) {
        if (divides(m, n)) bad = to_string(n) + " in N is divisible by " + to_string(m);
      }
    }
    r.add("N avoids leading monomials", bad.empty(), bad);
  }
  {
    std::string bad;
    if (LowerSet::is_lower(N)) {
      for (auto b : border(N, order)) {
        if (std::none_of(lms.begin(), lms.end(), [b](Exponent m) { return divides(m, b); })) {
          bad = "border monomial " + to_string(b) + " is not covered";
          break;
        }
      }
    }
    r.add("border covered by leading monomials", bad.empty(), bad);
  }
  return r;
}

/// Q[k](points[m]) = delta_km for m <= k.
template <Field F>
VerifyReport check_newton(std::span<const Polynomial<F>> Q, std::span<const Point<F>> points) {
  if (Q.size() != points.size()) throw LengthMismatch("need one point per Newton polynomial");
  VerifyReport r;
  for (std::size_t k = 0; k < Q.size(); ++k) {
    const F& field = Q[k].field();
    for (std::size_t m = 0; m <= k; ++m) {
      auto v = evaluate(Q[k], points[m].x, points[m].y);
      bool ok = (m == k) ? field.equal(v, field.one()) : field.is_zero(v);
      if (!ok) {
        r.add("newton triangularity", false,
              "Q[" + std::to_string(k) + "] at " + point_text(field, points[m]) + " is " + field.to_string(v));
        return r;
      }
    }
  }
  r.add("newton triangularity", true);
  return r;
}

/// Leading monomials of Q are exactly N (as sets).
template <Field F>
VerifyReport check_newton_span(std::span<const Polynomial<F>> Q, std::span<const Exponent> N, TermOrder order) {
  VerifyReport r;
  std::vector<Exponent> lms;
  for (const auto& q : Q) {
    if (q.is_zero()) {
      r.add("Q leading monomials enumerate N", false, "Q contains zero");
      return r;
    }
    lms.push_back(leading_monomial(q, order));
  }
  std::vector<Exponent> n(N.begin(), N.end());
  std::sort(lms.begin(), lms.end());
  std::sort(n.begin(), n.end());
  r.add("Q leading monomials enumerate N", lms == n);
  return r;
}

template <Field F>
struct OracleResult {
  std::vector<Polynomial<F>> G;  // ascending by leading monomial
  std::vector<Exponent> N;       // ascending
};

/// Batch ground truth: the full evaluation matrix of every monomial of degree <= mu,
/// reduced once to RREF; pivot columns are N and non-pivot minimal generators give G.
template <Field F>
OracleResult<F> oracle_dense(const PointSet<F>& points, TermOrder order, std::size_t cap = 64) {
  using Elem = typename F::Element;
  if (points.empty()) throw EmptySet("oracle on an empty point set");
  const std::size_t mu = points.size();
  if (mu > cap) throw CapExceeded("oracle is limited to " + std::to_string(cap) + " points");
  const F& field = points.field();
  const auto bound = static_cast<std::uint32_t>(mu);

  std::vector<Exponent> monos;
  for (std::uint32_t d = 0; d <= bound; ++d) {
    for (std::uint32_t i = 0; i <= d; ++i) monos.push_back({i, d - i});
  }
  sort_ascending(monos, order);
  const std::size_t cols = monos.size();

  // M[row = point][col = monomial]
  std::vector<std::vector<Elem>> M(mu, std::vector<Elem>(cols, field.zero()));
  for (std::size_t r = 0; r < mu; ++r) {
    auto px = powers(field, points[r].x, bound);
    auto py = powers(field, points[r].y, bound);
    for (std::size_t c = 0; c < cols; ++c) M[r][c] = field.mul(px[monos[c].i], py[monos[c].j]);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < mu; ++c) {
    std::size_t piv = rank;
    while (piv < mu && field.is_zero(M[piv][c])) ++piv;
    if (piv == mu) continue;
    std::swap(M[piv], M[rank]);
    auto inv = field.inv(M[rank][c]);
    for (auto& e : M[rank]) e = field.mul(e, inv);
    for (std::size_t r = 0; r < mu; ++r) {
      if (r == rank || field.is_zero(M[r][c])) continue;
      auto f = M[r][c];
      for (std::size_t k = 0; k < cols; ++k) M[r][k] = field.sub(M[r][k], field.mul(f, M[rank][k]));
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  if (rank != mu) throw InvalidState("evaluation matrix lost rank; points are not distinct");

  OracleResult<F> out;
  for (auto c : pivot_cols) out.N.push_back(monos[c]);
  for (auto n : out.N) {
    if (n.degree() >= bound) throw InvalidState("oracle degree bound reached");
  }
  std::vector<Exponent> sorted_n = out.N;
  std::sort(sorted_n.begin(), sorted_n.end());
  auto in_n = [&](Exponent e) { return std::binary_search(sorted_n.begin(), sorted_n.end(), e); };

  for (std::size_t c = 0; c < cols; ++c) {
    Exponent t = monos[c];
    if (in_n(t)) continue;
    bool minimal = (t.i == 0 || in_n({t.i - 1, t.j})) && (t.j == 0 || in_n({t.i, t.j - 1}));
    if (!minimal) continue;
    // column c = sum_k M[k][c] * (pivot column k)
    Polynomial<F> g = Polynomial<F>::monomial(field, t);
    for (std::size_t k = 0; k < mu; ++k) g.add_term(out.N[k], field.neg(M[k][c]));
    out.G.push_back(std::move(g));
  }
  return out;
}

/// Every check that applies to a BM result on `points`.
template <Field F>
VerifyReport verify_result(const BMResult<F>& result, const PointSet<F>& points, TermOrder order) {
  VerifyReport r = check_vanishing<F>(result.G, points);
  r.merge(check_reduced_gb<F>(result.G, result.N, order, points.size()));
  if (result.Q.size() != result.point_permutation.size() || result.Q.size() != points.size()) {
    r.add("Q size", false, "expected one Newton polynomial per point");
    return r;
  }
  std::vector<Point<F>> ordered;
  for (auto k : result.point_permutation) {
    if (k >= points.size()) {
      r.add("point permutation", false, "index " + std::to_string(k) + " out of range");
      return r;
    }
    ordered.push_back(points[k]);
  }
  r.merge(check_newton<F>(result.Q, ordered));
  return r;
}

}  // namespace bmpp

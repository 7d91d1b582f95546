#pragma once

// Buchberger-Moeller for points in F^2, plus the two preprocessed entry points:
// spbm_run (lex / inlex, seeded from a full Newton basis) and gpbm_run (any order,
// seeded from a maximal cartesian subset).

#include <algorithm>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/geometry.hpp"
#include "bmpp/monomial.hpp"
#include "bmpp/newton.hpp"
#include "bmpp/polynomial.hpp"

namespace bmpp {

/// Everything the main loop needs. Columns of B follow `points`.
template <Field F>
struct BMState {
  F field;
  TermOrder order = TermOrder::lex;
  std::vector<Point<F>> points;
  std::vector<std::size_t> point_index;  // input position of each column
  std::vector<Polynomial<F>> G;
  std::vector<Exponent> N;
  std::vector<Polynomial<F>> Q;          // Q[k] evaluates to row k of B
  std::vector<Exponent> L;               // ascending under order
  EchelonMatrix<F> B;
};

template <Field F>
struct BMResult {
  std::vector<Polynomial<F>> G;                 // monic, ascending by leading monomial
  std::vector<Exponent> N;                      // ascending under the order
  std::vector<Polynomial<F>> Q;                 // Newton basis, aligned with point_permutation
  std::vector<std::size_t> point_permutation;   // Q[k] is 1 at input point point_permutation[k], 0 at earlier ones
  std::size_t monomials_processed = 0;
  std::size_t seeded = 0;                       // #N handed over by preprocessing
};

template <Field F>
struct Reduction {
  std::vector<typename F::Element> residual;
  std::vector<std::pair<std::size_t, typename F::Element>> coeffs;  // nonzero multipliers only
};

/// residual = v - sum a_r * row_r, zero at every pivot column.
template <Field F>
Reduction<F> reduce_vector(const EchelonMatrix<F>& B, std::vector<typename F::Element> v) {
  if (v.size() != B.columns) throw LengthMismatch("vector length does not match the column count");
  const F& field = B.field;
  Reduction<F> out;
  for (std::size_t r = 0; r < B.rows.size(); ++r) {
    const auto p = B.pivots[r];
    auto a = v[p];
    if (field.is_zero(a)) continue;
    const auto& row = B.rows[r];
    for (std::size_t c = p; c < v.size(); ++c) {
      if (!field.is_zero(row[c])) v[c] = field.sub(v[c], field.mul(a, row[c]));
    }
    out.coeffs.emplace_back(r, std::move(a));
  }
  out.residual = std::move(v);
  return out;
}

/// {x t, y t : t in N} \ N, ascending under `order`.
inline std::vector<Exponent> border(std::span<const Exponent> N, TermOrder order) {
  if (!LowerSet::is_lower(N)) throw NotLowerSet("border of a set that is not lower");
  std::vector<Exponent> sorted(N.begin(), N.end());
  std::sort(sorted.begin(), sorted.end());
  auto in_n = [&](Exponent e) { return std::binary_search(sorted.begin(), sorted.end(), e); };
  std::vector<Exponent> out;
  for (auto t : sorted) {
    for (auto s : {t + kX, t + kY}) {
      if (!in_n(s)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  sort_ascending(out, order);
  return out;
}

/// Structural checks on a hand-over state; `deep` also re-evaluates Q against B.
template <Field F>
void validate_state(const BMState<F>& s, const PointSet<F>& input, bool deep) {
  const F& field = s.field;
  const std::size_t mu = input.size();
  if (!(field == input.field())) throw ContextMismatch("state and points use different fields");
  if (s.points.size() != mu || s.point_index.size() != mu || s.B.columns != mu) {
    throw InvalidState("state does not cover every input point exactly once");
  }
  std::vector<bool> seen(mu, false);
  for (std::size_t k = 0; k < mu; ++k) {
    auto src = s.point_index[k];
    if (src >= mu || seen[src]) throw InvalidState("point_index is not a permutation");
    seen[src] = true;
    if (!detail::point_equal(field, s.points[k], input[src])) throw InvalidState("points disagree with point_index");
  }
  if (s.N.size() != s.Q.size() || s.N.size() != s.B.row_count()) throw InvalidState("#N, #Q and rows of B differ");
  if (!LowerSet::is_lower(s.N)) throw InvalidState("N is not a lower set");

  OrderLess less{s.order};
  if (!std::is_sorted(s.L.begin(), s.L.end(), less) ||
      std::adjacent_find(s.L.begin(), s.L.end()) != s.L.end()) {
    throw InvalidState("L must be ascending and duplicate free");
  }
  std::vector<Exponent> sorted_n = s.N;
  std::sort(sorted_n.begin(), sorted_n.end());
  auto in_n = [&](Exponent e) { return std::binary_search(sorted_n.begin(), sorted_n.end(), e); };
  if (std::adjacent_find(sorted_n.begin(), sorted_n.end()) != sorted_n.end()) throw InvalidState("N repeats a monomial");
  std::vector<Exponent> g_lms;
  for (const auto& g : s.G) g_lms.push_back(leading_monomial(g, s.order));
  for (auto t : s.L) {
    if (in_n(t)) throw InvalidState("L intersects N");
    for (auto m : g_lms) {
      if (divides(m, t)) throw InvalidState("L contains a multiple of a leading monomial of G");
    }
  }
  for (const auto& q : s.Q) {
    for (const auto& [e, c] : q.terms()) {
      if (!in_n(e)) throw InvalidState("Q has support outside N");
    }
  }
  for (std::size_t r = 0; r < s.B.row_count(); ++r) {
    const auto p = s.B.pivots[r];
    const auto& row = s.B.rows[r];
    if (p >= mu || !field.equal(row[p], field.one())) throw InvalidState("pivot entry is not 1");
    for (std::size_t c = 0; c < p; ++c) {
      if (!field.is_zero(row[c])) throw InvalidState("nonzero entry left of a pivot");
    }
    for (std::size_t later = r + 1; later < s.B.row_count(); ++later) {
      if (!field.is_zero(s.B.rows[later][p])) throw InvalidState("later row is nonzero at an earlier pivot");
    }
  }
  if (deep) {
    for (std::size_t r = 0; r < s.Q.size(); ++r) {
      for (std::size_t c = 0; c < mu; ++c) {
        if (!field.equal(evaluate(s.Q[r], s.points[c].x, s.points[c].y), s.B.rows[r][c])) {
          throw InvalidState("row " + std::to_string(r) + " of B is not the evaluation of Q[" + std::to_string(r) + "]");
        }
      }
    }
  }
}

namespace detail {

template <Field F>
class BMEngine {
 public:
  using Elem = typename F::Element;

  explicit BMEngine(BMState<F> state) : s_(std::move(state)), field_(s_.field) {
    for (std::size_t k = 0; k < s_.N.size(); ++k) slot_.emplace(s_.N[k], k);
    for (const auto& q : s_.Q) {
      std::vector<Elem> coeffs(s_.N.size(), field_.zero());
      for (const auto& [e, c] : q.terms()) coeffs[slot_.at(e)] = c;
      q_coeffs_.push_back(std::move(coeffs));
    }
    for (const auto& g : s_.G) g_lms_.push_back(leading_monomial(g, s_.order));
    px_.push_back(std::vector<Elem>(s_.points.size(), field_.one()));
    py_.push_back(px_.front());
  }

  BMResult<F> run(std::size_t seeded) {
    std::size_t processed = 0;
    while (!s_.L.empty()) {
      const Exponent t = s_.L.front();
      s_.L.erase(s_.L.begin());
      ++processed;

      auto red = reduce_vector(s_.B, evaluation(t));
      auto combo = combine(red.coeffs);
      auto pivot = std::find_if(red.residual.begin(), red.residual.end(),
                                [this](const Elem& e) { return !field_.is_zero(e); });

      if (pivot == red.residual.end()) {
        // t - sum a_i q_i vanishes on every point
        Polynomial<F> g = Polynomial<F>::monomial(field_, t);
        for (std::size_t k = 0; k < combo.size(); ++k) g.add_term(s_.N[k], field_.neg(combo[k]));
        s_.G.push_back(std::move(g));
        g_lms_.push_back(t);
        std::erase_if(s_.L, [t](Exponent e) { return divides(t, e); });
        continue;
      }

      const auto p = static_cast<std::size_t>(pivot - red.residual.begin());
      const Elem scale = field_.inv(red.residual[p]);
      for (std::size_t c = p; c < red.residual.size(); ++c) red.residual[c] = field_.mul(red.residual[c], scale);
      s_.B.append(std::move(red.residual), p);

      for (auto& c : combo) c = field_.neg(field_.mul(c, scale));
      combo.push_back(scale);
      slot_.emplace(t, s_.N.size());
      s_.N.push_back(t);
      q_coeffs_.push_back(std::move(combo));

      for (auto next : {t + kX, t + kY}) {
        bool skip = std::any_of(s_.L.begin(), s_.L.end(), [next](Exponent e) { return divides(e, next); }) ||
                    std::any_of(g_lms_.begin(), g_lms_.end(), [next](Exponent e) { return divides(e, next); });
        if (skip) continue;
        auto at = std::lower_bound(s_.L.begin(), s_.L.end(), next, OrderLess{s_.order});
        s_.L.insert(at, next);
      }
    }
    return finish(processed, seeded);
  }

 private:
  std::vector<Elem> evaluation(Exponent t) {
    const std::size_t mu = s_.points.size();
    while (px_.size() <= t.i) {
      std::vector<Elem> next(mu);
      for (std::size_t c = 0; c < mu; ++c) next[c] = field_.mul(px_.back()[c], s_.points[c].x);
      px_.push_back(std::move(next));
    }
    while (py_.size() <= t.j) {
      std::vector<Elem> next(mu);
      for (std::size_t c = 0; c < mu; ++c) next[c] = field_.mul(py_.back()[c], s_.points[c].y);
      py_.push_back(std::move(next));
    }
    std::vector<Elem> v(mu);
    for (std::size_t c = 0; c < mu; ++c) v[c] = field_.mul(px_[t.i][c], py_[t.j][c]);
    return v;
  }

  // sum a_r q_r as coefficients over the current N slots
  std::vector<Elem> combine(const std::vector<std::pair<std::size_t, Elem>>& coeffs) const {
    std::vector<Elem> out(s_.N.size(), field_.zero());
    for (const auto& [r, a] : coeffs) {
      const auto& q = q_coeffs_[r];
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (!field_.is_zero(q[k])) out[k] = field_.add(out[k], field_.mul(a, q[k]));
      }
    }
    return out;
  }

  BMResult<F> finish(std::size_t processed, std::size_t seeded) {
    BMResult<F> out;
    out.monomials_processed = processed;
    out.seeded = seeded;
    out.G = std::move(s_.G);
    std::sort(out.G.begin(), out.G.end(), [this](const Polynomial<F>& a, const Polynomial<F>& b) {
      return compare(s_.order, leading_monomial(a, s_.order), leading_monomial(b, s_.order)) < 0;
    });
    for (const auto& coeffs : q_coeffs_) {
      Polynomial<F> q(field_);
      for (std::size_t k = 0; k < coeffs.size(); ++k) q.add_term(s_.N[k], coeffs[k]);
      out.Q.push_back(std::move(q));
    }
    out.N = s_.N;
    sort_ascending(out.N, s_.order);
    for (auto p : s_.B.pivots) out.point_permutation.push_back(s_.point_index[p]);
    return out;
  }

  BMState<F> s_;
  F field_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> slot_;
  std::vector<std::vector<Elem>> q_coeffs_;
  std::vector<Exponent> g_lms_;
  std::vector<std::vector<Elem>> px_, py_;  // px_[i][c] = x_c^i
};

#ifdef NDEBUG
inline constexpr bool kDeepValidation = false;
#else
inline constexpr bool kDeepValidation = true;
#endif

}  // namespace detail

/// Plain BM from L = [1], or continues the main loop from a seeded state.
template <Field F>
BMResult<F> bm_run(const PointSet<F>& input, TermOrder order, std::optional<BMState<F>> init = std::nullopt) {
  if (input.empty()) throw EmptySet("BM on an empty point set");
  const std::size_t mu = input.size();
  if (!init) {
    BMState<F> s{input.field(), order, input.points(), {}, {}, {}, {}, {kOne}, EchelonMatrix<F>(input.field(), mu)};
    s.point_index.resize(mu);
    for (std::size_t k = 0; k < mu; ++k) s.point_index[k] = k;
    return detail::BMEngine<F>(std::move(s)).run(0);
  }
  if (init->order != order) throw InvalidState("seeded state uses a different term order");
  validate_state(*init, input, detail::kDeepValidation);
  const std::size_t seeded = init->N.size();
  return detail::BMEngine<F>(std::move(*init)).run(seeded);
}

/// Seeds N, Q, B from a Newton basis and L from its border.
template <Field F>
BMState<F> seed_state(const PointSet<F>& input, TermOrder order, const NewtonBasis<F>& basis,
                      std::vector<Point<F>> ordered, std::vector<std::size_t> ordered_index) {
  auto B = evaluation_matrix(basis, std::span<const Point<F>>(ordered));
  auto L = border(basis.index_order, order);
  return BMState<F>{input.field(), order,       std::move(ordered), std::move(ordered_index), {},
                    basis.index_order, basis.polys, std::move(L),       std::move(B)};
}

/// lex: row cover, S_x and phi^x. inlex: column cover, S_y and phi^y.
template <Field F>
BMResult<F> spbm_run(const PointSet<F>& input, TermOrder order) {
  if (is_degree_order(order)) throw UnsupportedOrder("SPBM supports only lex and inlex");
  if (input.empty()) throw EmptySet("SPBM on an empty point set");
  auto basis = order == TermOrder::lex ? newton_basis_rows(line_cover(input, Axis::rows))
                                       : newton_basis_cols(line_cover(input, Axis::columns));
  auto state = seed_state(input, order, basis, basis.point_order, basis.point_index);
  return bm_run(input, order, std::optional<BMState<F>>(std::move(state)));
}

/// Seeds from S_x of a maximal cartesian subset; valid for every term order.
template <Field F>
BMResult<F> gpbm_run(const PointSet<F>& input, TermOrder order) {
  if (input.empty()) throw EmptySet("GPBM on an empty point set");
  auto mcs = max_cartesian_subset(input);
  auto rows = line_cover(mcs.subset, Axis::rows);
  auto ordered = order_points_gpbm(input, mcs.subset, rows);
  auto basis = newton_basis_rows(rows);
  auto state = seed_state(input, order, basis, ordered.points.points(), std::move(ordered.source));
  return bm_run(input, order, std::optional<BMState<F>>(std::move(state)));
}

enum class Algorithm { bm, spbm, gpbm, automatic };

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "bm") return Algorithm::bm;
  if (name == "spbm") return Algorithm::spbm;
  if (name == "gpbm") return Algorithm::gpbm;
  if (name == "auto") return Algorithm::automatic;
  throw BadSpec("unknown algorithm '" + std::string(name) + "' (expected bm, spbm, gpbm or auto)");
}

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::bm: return "bm";
    case Algorithm::spbm: return "spbm";
    case Algorithm::gpbm: return "gpbm";
    case Algorithm::automatic: return "auto";
  }
  return "?";
}

/// auto picks spbm for lex / inlex and gpbm otherwise.
inline Algorithm resolve(Algorithm a, TermOrder order) {
  if (a == Algorithm::automatic) return is_degree_order(order) ? Algorithm::gpbm : Algorithm::spbm;
  if (a == Algorithm::spbm && is_degree_order(order)) throw UnsupportedOrder("SPBM supports only lex and inlex");
  return a;
}

template <Field F>
BMResult<F> run_algorithm(Algorithm a, const PointSet<F>& input, TermOrder order) {
  switch (resolve(a, order)) {
    case Algorithm::bm: return bm_run(input, order);
    case Algorithm::spbm: return spbm_run(input, order);
    default: return gpbm_run(input, order);
  }
}

}  // namespace bmpp

#pragma once

// Point sets, line covers, lower sets and cartesian-set machinery.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/monomial.hpp"

namespace bmpp {

template <Field F>
struct Point {
  typename F::Element x;
  typename F::Element y;
};

template <Field F>
std::string point_text(const F& field, const Point<F>& p) {
  return "(" + field.to_string(p.x) + "," + field.to_string(p.y) + ")";
}

namespace detail {

template <Field F>
bool point_less(const F& field, const Point<F>& a, const Point<F>& b) {
  if (field.repr_less(a.x, b.x)) return true;
  if (field.repr_less(b.x, a.x)) return false;
  return field.repr_less(a.y, b.y);
}

template <Field F>
bool point_equal(const F& field, const Point<F>& a, const Point<F>& b) {
  return field.equal(a.x, b.x) && field.equal(a.y, b.y);
}

}  // namespace detail

/// Ordered list of pairwise distinct points.
template <Field F>
class PointSet {
 public:
  using Elem = typename F::Element;

  PointSet(F field, std::vector<Point<F>> points) : field_(std::move(field)), points_(std::move(points)) {
    if (auto dup = find_duplicate(field_, points_)) {
      throw DuplicatePoint("points " + std::to_string(dup->first) + " and " + std::to_string(dup->second) +
                           " coincide");
    }
  }

  /// First pair of coinciding positions (lower index first), if any.
  static std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const F& field,
                                                                           std::span<const Point<F>> points) {
    std::vector<std::size_t> idx(points.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return detail::point_less(field, points[a], points[b]);
    });
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (detail::point_equal(field, points[idx[k - 1]], points[idx[k]])) {
        std::pair<std::size_t, std::size_t> hit{idx[k - 1], idx[k]};
        if (!best || hit.second < best->second) best = hit;
      }
    }
    return best;
  }

  const F& field() const { return field_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point<F>& operator[](std::size_t k) const { return points_[k]; }
  const std::vector<Point<F>>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Position of `p`, if present. Linear scan.
  std::optional<std::size_t> find(const Point<F>& p) const {
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (detail::point_equal(field_, points_[k], p)) return k;
    }
    return std::nullopt;
  }

  PointSet subset(std::span<const std::size_t> indices) const {
    std::vector<Point<F>> pts;
    pts.reserve(indices.size());
    for (auto k : indices) pts.push_back(points_.at(k));
    return PointSet(field_, std::move(pts));
  }

 private:
  F field_;
  std::vector<Point<F>> points_;
};

enum class Axis { rows, columns };

/// One covering line: rows are y = key, columns are x = key.
template <Field F>
struct Line {
  typename F::Element key;
  std::vector<Point<F>> points;       // ascending in the varying coordinate
  std::vector<std::size_t> indices;   // positions in the covered set
};

template <Field F>
struct LineCover {
  F field;
  Axis axis = Axis::rows;
  std::vector<Line<F>> lines;  // non-increasing size, ties by ascending key

  std::size_t point_count() const {
    std::size_t n = 0;
    for (const auto& l : lines) n += l.points.size();
    return n;
  }
};

namespace detail {

// Groups `indices` of `points` by the fixed coordinate of `axis`.
template <Field F>
LineCover<F> cover_indices(const F& field, const std::vector<Point<F>>& points, std::span<const std::size_t> indices,
                           Axis axis) {
  using Elem = typename F::Element;
  auto key_of = [axis](const Point<F>& p) -> const Elem& { return axis == Axis::rows ? p.y : p.x; };
  auto var_of = [axis](const Point<F>& p) -> const Elem& { return axis == Axis::rows ? p.x : p.y; };
  auto less = [&field](const Elem& a, const Elem& b) { return field.repr_less(a, b); };

  std::map<Elem, std::vector<std::size_t>, decltype(less)> groups(less);
  for (auto k : indices) groups[key_of(points[k])].push_back(k);

  LineCover<F> cover{field, axis, {}};
  cover.lines.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return field.repr_less(var_of(points[a]), var_of(points[b])); });
    Line<F> line{key, {}, std::move(members)};
    line.points.reserve(line.indices.size());
    for (auto k : line.indices) line.points.push_back(points[k]);
    cover.lines.push_back(std::move(line));
  }
  // Keys are already ascending, so a stable sort keeps the tie-break.
  std::stable_sort(cover.lines.begin(), cover.lines.end(),
                   [](const Line<F>& a, const Line<F>& b) { return a.points.size() > b.points.size(); });
  return cover;
}

}  // namespace detail

template <Field F>
LineCover<F> line_cover(const PointSet<F>& points, Axis axis) {
  if (points.empty()) throw EmptySet("line cover of an empty point set");
  std::vector<std::size_t> all(points.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return detail::cover_indices(points.field(), points.points(), all, axis);
}

/// Finite lower (downward closed) subset of N0^2.
class LowerSet {
 public:
  LowerSet() = default;

  static bool is_lower(std::span<const Exponent> exps) {
    std::vector<Exponent> sorted(exps.begin(), exps.end());
    std::sort(sorted.begin(), sorted.end());
    auto has = [&](Exponent e) { return std::binary_search(sorted.begin(), sorted.end(), e); };
    for (auto e : sorted) {
      if (e.i > 0 && !has({e.i - 1, e.j})) return false;
      if (e.j > 0 && !has({e.i, e.j - 1})) return false;
    }
    return true;
  }

  static LowerSet from_exponents(std::vector<Exponent> exps) {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    if (!is_lower(exps)) throw NotLowerSet("exponent set is not a lower set");
    LowerSet s;
    s.exps_ = std::move(exps);
    return s;
  }

  /// L_x(m_0, ..., m_nu): row j holds x-exponents 0..m_j.
  static LowerSet from_lx(std::span<const std::uint32_t> m) {
    std::vector<Exponent> exps;
    for (std::uint32_t j = 0; j < m.size(); ++j) {
      if (j > 0 && m[j] > m[j - 1]) throw NotLowerSet("L_x tuple must be non-increasing");
      for (std::uint32_t i = 0; i <= m[j]; ++i) exps.push_back({i, j});
    }
    return from_exponents(std::move(exps));
  }

  /// L_y(n_0, ..., n_lambda): column i holds y-exponents 0..n_i.
  static LowerSet from_ly(std::span<const std::uint32_t> n) {
    std::vector<Exponent> exps;
    for (std::uint32_t i = 0; i < n.size(); ++i) {
      if (i > 0 && n[i] > n[i - 1]) throw NotLowerSet("L_y tuple must be non-increasing");
      for (std::uint32_t j = 0; j <= n[i]; ++j) exps.push_back({i, j});
    }
    return from_exponents(std::move(exps));
  }

  bool contains(Exponent e) const { return std::binary_search(exps_.begin(), exps_.end(), e); }
  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::vector<Exponent> sorted(TermOrder order) const {
    auto out = exps_;
    sort_ascending(out, order);
    return out;
  }

  /// (m_0, ..., m_nu).
  std::vector<std::uint32_t> lx() const {
    std::vector<std::uint32_t> m;
    for (auto e : exps_) {
      if (e.j >= m.size()) m.resize(e.j + 1, 0);
      m[e.j] = std::max(m[e.j], e.i);
    }
    return m;
  }

  /// (n_0, ..., n_{m_0}).
  std::vector<std::uint32_t> ly() const {
    std::vector<std::uint32_t> n;
    for (auto e : exps_) {
      if (e.i >= n.size()) n.resize(e.i + 1, 0);
      n[e.i] = std::max(n[e.i], e.j);
    }
    return n;
  }

  friend bool operator==(const LowerSet&, const LowerSet&) = default;

 private:
  std::vector<Exponent> exps_;  // sorted by (i, j)
};

/// Rows give S_x = L_x(m_0, ...), columns give S_y = L_y(n_0, ...).
template <Field F>
LowerSet lower_set_of(const LineCover<F>& cover) {
  std::vector<std::uint32_t> tuple;
  tuple.reserve(cover.lines.size());
  for (const auto& l : cover.lines) tuple.push_back(static_cast<std::uint32_t>(l.points.size() - 1));
  return cover.axis == Axis::rows ? LowerSet::from_lx(tuple) : LowerSet::from_ly(tuple);
}

enum class CartesianTest { sx_eq_sy, nested_chains };

namespace detail {

// H_0 ⊇ H_1 ⊇ ... for the coordinate sets of consecutive lines.
template <Field F>
bool nested(const F& field, const LineCover<F>& cover) {
  auto var_of = [&cover](const Point<F>& p) -> const auto& { return cover.axis == Axis::rows ? p.x : p.y; };
  for (std::size_t k = 1; k < cover.lines.size(); ++k) {
    const auto& outer = cover.lines[k - 1].points;
    for (const auto& p : cover.lines[k].points) {
      // outer is sorted ascending by the varying coordinate
      auto it = std::lower_bound(outer.begin(), outer.end(), p, [&](const Point<F>& a, const Point<F>& b) {
        return field.repr_less(var_of(a), var_of(b));
      });
      if (it == outer.end() || !field.equal(var_of(*it), var_of(p))) return false;
    }
  }
  return true;
}

template <Field F>
bool cartesian_indices(const F& field, const std::vector<Point<F>>& points, std::span<const std::size_t> indices,
                       CartesianTest method) {
  auto rows = cover_indices(field, points, indices, Axis::rows);
  auto cols = cover_indices(field, points, indices, Axis::columns);
  if (method == CartesianTest::sx_eq_sy) return lower_set_of(rows) == lower_set_of(cols);
  return nested(field, rows) && nested(field, cols);
}

}  // namespace detail

template <Field F>
bool is_cartesian(const PointSet<F>& points, CartesianTest method = CartesianTest::sx_eq_sy) {
  if (points.empty()) throw EmptySet("cartesian test on an empty point set");
  std::vector<std::size_t> all(points.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return detail::cartesian_indices(points.field(), points.points(), all, method);
}

template <Field F>
struct CartesianSubset {
  PointSet<F> subset;                 // construction order
  std::vector<std::size_t> indices;   // positions of `subset` in the input
  std::vector<std::size_t> removed;   // positions of the rest, input order
};

/// Greedy maximal cartesian subset: peel off the largest row (smallest key on ties),
/// keep only points sharing an abscissa with it, and stop once the remainder is cartesian.
template <Field F>
CartesianSubset<F> max_cartesian_subset(const PointSet<F>& points) {
  if (points.empty()) throw EmptySet("maximal cartesian subset of an empty point set");
  const F& field = points.field();
  const auto& pts = points.points();

  std::vector<std::size_t> remaining(points.size());
  for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] = k;
  std::vector<std::size_t> chosen;

  while (!remaining.empty()) {
    auto rows = detail::cover_indices(field, pts, remaining, Axis::rows);
    auto cols = detail::cover_indices(field, pts, remaining, Axis::columns);
    if (lower_set_of(rows) == lower_set_of(cols)) {
      for (const auto& line : rows.lines) chosen.insert(chosen.end(), line.indices.begin(), line.indices.end());
      break;
    }
    const auto& row = rows.lines.front();
    chosen.insert(chosen.end(), row.indices.begin(), row.indices.end());

    std::vector<std::size_t> next;
    for (auto k : remaining) {
      if (std::find(row.indices.begin(), row.indices.end(), k) != row.indices.end()) continue;
      bool shares_abscissa = std::any_of(row.points.begin(), row.points.end(),
                                         [&](const Point<F>& p) { return field.equal(p.x, pts[k].x); });
      if (shares_abscissa) next.push_back(k);
    }
    remaining = std::move(next);
  }

  std::vector<bool> in_subset(points.size(), false);
  for (auto k : chosen) in_subset[k] = true;
  std::vector<std::size_t> removed;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!in_subset[k]) removed.push_back(k);
  }
  return {points.subset(chosen), std::move(chosen), std::move(removed)};
}

template <Field F>
struct OrderedPoints {
  PointSet<F> points;
  std::vector<std::size_t> source;  // source[k] = position of points[k] in the input
};

/// Points of the cartesian subset first (inlex on their S_x indices, i.e. line by line),
/// then the remaining points in input order.
template <Field F>
OrderedPoints<F> order_points_gpbm(const PointSet<F>& all, const PointSet<F>& subset, const LineCover<F>& subset_rows) {
  if (subset_rows.axis != Axis::rows) throw SubsetViolation("the subset cover must be a row cover");
  if (subset_rows.point_count() != subset.size()) throw SubsetViolation("cover does not match the subset");
  const F& field = all.field();

  std::vector<std::size_t> by_value(all.size());
  for (std::size_t k = 0; k < by_value.size(); ++k) by_value[k] = k;
  std::sort(by_value.begin(), by_value.end(),
            [&](std::size_t a, std::size_t b) { return detail::point_less(field, all[a], all[b]); });
  auto locate = [&](const Point<F>& p) -> std::size_t {
    auto it = std::lower_bound(by_value.begin(), by_value.end(), p, [&](std::size_t k, const Point<F>& q) {
      return detail::point_less(field, all[k], q);
    });
    if (it == by_value.end() || !detail::point_equal(field, all[*it], p)) {
      throw SubsetViolation("point of the cartesian subset is missing from the full set");
    }
    return *it;
  };

  std::vector<std::size_t> order;
  std::vector<bool> used(all.size(), false);
  for (const auto& line : subset_rows.lines) {
    for (const auto& p : line.points) {
      auto k = locate(p);
      if (used[k]) throw SubsetViolation("repeated point in the cartesian subset");
      used[k] = true;
      order.push_back(k);
    }
  }
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (!used[k]) order.push_back(k);
  }
  return {all.subset(order), std::move(order)};
}

}  // namespace bmpp

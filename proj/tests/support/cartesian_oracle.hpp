#pragma once

#include <algorithm>
#include <vector>

#include "bmpp/bmpp.hpp"

namespace testing_support {

/// Brute force: some ordering of the distinct abscissae and ordinates maps the set onto a lower set
/// of index pairs. Factorial cost, so only for sets with few distinct coordinates.
template <typename F>
bool cartesian_by_permutation(const F& field, const std::vector<bmpp::Point<F>>& pts) {
  if (pts.empty()) return true;
  std::vector<typename F::Element> xs, ys;
  auto add_unique = [&](std::vector<typename F::Element>& v, const typename F::Element& e) {
    if (std::none_of(v.begin(), v.end(), [&](const auto& u) { return field.equal(u, e); })) v.push_back(e);
  };
  for (const auto& p : pts) {
    add_unique(xs, p.x);
    add_unique(ys, p.y);
  }
  auto pos = [&](const std::vector<typename F::Element>& v, const typename F::Element& e) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (field.equal(v[k], e)) return static_cast<std::uint32_t>(k);
    return static_cast<std::uint32_t>(v.size());
  };
  auto less = [&](const auto& a, const auto& b) { return field.repr_less(a, b); };
  std::sort(xs.begin(), xs.end(), less);
  do {
    std::sort(ys.begin(), ys.end(), less);
    do {
      std::vector<bmpp::Exponent> idx;
      for (const auto& p : pts) idx.push_back({pos(xs, p.x), pos(ys, p.y)});
      if (bmpp::LowerSet::is_lower(idx)) return true;
    } while (std::next_permutation(ys.begin(), ys.end(), less));
  } while (std::next_permutation(xs.begin(), xs.end(), less));
  return false;
}

/// Same predicate without the search: in a cartesian set longer columns and rows come first, and
/// equally long ones are interchangeable, so sorting by count yields a valid ordering when one exists.
template <typename F>
bool cartesian_by_counts(const F& field, const std::vector<bmpp::Point<F>>& pts) {
  std::vector<std::pair<typename F::Element, std::size_t>> xs, ys;
  auto bump = [&](std::vector<std::pair<typename F::Element, std::size_t>>& v, const typename F::Element& e) {
    for (auto& [u, n] : v) {
      if (field.equal(u, e)) {
        ++n;
        return;
      }
    }
    v.push_back({e, 1});
  };
  for (const auto& p : pts) {
    bump(xs, p.x);
    bump(ys, p.y);
  }
  auto by_count = [](const auto& a, const auto& b) { return a.second > b.second; };
  std::stable_sort(xs.begin(), xs.end(), by_count);
  std::stable_sort(ys.begin(), ys.end(), by_count);
  auto pos = [&](const auto& v, const typename F::Element& e) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (field.equal(v[k].first, e)) return static_cast<std::uint32_t>(k);
    return static_cast<std::uint32_t>(v.size());
  };
  std::vector<bmpp::Exponent> idx;
  for (const auto& p : pts) idx.push_back({pos(xs, p.x), pos(ys, p.y)});
  return bmpp::LowerSet::is_lower(idx);
}

/// True when no cartesian subset of `all` strictly contains `chosen` (positions into `all`).
template <typename F>
bool is_maximal_cartesian(const F& field, const std::vector<bmpp::Point<F>>& all, const std::vector<std::size_t>& chosen) {
  std::vector<bool> in(all.size(), false);
  for (auto k : chosen) in[k] = true;
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (!in[k]) rest.push_back(k);
  // any cartesian strict superset implies one obtained by adding points; test every nonempty addition
  for (std::size_t mask = 1; mask < (std::size_t{1} << rest.size()); ++mask) {
    std::vector<bmpp::Point<F>> sup;
    for (auto k : chosen) sup.push_back(all[k]);
    for (std::size_t b = 0; b < rest.size(); ++b)
      if (mask >> b & 1) sup.push_back(all[rest[b]]);
    if (cartesian_by_counts(field, sup)) return false;
  }
  return true;
}

}  // namespace testing_support

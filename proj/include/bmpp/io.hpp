#pragma once

// Point files ("x,y" per line, '#' comments) and the JSON result schema.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bmpp/bm.hpp"
#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/geometry.hpp"
#include "bmpp/polynomial.hpp"
#include "bmpp/verify.hpp"

namespace bmpp {

template <Field F>
PointSet<F> read_points(const F& field, std::istream& in) {
  std::vector<Point<F>> pts;
  std::vector<std::size_t> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'x,y'");
    }
    try {
      pts.push_back({field.parse(line.substr(0, comma)), field.parse(line.substr(comma + 1))});
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    lines.push_back(lineno);
  }
  if (auto dup = PointSet<F>::find_duplicate(field, pts)) {
    throw DuplicatePoint("duplicate point " + point_text(field, pts[dup->second]) + " on lines " +
                         std::to_string(lines[dup->first]) + " and " + std::to_string(lines[dup->second]));
  }
  return PointSet<F>(field, std::move(pts));
}

template <Field F>
PointSet<F> read_points_file(const F& field, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file '" + path + "'");
  return read_points(field, in);
}

template <Field F>
void write_points(const PointSet<F>& points, std::ostream& out) {
  for (const auto& p : points) out << points.field().to_string(p.x) << ',' << points.field().to_string(p.y) << '\n';
}

/// [[i, j, "coeff"], ...] descending under `order`.
template <Field F>
nlohmann::json poly_to_json(const Polynomial<F>& p, TermOrder order) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.sorted_terms(order)) arr.push_back({e.i, e.j, p.field().to_string(c)});
  return arr;
}

template <Field F>
Polynomial<F> poly_from_json(const F& field, const nlohmann::json& arr) {
  Polynomial<F> p(field);
  if (!arr.is_array()) throw ParseError("polynomial must be a JSON array of [i, j, \"coeff\"] triples");
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3 || !t[2].is_string()) throw ParseError("malformed polynomial term");
    Exponent e{t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>()};
    p.add_term(e, field.parse(t[2].get<std::string>()));
  }
  return p;
}

template <Field F>
nlohmann::json result_to_json(const BMResult<F>& r, const F& field, TermOrder order, Algorithm algorithm) {
  nlohmann::json j;
  j["field"] = field.spec();
  j["order"] = std::string(to_string(order));
  j["algorithm"] = std::string(to_string(algorithm));
  j["G"] = nlohmann::json::array();
  for (const auto& g : r.G) j["G"].push_back(poly_to_json(g, order));
  j["N"] = nlohmann::json::array();
  for (auto e : r.N) j["N"].push_back({e.i, e.j});
  j["Q"] = nlohmann::json::array();
  for (const auto& q : r.Q) j["Q"].push_back(poly_to_json(q, order));
  j["pointPermutation"] = r.point_permutation;
  return j;
}

/// Rebuilds a result from its JSON form; field and order come from the document.
template <Field F>
BMResult<F> result_from_json(const F& field, const nlohmann::json& j) {
  BMResult<F> r;
  try {
    for (const auto& g : j.at("G")) r.G.push_back(poly_from_json(field, g));
    for (const auto& e : j.at("N")) r.N.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
    for (const auto& q : j.at("Q")) r.Q.push_back(poly_from_json(field, q));
    r.point_permutation = j.at("pointPermutation").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed result JSON: ") + e.what());
  }
  return r;
}

inline nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["passed"] = report.passed;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

template <Field F>
std::string result_to_text(const BMResult<F>& r, TermOrder order) {
  std::ostringstream out;
  out << "G (" << r.G.size() << "):\n";
  for (const auto& g : r.G) out << "  " << to_text(g, order) << '\n';
  out << "N (" << r.N.size() << "):\n  ";
  for (std::size_t k = 0; k < r.N.size(); ++k) out << (k ? ", " : "") << to_string(r.N[k]);
  out << "\nQ (" << r.Q.size() << "):\n";
  for (const auto& q : r.Q) out << "  " << to_text(q, order) << '\n';
  out << "point permutation:";
  for (auto k : r.point_permutation) out << ' ' << k;
  out << '\n';
  return out.str();
}

}  // namespace bmpp

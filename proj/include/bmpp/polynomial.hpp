#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/monomial.hpp"

namespace bmpp {

/// Sparse bivariate polynomial. Never stores a zero coefficient.
template <Field F>
class Polynomial {
 public:
  using Elem = typename F::Element;
  using Term = std::pair<Exponent, Elem>;

  explicit Polynomial(F field) : field_(std::move(field)) {}

  static Polynomial constant(const F& field, const Elem& c) { return monomial(field, kOne, c); }
  static Polynomial monomial(const F& field, Exponent e, const Elem& c) {
    Polynomial p(field);
    p.add_term(e, c);
    return p;
  }
  static Polynomial monomial(const F& field, Exponent e) { return monomial(field, e, field.one()); }

  const F& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Terms in storage order (by (i, j)); use sorted_terms for a term order.
  const std::map<Exponent, Elem>& terms() const { return terms_; }

  Elem coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(Exponent e, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  /// Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(TermOrder order) const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [order](const Term& a, const Term& b) { return compare(order, a.first, b.first) > 0; });
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    require_same_field(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    require_same_field(other);
    for (const auto& [e, c] : other.terms_) add_term(e, field_.neg(c));
    return *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (!(it->first == e) || !a.field_.equal(it->second, c)) return false;
      ++it;
    }
    return true;
  }

  void require_same_field(const Polynomial& other) const {
    if (!(field_ == other.field_)) throw ContextMismatch("polynomials over different fields");
  }

 private:
  F field_;
  std::map<Exponent, Elem> terms_;
};

template <Field F>
Polynomial<F> add(const Polynomial<F>& p, const Polynomial<F>& q) {
  Polynomial<F> r = p;
  r += q;
  return r;
}

template <Field F>
Polynomial<F> sub(const Polynomial<F>& p, const Polynomial<F>& q) {
  Polynomial<F> r = p;
  r -= q;
  return r;
}

template <Field F>
Polynomial<F> scale(const typename F::Element& c, const Polynomial<F>& p) {
  Polynomial<F> r(p.field());
  if (p.field().is_zero(c)) return r;
  for (const auto& [e, a] : p.terms()) r.add_term(e, p.field().mul(c, a));
  return r;
}

template <Field F>
Polynomial<F> mul_monomial(Exponent m, const Polynomial<F>& p) {
  Polynomial<F> r(p.field());
  for (const auto& [e, a] : p.terms()) r.add_term(e + m, a);
  return r;
}

/// p * (v - root), where v is the variable x (kX) or y (kY).
template <Field F>
Polynomial<F> mul_linear(const Polynomial<F>& p, Exponent variable, const typename F::Element& root) {
  Polynomial<F> r = mul_monomial(variable, p);
  r -= scale(root, p);
  return r;
}

template <Field F>
std::pair<Exponent, typename F::Element> leading_term(const Polynomial<F>& p, TermOrder order) {
  if (p.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    if (compare(order, it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

template <Field F>
Exponent leading_monomial(const Polynomial<F>& p, TermOrder order) {
  return leading_term(p, order).first;
}

template <Field F>
Polynomial<F> make_monic(const Polynomial<F>& p, TermOrder order) {
  auto lc = leading_term(p, order).second;
  return scale(p.field().inv(lc), p);
}

/// Powers base^0..base^n.
template <Field F>
std::vector<typename F::Element> powers(const F& field, const typename F::Element& base, std::uint32_t n) {
  std::vector<typename F::Element> out;
  out.reserve(n + 1);
  out.push_back(field.one());
  for (std::uint32_t k = 0; k < n; ++k) out.push_back(field.mul(out.back(), base));
  return out;
}

template <Field F>
typename F::Element evaluate(const Polynomial<F>& p, const typename F::Element& x, const typename F::Element& y) {
  const F& field = p.field();
  std::uint32_t max_i = 0, max_j = 0;
  for (const auto& [e, c] : p.terms()) {
    max_i = std::max(max_i, e.i);
    max_j = std::max(max_j, e.j);
  }
  auto px = powers(field, x, max_i);
  auto py = powers(field, y, max_j);
  auto acc = field.zero();
  for (const auto& [e, c] : p.terms()) acc = field.add(acc, field.mul(c, field.mul(px[e.i], py[e.j])));
  return acc;
}

namespace detail {

inline std::string coefficient_text(const PrimeField& field, const PrimeField::Element& c, bool& negative) {
  negative = false;
  return field.to_string(c);
}

inline std::string coefficient_text(const RationalField&, const mpq_class& c, bool& negative) {
  negative = sgn(c) < 0;
  mpq_class a = abs(c);
  if (a.get_den() == 1) return a.get_num().get_str();
  return "(" + a.get_str() + ")";
}

}  // namespace detail

/// Renders terms descending under `order`, e.g. "2x^3+x^2+4x" or "x^2-(1/2)y+3".
template <Field F>
std::string to_text(const Polynomial<F>& p, TermOrder order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms(order)) {
    bool negative = false;
    std::string coef = detail::coefficient_text(p.field(), c, negative);
    if (negative) out += "-";
    else if (!first) out += "+";
    first = false;
    bool unit = (coef == "1");
    if (e == kOne) out += coef;
    else out += (unit ? std::string{} : coef) + to_string(e);
  }
  return out;
}

/// Parses the text rendering back; also accepts '*' separators and "a/b" coefficients
/// without parentheses, e.g. "xy^2 - 1/2*x^2y + 4".
template <Field F>
Polynomial<F> parse_polynomial(const F& field, std::string_view text) {
  Polynomial<F> p(field);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("polynomial '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
  };
  auto read_digits = [&]() -> std::string_view {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto read_exponent = [&]() -> std::uint32_t {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      auto d = read_digits();
      if (d.empty()) throw fail("expected exponent");
      return static_cast<std::uint32_t>(std::stoul(std::string(d)));
    }
    return 1;
  };

  skip_ws();
  if (text.substr(pos) == "0") return p;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw fail("empty polynomial");
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    std::string coef;
    if (pos < text.size() && text[pos] == '(') {
      auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw fail("unbalanced parenthesis");
      coef = std::string(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else {
      coef = std::string(read_digits());
      skip_ws();
      if (!coef.empty() && pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        auto den = read_digits();
        if (den.empty()) throw fail("expected denominator");
        coef += "/" + std::string(den);
      }
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') ++pos;

    Exponent e{0, 0};
    bool has_var = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
        char v = text[pos++];
        auto k = read_exponent();
        (v == 'x' ? e.i : e.j) += k;
        has_var = true;
      } else {
        break;
      }
    }
    if (coef.empty() && !has_var) throw fail("expected a term");
    auto c = coef.empty() ? field.one() : field.parse(coef);
    if (negative) c = field.neg(c);
    p.add_term(e, c);
  }
  return p;
}

}  // namespace bmpp

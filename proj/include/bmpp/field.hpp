#pragma once

// Exact coefficient fields: prime fields F_p (p < 2^31) and the rationals.
// Both are stateless-ish policy objects; elements carry no context, so every
// operation goes through the field.

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "bmpp/errors.hpp"

namespace bmpp {

enum class ArithOp { add, sub, mul, div, inv, neg };

template <class F>
concept Field = requires(const F f, const typename F::Element a, std::string_view s) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.div(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
  { f.parse(s) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.repr_less(a, a) } -> std::convertible_to<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.spec() } -> std::same_as<std::string>;
  { f == f } -> std::convertible_to<bool>;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits "a/b" into its parts; b is empty when there is no slash.
inline std::pair<std::string_view, std::string_view> split_fraction(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {trim(s), {}};
  return {trim(s.substr(0, slash)), trim(s.substr(slash + 1))};
}

inline mpz_class parse_bigint(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t start = (s.front() == '-') ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed integer literal '" + std::string(s) + "'");
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw ParseError("malformed integer literal '" + std::string(s) + "'");
  }
  return mpz_class(std::string(s), 10);
}

}  // namespace detail

/// Deterministic trial division; adequate for the supported range p < 2^31.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  struct Element {
    std::uint32_t value = 0;
    friend bool operator==(Element, Element) = default;
  };

  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= kMaxModulus) throw BadSpec("prime modulus must be below 2^31");
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return {0}; }
  Element one() const { return {1 % p_}; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  Element from_bigint(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return {static_cast<std::uint32_t>(r.get_ui())};
  }

  /// Reduces num/den into [0, p); a denominator divisible by p counts as zero.
  Element canonicalize(std::int64_t num, std::int64_t den = 1) const {
    Element d = from_int(den);
    if (d.value == 0) throw ZeroDenominator("zero denominator in F_" + std::to_string(p_));
    return div(from_int(num), d);
  }

  Element add(Element a, Element b) const {
    std::uint32_t s = a.value + b.value;  // both < 2^31, no overflow
    return {s >= p_ ? s - p_ : s};
  }
  Element sub(Element a, Element b) const { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
  Element neg(Element a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  Element mul(Element a, Element b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }

  /// Extended Euclid.
  Element inv(Element a) const {
    if (a.value == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    std::int64_t r0 = p_, r1 = a.value, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    return from_int(s0);
  }
  Element div(Element a, Element b) const {
    if (b.value == 0) throw DivisionByZero("division by zero in F_" + std::to_string(p_));
    return mul(a, inv(b));
  }

  bool is_zero(Element a) const { return a.value == 0; }
  bool equal(Element a, Element b) const { return a.value == b.value; }
  bool repr_less(Element a, Element b) const { return a.value < b.value; }

  std::string to_string(Element a) const { return std::to_string(a.value); }

  /// Decimal integer, or a fraction "a/b" that is reduced mod p.
  Element parse(std::string_view s) const {
    auto [num, den] = detail::split_fraction(s);
    Element n = from_bigint(detail::parse_bigint(num));
    if (den.empty()) return n;
    mpz_class d = detail::parse_bigint(den);
    Element dp = from_bigint(d);
    if (dp.value == 0) throw ZeroDenominator("zero denominator in '" + std::string(s) + "' over F_" + std::to_string(p_));
    return div(n, dp);
  }

  std::string spec() const { return "q:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(mpz_class(static_cast<long>(v))); }

  Element canonicalize(const mpz_class& num, const mpz_class& den = 1) const {
    if (den == 0) throw ZeroDenominator("zero denominator");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  Element add(const Element& a, const Element& b) const { return Element(a + b); }
  Element sub(const Element& a, const Element& b) const { return Element(a - b); }
  Element mul(const Element& a, const Element& b) const { return Element(a * b); }
  Element neg(const Element& a) const { return Element(-a); }
  Element inv(const Element& a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in Q");
    return Element(1 / a);
  }
  Element div(const Element& a, const Element& b) const {
    if (b == 0) throw DivisionByZero("division by zero in Q");
    return Element(a / b);
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool repr_less(const Element& a, const Element& b) const { return a < b; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  Element parse(std::string_view s) const {
    auto [num, den] = detail::split_fraction(s);
    mpz_class n = detail::parse_bigint(num);
    if (den.empty()) return Element(n);
    mpz_class d = detail::parse_bigint(den);
    if (d == 0) throw ZeroDenominator("zero denominator in '" + std::string(s) + "'");
    return canonicalize(n, d);
  }

  std::string spec() const { return "rational"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

/// Single entry point for the six field operations; `b` is ignored for inv/neg.
template <Field F>
typename F::Element arith(const F& field, ArithOp op, const typename F::Element& a,
                          const std::optional<typename F::Element>& b = std::nullopt) {
  auto rhs = [&]() -> const typename F::Element& {
    if (!b) throw BadSpec("binary field operation needs two operands");
    return *b;
  };
  switch (op) {
    case ArithOp::add: return field.add(a, rhs());
    case ArithOp::sub: return field.sub(a, rhs());
    case ArithOp::mul: return field.mul(a, rhs());
    case ArithOp::div: return field.div(a, rhs());
    case ArithOp::inv: return field.inv(a);
    case ArithOp::neg: return field.neg(a);
  }
  throw BadSpec("unknown field operation");
}

using AnyField = std::variant<PrimeField, RationalField>;

/// Parses "q:<p>" or "rational".
inline AnyField make_field(std::string_view spec) {
  spec = detail::trim(spec);
  if (spec == "rational") return RationalField{};
  if (spec.size() > 2 && spec.substr(0, 2) == "q:") {
    auto digits = spec.substr(2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc::result_out_of_range) throw BadSpec("modulus out of range in '" + std::string(spec) + "'");
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw BadSpec("malformed field spec '" + std::string(spec) + "'");
    }
    if (p < 2) throw NotPrime(std::to_string(p) + " is not prime");
    if (p >= PrimeField::kMaxModulus) throw BadSpec("prime modulus must be below 2^31");
    return PrimeField(p);
  }
  throw BadSpec("malformed field spec '" + std::string(spec) + "' (expected q:<p> or rational)");
}

}  // namespace bmpp

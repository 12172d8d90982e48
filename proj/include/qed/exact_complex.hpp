#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cctype>
#include <cstddef>
#include <string>

#include "qed/errors.hpp"

namespace qed {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Element of the degree-4 number field generated over the rationals by I
 * (I^2 = -1) and W (primitive cube root of unity, W^2 = -1 - W), stored on
 * the basis {1, I, W, IW}:
 *
 *     x = a + b*I + c*W + e*IW.
 *
 * This field contains all 12th roots of unity, which is exactly what the
 * affine-group computations need. All arithmetic is exact.
 */
class ExactComplex {
public:
  Rational a, b, c, e;

  ExactComplex() = default;
  ExactComplex(Rational a_, Rational b_, Rational c_, Rational e_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), e(std::move(e_)) {}

  static ExactComplex zero() { return {}; }
  static ExactComplex one() { return {1, 0, 0, 0}; }
  static ExactComplex i() { return {0, 1, 0, 0}; }
  static ExactComplex w() { return {0, 0, 1, 0}; }
  static ExactComplex iw() { return {0, 0, 0, 1}; }
  static ExactComplex from_rational(const Rational& r) { return {r, 0, 0, 0}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && e == 0; }

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;

  ExactComplex operator+(const ExactComplex& o) const {
    return {a + o.a, b + o.b, c + o.c, e + o.e};
  }
  ExactComplex operator-(const ExactComplex& o) const {
    return {a - o.a, b - o.b, c - o.c, e - o.e};
  }
  ExactComplex operator-() const { return {-a, -b, -c, -e}; }

  // Basis products reduce through I^2 = -1 and W^2 = -1 - W.
  ExactComplex operator*(const ExactComplex& o) const {
    const Rational &A = a, &B = b, &C = c, &E = e;
    const Rational &A2 = o.a, &B2 = o.b, &C2 = o.c, &E2 = o.e;
    return {A * A2 - B * B2 - C * C2 + E * E2,
            A * B2 + A2 * B - C * E2 - C2 * E,
            A * C2 + A2 * C - C * C2 - B * E2 - B2 * E + E * E2,
            A * E2 + A2 * E + B * C2 + B2 * C - C * E2 - C2 * E};
  }

  // Complex conjugation: I -> -I, W -> W^2 = -1 - W.
  ExactComplex conj() const { return {a - c, e - b, -c, e}; }

  ExactComplex scaled(const Rational& r) const { return {a * r, b * r, c * r, e * r}; }

  ExactComplex pow(unsigned n) const {
    ExactComplex acc = one(), base = *this;
    for (; n; n >>= 1) {
      if (n & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

  bool is_root_of_unity_order_dividing_12() const { return pow(12) == one(); }

  // Multiplicative order when it divides 12, otherwise 0.
  unsigned order_dividing_12() const {
    for (unsigned n : {1u, 2u, 3u, 4u, 6u, 12u})
      if (pow(n) == one()) return n;
    return 0;
  }

  std::string to_string() const;

  static ExactComplex parse(const std::string& text);
};

inline const std::array<ExactComplex, 12>& twelfth_roots_of_unity() {
  static const std::array<ExactComplex, 12> mu = [] {
    std::array<ExactComplex, 12> r;
    ExactComplex z = ExactComplex::i() * (ExactComplex::one() + ExactComplex::w());
    ExactComplex acc = ExactComplex::one();
    for (std::size_t k = 0; k < 12; ++k) {
      r[k] = acc;
      acc = acc * z;
    }
    return r;
  }();
  return mu;
}

namespace detail {

inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace detail

inline std::string ExactComplex::to_string() const {
  struct Part {
    const Rational* coeff;
    const char* unit;
  };
  const Part parts[4] = {{&a, ""}, {&b, "I"}, {&c, "W"}, {&e, "IW"}};
  std::string out;
  for (const auto& p : parts) {
    if (*p.coeff == 0) continue;
    Rational c = *p.coeff;
    if (out.empty()) {
      if (c < 0) { out += "-"; c = -c; }
    } else {
      out += (c < 0) ? "-" : "+";
      if (c < 0) c = -c;
    }
    if (p.unit[0] == '\0') {
      out += detail::rational_str(c);
    } else {
      if (c != 1) out += detail::rational_str(c) + "*";
      out += p.unit;
    }
  }
  return out.empty() ? "0" : out;
}

inline ExactComplex ExactComplex::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
  auto fail = [&](const std::string& why) -> void {
    throw error(errc::syntax_error, "bad exact-complex literal '" + text + "': " + why);
  };

  ExactComplex result;
  skip_ws();
  if (pos == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    // Optional rational coefficient, then optional unit I / W / IW.
    bool have_digits = pos < text.size() && std::isdigit((unsigned char)text[pos]);
    Rational coeff = 1;
    if (have_digits) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      boost::multiprecision::cpp_int num(text.substr(start, pos - start));
      boost::multiprecision::cpp_int den = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (dstart == pos) fail("missing denominator");
        den = boost::multiprecision::cpp_int(text.substr(dstart, pos - dstart));
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      } else {
        result.a += sign * coeff;
        continue;
      }
    }

    std::size_t ustart = pos;
    while (pos < text.size() && (text[pos] == 'I' || text[pos] == 'W' ||
                                 text[pos] == 'i' || text[pos] == 'w'))
      ++pos;
    std::string unit = text.substr(ustart, pos - ustart);
    for (auto& ch : unit) ch = (char)std::toupper((unsigned char)ch);
    Rational signed_coeff = sign * coeff;
    if (unit == "I") result.b += signed_coeff;
    else if (unit == "W") result.c += signed_coeff;
    else if (unit == "IW" || unit == "WI") result.e += signed_coeff;
    else fail(have_digits ? "expected unit I, W or IW after '*'" : "expected term");
  }
  return result;
}

}  // namespace qed

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include "ufsg/common.hpp"

namespace ufsg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size()) throw parse_error("bad integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw parse_error("bad integer: '" + std::string(text) + "'");
  return BigInt(std::string(text));
}

}  // namespace detail

// Accepts "p" or "p/q"; the sign may sit on either part.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_bigint(text));
  BigInt num = detail::parse_bigint(text.substr(0, slash));
  BigInt den = detail::parse_bigint(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator: '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Canonical text: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Exact complex-rational scalar of the convolution algebra.
struct Coefficient {
  Rational re;
  Rational im;

  Coefficient() = default;
  Coefficient(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  Coefficient(long real, long imag = 0) : re(real), im(imag) {}

  bool is_zero() const { return re == 0 && im == 0; }

  Coefficient& operator+=(const Coefficient& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(const Coefficient& a) { return {-a.re, -a.im}; }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  std::complex<double> to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
};

inline Coefficient coefficient_pow(const Coefficient& base, unsigned long n) {
  Coefficient result(1);
  for (unsigned long i = 0; i < n; ++i) result = result * base;
  return result;
}

}  // namespace ufsg

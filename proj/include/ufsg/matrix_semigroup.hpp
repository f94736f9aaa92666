#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ufsg/common.hpp"
#include "ufsg/rational.hpp"

namespace ufsg {

// Normal form A^a B^b C^c of the semigroup generated by
//   A = [1 0; 0 2],  B = [2 0; 0 1],  C = [0 2; 3 0]
// under AB = BA, AC = CB, BC = CA.
struct TElement {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  static TElement gen_a() { return {1, 0, 0}; }
  static TElement gen_b() { return {0, 1, 0}; }
  static TElement gen_c() { return {0, 0, 1}; }

  bool is_identity() const { return a == 0 && b == 0 && c == 0; }

  friend bool operator==(const TElement&, const TElement&) = default;
  friend std::strong_ordering operator<=>(const TElement&, const TElement&) = default;
};

// Every C in x swaps the A/B exponents of whatever passes it from the right.
inline TElement t_multiply(const TElement& x, const TElement& y) {
  if (x.c % 2 == 0) return {x.a + y.a, x.b + y.b, x.c + y.c};
  return {x.a + y.b, x.b + y.a, x.c + y.c};
}

inline TElement operator*(const TElement& x, const TElement& y) { return t_multiply(x, y); }

inline TElement unit_of(const TElement&) { return {}; }

struct IntMatrix2 {
  std::int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  static IntMatrix2 identity() { return {}; }

  std::int64_t det() const { return m00 * m11 - m01 * m10; }

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

inline IntMatrix2 matrix_a() { return {1, 0, 0, 2}; }
inline IntMatrix2 matrix_b() { return {2, 0, 0, 1}; }
inline IntMatrix2 matrix_c() { return {0, 2, 3, 0}; }

// Exact product A^a B^b C^c; the independent shadow of t_multiply.
inline IntMatrix2 to_matrix(const TElement& x) {
  IntMatrix2 out;
  for (std::uint64_t i = 0; i < x.a; ++i) out = out * matrix_a();
  for (std::uint64_t i = 0; i < x.b; ++i) out = out * matrix_b();
  for (std::uint64_t i = 0; i < x.c; ++i) out = out * matrix_c();
  return out;
}

// det(A^a B^b C^c) = 2^(a+b) (-6)^c.
inline bool det_identity_check(const TElement& x) {
  std::int64_t expected = 1;
  for (std::uint64_t i = 0; i < x.a + x.b; ++i) expected *= 2;
  for (std::uint64_t i = 0; i < x.c; ++i) expected *= -6;
  return to_matrix(x).det() == expected;
}

struct FolnerCount {
  std::uint64_t count = 0;   // |gF_N n F_N| resp. |F_N g n F_N|
  Rational ratio;            // count / N^3
  Rational symdiff_ratio;    // |gF_N delta F_N| / N^3
};

// F_N is the exponent box {A^a B^b C^c : 0 <= a,b,c <= N-1}, enumerated
// explicitly; translation is injective, so the symmetric difference has
// exactly 2 (N^3 - count) elements.
inline FolnerCount folner_ratios(const TElement& g, std::uint64_t n, Side side) {
  if (n == 0) throw std::invalid_argument("box parameter must be >= 1");
  std::uint64_t count = 0;
  const auto in_box = [n](const TElement& t) { return t.a < n && t.b < n && t.c < n; };
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      for (std::uint64_t c = 0; c < n; ++c) {
        const TElement x{a, b, c};
        const TElement t = (side == Side::left) ? g * x : x * g;
        if (in_box(t)) ++count;
      }
  const std::uint64_t volume = n * n * n;
  FolnerCount out;
  out.count = count;
  out.ratio = Rational(count, volume);
  out.symdiff_ratio = Rational(2 * (volume - count), volume);
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar: factors A, B, C with optional ^<k>, any order, normalized on
// parse; canonical output lists A, B, C once each with exponents, or "e".

inline std::string to_string(const TElement& x) {
  if (x.is_identity()) return "e";
  std::string out;
  const auto append = [&out](char letter, std::uint64_t exp) {
    if (exp == 0) return;
    if (!out.empty()) out += ' ';
    out += letter;
    if (exp > 1) {
      out += '^';
      out += std::to_string(exp);
    }
  };
  append('A', x.a);
  append('B', x.b);
  append('C', x.c);
  return out;
}

inline TElement parse_t_element(std::string_view text) {
  TElement result;
  bool saw_token = false;
  std::string buffer(text);
  for (char& ch : buffer)
    if (ch == '*' || ch == '\t') ch = ' ';
  std::string_view rest(buffer);
  while (!rest.empty()) {
    const auto start = rest.find_first_not_of(' ');
    if (start == std::string_view::npos) break;
    rest.remove_prefix(start);
    const auto end = rest.find(' ');
    const std::string_view token = rest.substr(0, end);
    rest = (end == std::string_view::npos) ? std::string_view{} : rest.substr(end);
    saw_token = true;
    if (token == "e") continue;
    std::uint64_t exp = 1;
    if (token.size() > 1) {
      if (token[1] != '^') throw parse_error("bad factor '" + std::string(token) + "'");
      exp = 0;
      for (const char d : token.substr(2)) {
        if (d < '0' || d > '9') throw parse_error("bad factor '" + std::string(token) + "'");
        exp = exp * 10 + static_cast<std::uint64_t>(d - '0');
      }
      if (token.size() == 2 || exp == 0)
        throw parse_error("exponent must be >= 1 in '" + std::string(token) + "'");
    }
    // Generators commute with themselves, so a power is a single factor.
    TElement factor;
    switch (token[0]) {
      case 'A': factor = {exp, 0, 0}; break;
      case 'B': factor = {0, exp, 0}; break;
      case 'C': factor = {0, 0, exp}; break;
      default: throw parse_error("bad factor '" + std::string(token) + "'");
    }
    result = result * factor;
  }
  if (!saw_token) throw parse_error("empty element text");
  return result;
}

}  // namespace ufsg

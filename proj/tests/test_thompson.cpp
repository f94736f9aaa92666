#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "support/generators.hpp"
#include "ufsg/thompson.hpp"

using namespace ufsg;

namespace {

ThompsonElement elem(const char* text) { return parse_element(text); }

ThompsonElement fold_multiply(const GeneratorWord& word) {
  ThompsonElement u;
  for (const std::uint64_t letter : word) u = u * ThompsonElement::generator(letter);
  return u;
}

}  // namespace

TEST_CASE("generators and indices", "[thompson]") {
  REQUIRE(to_string(ThompsonElement::generator(0)) == "x0");
  REQUIRE(to_string(ThompsonElement::generator(7)) == "x7");
  for (std::uint64_t i = 0; i <= 100; ++i)
    REQUIRE(ThompsonElement::generator(i).ind() == 1);

  REQUIRE(ThompsonElement().ind() == 0);
  REQUIRE(elem("x0^2 x3").ind() == 3);
  REQUIRE(normalize_naive({0, 2, 1}).ind_at(2) == 0);
  REQUIRE(elem("x0^2 x3").ind_at(0) == 2);
  REQUIRE(elem("x0^2 x3").ind_at(1) == 0);
  REQUIRE(elem("x0^2 x3").ind_at(3) == 1);
}

TEST_CASE("multiplication folds into canonical form", "[thompson]") {
  const auto x0 = ThompsonElement::generator(0);
  const auto x1 = ThompsonElement::generator(1);

  REQUIRE(x1 * x0 == elem("x0 x2"));
  REQUIRE(elem("x0 x2") * x1 == elem("x0 x1 x3"));
  for (const auto& u : enumerate_elements(2, 2)) {
    REQUIRE(ThompsonElement() * u == u);
    REQUIRE(u * ThompsonElement() == u);
  }
}

TEST_CASE("naive rewriting normalizer", "[thompson]") {
  REQUIRE(normalize_naive({1, 0}) == elem("x0 x2"));
  REQUIRE(normalize_naive({}) == ThompsonElement());
  REQUIRE(normalize_naive({0, 2, 1}) == elem("x0 x1 x3"));
}

TEST_CASE("block algorithm agrees with the rewriting oracle", "[thompson]") {
  std::mt19937_64 rng(0x7e0b5u);
  for (int i = 0; i < 10000; ++i) {
    const GeneratorWord word = test::random_word(rng, 8, 6);
    REQUIRE(fold_multiply(word) == normalize_naive(word));
  }
}

TEST_CASE("associativity and cancellativity", "[thompson]") {
  const auto ball3 = enumerate_elements(3, 3);
  for (const auto& u : ball3)
    for (const auto& v : ball3)
      for (const auto& w : ball3)
        REQUIRE((u * v) * w == u * (v * w));

  const auto ball2 = enumerate_elements(2, 2);
  for (const auto& u : ball2)
    for (const auto& v : ball2)
      for (const auto& w : ball2) {
        if (u * v == u * w) REQUIRE(v == w);
        if (v * u == w * u) REQUIRE(v == w);
      }
}

TEST_CASE("index is additive", "[thompson]") {
  const auto ball = enumerate_elements(3, 3);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      const auto p = u * v;
      REQUIRE(p.ind() == u.ind() + v.ind());
      REQUIRE(p.ind_at(0) == u.ind_at(0) + v.ind_at(0));
    }
}

TEST_CASE("total order examples and laws", "[thompson]") {
  REQUIRE(compare_total(elem("x0"), elem("x1")) == std::strong_ordering::less);
  REQUIRE(compare_total(elem("x0 x1"), elem("x0 x2")) == std::strong_ordering::less);
  REQUIRE(compare_total(elem("x0 x2"), elem("x0 x2")) == std::strong_ordering::equal);

  // x0 < x1 < x0 x1 < x0 x2 < x1 x2, consecutively.
  const std::vector<ThompsonElement> chain{elem("x0"), elem("x1"), elem("x0 x1"),
                                           elem("x0 x2"), elem("x1 x2")};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    REQUIRE(chain[i] < chain[i + 1]);

  const auto ball = enumerate_elements(3, 3);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      const int lt = u < v;
      const int gt = v < u;
      const int eq = u == v;
      REQUIRE(lt + gt + eq == 1);
    }
  for (const auto& u : ball)
    for (const auto& v : ball)
      for (const auto& w : ball)
        if (u < v && v < w) REQUIRE(u < w);
}

TEST_CASE("multiplication is strictly lower stable", "[thompson]") {
  const auto ball = enumerate_elements(3, 3);
  std::vector<std::pair<ThompsonElement, ThompsonElement>> ordered;
  for (const auto& u : ball)
    for (const auto& v : ball)
      if (u <= v) ordered.emplace_back(u, v);
  for (const auto& [u1, v1] : ordered)
    for (const auto& [u2, v2] : ordered) {
      const auto left = u1 * u2;
      const auto right = v1 * v2;
      REQUIRE(left <= right);
      REQUIRE((left == right) == (u1 == v1 && u2 == v2));
    }
}

TEST_CASE("division examples", "[thompson]") {
  REQUIRE(left_divide(elem("x1"), elem("x0 x2")) == elem("x0"));
  REQUIRE_FALSE(left_divide(elem("x2"), elem("x0 x2")).has_value());
  REQUIRE(right_divide(elem("x0 x2"), elem("x0")) == elem("x1"));
  REQUIRE(right_divide(elem("x0 x2"), elem("x2")) == elem("x0"));
  for (const auto& u : enumerate_elements(2, 2)) {
    REQUIRE(left_divide(u, u) == ThompsonElement());
    REQUIRE(right_divide(u, u) == ThompsonElement());
    REQUIRE(left_divide(ThompsonElement(), u) == u);
    REQUIRE(right_divide(u, ThompsonElement()) == u);
  }
}

TEST_CASE("division round trips and matches brute force", "[thompson]") {
  const auto ball = enumerate_elements(3, 3);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      const auto lw = left_divide(u, v);
      const auto lo = test::brute_left_quotient(u, v);
      REQUIRE(lw.has_value() == lo.has_value());
      if (lw) {
        REQUIRE(u * *lw == v);
        REQUIRE(*lw == *lo);
        REQUIRE(u.ind() <= v.ind());
      }
      const auto rw = right_divide(v, u);
      const auto ro = test::brute_right_quotient(v, u);
      REQUIRE(rw.has_value() == ro.has_value());
      if (rw) {
        REQUIRE(*rw * u == v);
        REQUIRE(*rw == *ro);
      }
    }
}

TEST_CASE("divisibility is a partial order", "[thompson]") {
  const auto ball = enumerate_elements(3, 3);
  const auto divides = [](const ThompsonElement& u, const ThompsonElement& v) {
    return left_divide(u, v).has_value();
  };
  for (const auto& u : ball) REQUIRE(divides(u, u));
  for (const auto& u : ball)
    for (const auto& v : ball)
      if (divides(u, v) && divides(v, u)) REQUIRE(u == v);
  for (const auto& u : ball)
    for (const auto& v : ball)
      for (const auto& w : ball)
        if (divides(u, v) && divides(v, w)) REQUIRE(divides(u, w));
}

TEST_CASE("x1 conjugation examples", "[thompson]") {
  REQUIRE(conjugate_by_x1_down(elem("x0 x2"), 1) == elem("x0 x1"));
  REQUIRE_FALSE(conjugate_by_x1_down(elem("x0 x1"), 1).has_value());
  REQUIRE(conjugate_by_x1_down(elem("x0 x1"), 0) == elem("x0 x1"));
  REQUIRE(conjugate_by_x1_up(elem("x0 x1"), 0) == elem("x0 x1"));
  REQUIRE_FALSE(conjugate_by_x1_up(elem("x0"), 1).has_value());

  // x1 (x0 x1) x1^-1: the brute-force witness for W x1 = x1 x0 x1.
  const ThompsonElement product = ThompsonElement::generator(1) * elem("x0 x1");
  const auto witness = test::brute_right_quotient(product, ThompsonElement::generator(1));
  REQUIRE(witness.has_value());
  REQUIRE(conjugate_by_x1_up(elem("x0 x1"), 1) == witness);
  REQUIRE(*witness == elem("x0 x2"));
}

TEST_CASE("conjugation matches divisibility when x0 divides", "[thompson]") {
  const auto x1 = ThompsonElement::generator(1);
  for (const auto& x : enumerate_elements(4, 4)) {
    if (!left_divide(ThompsonElement::generator(0), x)) continue;
    for (std::uint64_t n = 1; n <= 3; ++n) {
      const auto shift = thompson_pow(x1, n);
      REQUIRE(conjugate_by_x1_down(x, n).has_value() == left_divide(shift, x).has_value());
      REQUIRE(conjugate_by_x1_up(x, n).has_value() == right_divide(x, shift).has_value());
    }
  }
}

TEST_CASE("enumeration is sorted and complete", "[thompson]") {
  REQUIRE(enumerate_elements(0, 7) == std::vector<ThompsonElement>{ThompsonElement()});

  const std::vector<ThompsonElement> small{ThompsonElement(), elem("x0"), elem("x1"), elem("x2")};
  REQUIRE(enumerate_elements(1, 2) == small);

  const std::vector<ThompsonElement> ball{ThompsonElement(), elem("x0"),   elem("x1"),
                                          elem("x0^2"),      elem("x0 x1"), elem("x1^2")};
  REQUIRE(enumerate_elements(2, 1) == ball);

  const auto big = enumerate_elements(3, 3);
  REQUIRE(std::is_sorted(big.begin(), big.end()));
  REQUIRE(std::adjacent_find(big.begin(), big.end()) == big.end());
  for (const auto& u : big) {
    REQUIRE(u.ind() <= 3);
    REQUIRE(u.max_generator() <= 3);
  }
}

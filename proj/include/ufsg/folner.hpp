#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ufsg/common.hpp"
#include "ufsg/free_semigroup.hpp"
#include "ufsg/matrix_semigroup.hpp"
#include "ufsg/parallel.hpp"
#include "ufsg/rational.hpp"
#include "ufsg/thompson.hpp"

namespace ufsg {

template <typename Element>
using FiniteSubset = std::set<Element>;

template <typename Element>
FiniteSubset<Element> translate(const Element& g, const FiniteSubset<Element>& set, Side side) {
  FiniteSubset<Element> out;
  for (const Element& x : set) out.insert(side == Side::left ? g * x : x * g);
  return out;
}

struct RatioPair {
  Rational intersection;  // |gF n F| / |F|
  Rational symdiff;       // |gF delta F| / |F|
};

template <typename Element>
RatioPair folner_ratio(const Element& g, const FiniteSubset<Element>& set, Side side) {
  if (set.empty()) throw std::invalid_argument("empty set");
  const FiniteSubset<Element> moved = translate(g, set, side);
  std::uint64_t inter = 0;
  for (const Element& x : moved) inter += set.count(x);
  const std::uint64_t size = set.size();
  RatioPair out;
  out.intersection = Rational(inter, size);
  out.symdiff = Rational((moved.size() - inter) + (size - inter), size);
  return out;
}

struct FolnerRow {
  std::string gen;
  std::string params;
  std::uint64_t size = 0;
  std::uint64_t intersect = 0;
  Rational ratio;
  Rational symdiff;
};

struct FolnerReport {
  std::vector<FolnerRow> rows;
};

// One row per (generator, family member), generator-major; rows are computed
// independently and assembled in order.
template <typename Element>
FolnerReport sweep(const std::vector<std::pair<std::string, Element>>& generators,
                   const std::vector<std::pair<std::string, FiniteSubset<Element>>>& family,
                   Side side) {
  if (family.empty()) throw std::invalid_argument("empty set family");
  FolnerReport report;
  report.rows.resize(generators.size() * family.size());
  parallel_for(report.rows.size(), [&](std::size_t i) {
    const auto& [label, g] = generators[i / family.size()];
    const auto& [params, set] = family[i % family.size()];
    FolnerRow& row = report.rows[i];
    row.gen = label;
    row.params = params;
    row.size = set.size();
    const FiniteSubset<Element> moved = translate(g, set, side);
    for (const Element& x : moved) row.intersect += set.count(x);
    row.ratio = Rational(row.intersect, row.size);
    row.symdiff = Rational((moved.size() - row.intersect) + (row.size - row.intersect), row.size);
  });
  return report;
}

// Shipped set families.

inline std::vector<std::pair<std::string, FiniteSubset<ThompsonElement>>> thompson_ball_family(
    std::uint64_t max_ind, std::uint64_t max_gen) {
  std::vector<std::pair<std::string, FiniteSubset<ThompsonElement>>> out;
  for (std::uint64_t i = 1; i <= max_ind; ++i)
    for (std::uint64_t j = 1; j <= max_gen; ++j) {
      const auto ball = enumerate_elements(i, j);
      out.emplace_back("ind=" + std::to_string(i) + ",gen=" + std::to_string(j),
                       FiniteSubset<ThompsonElement>(ball.begin(), ball.end()));
    }
  return out;
}

inline std::vector<std::pair<std::string, FiniteSubset<TElement>>> t_box_family(
    std::uint64_t n_min, std::uint64_t n_max) {
  std::vector<std::pair<std::string, FiniteSubset<TElement>>> out;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    FiniteSubset<TElement> box;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c) box.insert({a, b, c});
    out.emplace_back("N=" + std::to_string(n), std::move(box));
  }
  return out;
}

inline std::vector<std::pair<std::string, FiniteSubset<FreeWord>>> shortlex_ball_family(
    unsigned rank, std::size_t max_len) {
  std::vector<std::pair<std::string, FiniteSubset<FreeWord>>> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto words = enumerate_words(rank, len);
    out.emplace_back("len=" + std::to_string(len),
                     FiniteSubset<FreeWord>(words.begin(), words.end()));
  }
  return out;
}

}  // namespace ufsg

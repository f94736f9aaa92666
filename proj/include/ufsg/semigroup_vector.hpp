#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "ufsg/rational.hpp"
#include "ufsg/thompson.hpp"

namespace ufsg {

// Semigroups whose operator< is a lower-stable total order: products of the
// support minima stay minimal, which is what the witness identity needs.
template <typename Element>
struct is_lower_stable : std::false_type {};
template <>
struct is_lower_stable<ThompsonElement> : std::true_type {};
class FreeWord;
template <>
struct is_lower_stable<FreeWord> : std::true_type {};

inline ThompsonElement unit_of(const ThompsonElement&) { return {}; }

template <typename Element>
Element element_pow(const Element& u, std::uint64_t n) {
  Element acc = unit_of(u);
  for (std::uint64_t i = 0; i < n; ++i) acc = acc * u;
  return acc;
}

// Finitely supported map element -> exact complex rational; zero coefficients
// are never stored, so support size is honest and equality is structural.
template <typename Element>
class SemigroupVector {
 public:
  using map_type = std::map<Element, Coefficient>;

  SemigroupVector() = default;

  static SemigroupVector delta(Element s, Coefficient value = Coefficient(1)) {
    SemigroupVector v;
    v.add(std::move(s), std::move(value));
    return v;
  }

  void add(Element s, Coefficient value) {
    if (value.is_zero()) return;
    auto [it, inserted] = support_.try_emplace(std::move(s), value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) support_.erase(it);
    }
  }

  const map_type& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t support_size() const { return support_.size(); }

  Coefficient at(const Element& s) const {
    const auto it = support_.find(s);
    return it == support_.end() ? Coefficient() : it->second;
  }

  friend SemigroupVector operator+(const SemigroupVector& f, const SemigroupVector& g) {
    SemigroupVector out = f;
    for (const auto& [s, value] : g.support_) out.add(s, value);
    return out;
  }

  friend SemigroupVector operator*(const Coefficient& scale, const SemigroupVector& f) {
    SemigroupVector out;
    for (const auto& [s, value] : f.support_) out.add(s, scale * value);
    return out;
  }

  friend bool operator==(const SemigroupVector&, const SemigroupVector&) = default;

 private:
  map_type support_;
};

// (f * g)(s) = sum over uv = s of f(u) g(v), over all support pairs.
template <typename Element>
SemigroupVector<Element> convolve(const SemigroupVector<Element>& f,
                                  const SemigroupVector<Element>& g) {
  SemigroupVector<Element> out;
  for (const auto& [u, fu] : f.support())
    for (const auto& [v, gv] : g.support()) out.add(u * v, fu * gv);
  return out;
}

template <typename Element>
SemigroupVector<Element> convolve_power(const SemigroupVector<Element>& f, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("convolution power needs n >= 1");
  SemigroupVector<Element> out = f;
  for (std::uint64_t i = 1; i < n; ++i) out = convolve(out, f);
  return out;
}

// Checks f^{*n}(X^n) = f(X)^n for 1 <= n <= n_max, X the support minimum in
// the total order. Exact equality; any failure would break lower stability.
template <typename Element>
bool semisimplicity_witness_check(const SemigroupVector<Element>& f, std::uint64_t n_max) {
  static_assert(is_lower_stable<Element>::value,
                "witness identity needs a lower-stable total order");
  if (f.is_zero()) throw std::invalid_argument("zero vector has no support minimum");
  const Element& x_min = f.support().begin()->first;
  const Coefficient base = f.at(x_min);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto power = convolve_power(f, n);
    if (power.at(element_pow(x_min, n)) != coefficient_pow(base, n)) return false;
  }
  return true;
}

inline bool is_x0_power(const ThompsonElement& u) {
  return u.is_identity() || (u.blocks().size() == 1 && u.blocks().front().gen == 0);
}

// Coefficient restriction onto the x0-cone {x0^n : n >= 0}; a conditional
// expectation onto the subalgebra it spans.
inline SemigroupVector<ThompsonElement> conditional_expectation(
    const SemigroupVector<ThompsonElement>& f) {
  SemigroupVector<ThompsonElement> out;
  for (const auto& [u, value] : f.support())
    if (is_x0_power(u)) out.add(u, value);
  return out;
}

}  // namespace ufsg

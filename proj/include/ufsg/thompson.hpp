#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ufsg/common.hpp"

namespace ufsg {

// One run x_gen^exp of a normal form.
struct GeneratorBlock {
  std::uint64_t gen = 0;
  std::uint64_t exp = 0;

  friend bool operator==(const GeneratorBlock&, const GeneratorBlock&) = default;
};

// Unreduced product of generators, by index; input to the rewriting normalizer.
using GeneratorWord = std::vector<std::uint64_t>;

// Element of the semigroup <x0, x1, ... | x_j x_i = x_i x_{j+1}, j > i> kept in
// canonical form: generator indices strictly increase along the blocks and every
// stored exponent is >= 1. The empty block list is the unit e.
class ThompsonElement {
 public:
  ThompsonElement() = default;

  static ThompsonElement generator(std::uint64_t index) {
    ThompsonElement u;
    u.blocks_.push_back({index, 1});
    return u;
  }

  // Validates canonicity; the only way to build an element from raw blocks.
  static ThompsonElement from_blocks(std::vector<GeneratorBlock> blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].exp == 0) throw std::invalid_argument("zero exponent block");
      if (i > 0 && blocks[i - 1].gen >= blocks[i].gen)
        throw std::invalid_argument("generator indices must strictly increase");
    }
    ThompsonElement u;
    u.blocks_ = std::move(blocks);
    return u;
  }

  const std::vector<GeneratorBlock>& blocks() const { return blocks_; }
  bool is_identity() const { return blocks_.empty(); }

  // Total letter count; additive under multiplication.
  std::uint64_t ind() const {
    std::uint64_t total = 0;
    for (const auto& b : blocks_) total += b.exp;
    return total;
  }

  // Stored exponent at generator i, zero when absent.
  std::uint64_t ind_at(std::uint64_t i) const {
    const auto it = std::lower_bound(
        blocks_.begin(), blocks_.end(), i,
        [](const GeneratorBlock& b, std::uint64_t value) { return b.gen < value; });
    return (it != blocks_.end() && it->gen == i) ? it->exp : 0;
  }

  // Largest generator index used; zero for the unit.
  std::uint64_t max_generator() const { return blocks_.empty() ? 0 : blocks_.back().gen; }

  // Smaller ind first; on ties the exponent vectors are compared position by
  // position with the larger exponent at the first difference ranking smaller.
  std::strong_ordering compare(const ThompsonElement& other) const {
    if (const auto c = ind() <=> other.ind(); c != 0) return c;
    auto a = blocks_.begin();
    auto b = other.blocks_.begin();
    while (a != blocks_.end() && b != other.blocks_.end()) {
      if (a->gen != b->gen)
        return a->gen < b->gen ? std::strong_ordering::less : std::strong_ordering::greater;
      if (a->exp != b->exp)
        return a->exp > b->exp ? std::strong_ordering::less : std::strong_ordering::greater;
      ++a;
      ++b;
    }
    // Equal ind forces simultaneous exhaustion.
    if (a != blocks_.end()) return std::strong_ordering::less;
    if (b != other.blocks_.end()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend bool operator==(const ThompsonElement&, const ThompsonElement&) = default;
  friend std::strong_ordering operator<=>(const ThompsonElement& a, const ThompsonElement& b) {
    return a.compare(b);
  }

  friend ThompsonElement operator*(const ThompsonElement& u, const ThompsonElement& v) {
    ThompsonElement result = u;
    for (const auto& run : v.blocks_) result.right_multiply_run(run.gen, run.exp);
    return result;
  }

 private:
  // *this <- *this . x_l^a. Blocks with index > l jump over the incoming run
  // and gain +1 per letter; the run itself lands at index l.
  void right_multiply_run(std::uint64_t l, std::uint64_t a) {
    auto suffix = std::upper_bound(
        blocks_.begin(), blocks_.end(), l,
        [](std::uint64_t value, const GeneratorBlock& b) { return value < b.gen; });
    for (auto it = suffix; it != blocks_.end(); ++it) it->gen += a;
    if (suffix != blocks_.begin() && std::prev(suffix)->gen == l)
      std::prev(suffix)->exp += a;
    else
      blocks_.insert(suffix, {l, a});
  }

  // Removes a left factor x_l^a, or reports that none exists. A single peel of
  // x_l scans with a running landing value r: blocks with index < r pass and
  // bump r by their exponent, the landing block must sit at index exactly r.
  // Repeated peels of the same generator land on the same block, so the run
  // divides iff that block carries exponent >= a.
  bool peel_left_run(std::uint64_t l, std::uint64_t a) {
    std::uint64_t r = l;
    std::size_t i = 0;
    while (i < blocks_.size() && blocks_[i].gen < r) r += blocks_[i++].exp;
    if (i == blocks_.size() || blocks_[i].gen != r || blocks_[i].exp < a) return false;
    blocks_[i].exp -= a;
    if (blocks_[i].exp == 0) blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }

  // Removes a right factor x_l^a: the inverse of right_multiply_run. The block
  // at index l must carry exponent >= a and everything after it must clear
  // l + a + 1, since each stripped letter pulls the later indices down by one.
  bool strip_right_run(std::uint64_t l, std::uint64_t a) {
    const auto it = std::lower_bound(
        blocks_.begin(), blocks_.end(), l,
        [](const GeneratorBlock& b, std::uint64_t value) { return b.gen < value; });
    if (it == blocks_.end() || it->gen != l || it->exp < a) return false;
    if (std::next(it) != blocks_.end() && std::next(it)->gen < l + a + 1) return false;
    for (auto later = std::next(it); later != blocks_.end(); ++later) later->gen -= a;
    it->exp -= a;
    if (it->exp == 0) blocks_.erase(it);
    return true;
  }

  friend std::optional<ThompsonElement> left_divide(const ThompsonElement&,
                                                    const ThompsonElement&);
  friend std::optional<ThompsonElement> right_divide(const ThompsonElement&,
                                                     const ThompsonElement&);

  std::vector<GeneratorBlock> blocks_;
};

inline std::strong_ordering compare_total(const ThompsonElement& u, const ThompsonElement& v) {
  return u.compare(v);
}

inline ThompsonElement thompson_pow(const ThompsonElement& u, std::uint64_t n) {
  ThompsonElement result;
  for (std::uint64_t i = 0; i < n; ++i) result = result * u;
  return result;
}

// Rewriting oracle: repeatedly replaces the leftmost adjacent inversion
// (j, i) with j > i by (i, j + 1). Each rewrite lowers the letter sequence
// lexicographically at the leftmost changed position while the length stays
// fixed, so the loop terminates; a non-decreasing word is a normal form.
inline ThompsonElement normalize_naive(GeneratorWord word) {
  for (;;) {
    std::size_t k = word.size();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        k = i;
        break;
      }
    }
    if (k == word.size()) break;
    const std::uint64_t j = word[k];
    word[k] = word[k + 1];
    word[k + 1] = j + 1;
  }
  std::vector<GeneratorBlock> blocks;
  for (const std::uint64_t letter : word) {
    if (!blocks.empty() && blocks.back().gen == letter)
      ++blocks.back().exp;
    else
      blocks.push_back({letter, 1});
  }
  return ThompsonElement::from_blocks(std::move(blocks));
}

// Quotient w with v = u.w, or nullopt when u does not left-divide v.
inline std::optional<ThompsonElement> left_divide(const ThompsonElement& u,
                                                  const ThompsonElement& v) {
  ThompsonElement rest = v;
  for (const auto& run : u.blocks())
    if (!rest.peel_left_run(run.gen, run.exp)) return std::nullopt;
  return rest;
}

// Quotient w with v = w.u, or nullopt; strips u from the right end inward.
inline std::optional<ThompsonElement> right_divide(const ThompsonElement& v,
                                                   const ThompsonElement& u) {
  ThompsonElement rest = v;
  const auto& runs = u.blocks();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    if (!rest.strip_right_run(it->gen, it->exp)) return std::nullopt;
  return rest;
}

// x1^-n . X . x1^n when that element stays in the semigroup, computed without
// group inverses as a left division of X . x1^n by x1^n.
inline std::optional<ThompsonElement> conjugate_by_x1_down(const ThompsonElement& x,
                                                           std::uint64_t n) {
  if (n == 0) return x;
  const ThompsonElement shift = thompson_pow(ThompsonElement::generator(1), n);
  return left_divide(shift, x * shift);
}

// x1^n . X . x1^-n when in the semigroup: a right division of x1^n . X by x1^n.
inline std::optional<ThompsonElement> conjugate_by_x1_up(const ThompsonElement& x,
                                                         std::uint64_t n) {
  if (n == 0) return x;
  const ThompsonElement shift = thompson_pow(ThompsonElement::generator(1), n);
  return right_divide(shift * x, shift);
}

// All elements with ind <= max_ind using generators <= max_gen, ascending in
// the total order. Both bounds are needed: every single generator has ind 1.
inline std::vector<ThompsonElement> enumerate_elements(std::uint64_t max_ind,
                                                       std::uint64_t max_gen) {
  std::vector<ThompsonElement> out;
  std::vector<GeneratorBlock> current;
  auto emit = [&] { out.push_back(ThompsonElement::from_blocks(current)); };
  auto rec = [&](auto&& self, std::uint64_t next_gen, std::uint64_t remaining) -> void {
    emit();
    if (remaining == 0) return;
    for (std::uint64_t g = next_gen; g <= max_gen; ++g) {
      for (std::uint64_t e = 1; e <= remaining; ++e) {
        current.push_back({g, e});
        self(self, g + 1, remaining - e);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, max_ind);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar. Canonical form: "e", or factors "x<i>" / "x<i>^<k>" (k >= 2)
// joined by single spaces with strictly increasing indices. The permissive
// parser also takes factors in any order, '*' separators and explicit ^1,
// and normalizes; strict mode insists on the canonical spelling.

inline std::string to_string(const ThompsonElement& u) {
  if (u.is_identity()) return "e";
  std::string out;
  for (const auto& b : u.blocks()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(b.gen);
    if (b.exp > 1) {
      out += '^';
      out += std::to_string(b.exp);
    }
  }
  return out;
}

namespace detail {

inline std::uint64_t parse_index(std::string_view digits, std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw parse_error("bad factor '" + std::string(token) + "'");
  return value;
}

}  // namespace detail

inline ThompsonElement parse_element(std::string_view text, bool strict = false) {
  ThompsonElement result;
  bool saw_token = false;
  std::string buffer(text);
  for (char& c : buffer)
    if (c == '*' || c == '\t') c = ' ';
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
    if (token.size() < 2 || token[0] != 'x')
      throw parse_error("bad factor '" + std::string(token) + "'");
    const auto caret = token.find('^');
    const std::uint64_t index = detail::parse_index(token.substr(1, caret - 1), token);
    std::uint64_t exp = 1;
    if (caret != std::string_view::npos) {
      exp = detail::parse_index(token.substr(caret + 1), token);
      if (exp == 0) throw parse_error("exponent must be >= 1 in '" + std::string(token) + "'");
    }
    result = result * ThompsonElement::from_blocks({{index, exp}});
  }
  if (!saw_token) throw parse_error("empty element text");
  if (strict && to_string(result) != text)
    throw parse_error("not in canonical form: '" + std::string(text) + "'");
  return result;
}

}  // namespace ufsg

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ufsg/common.hpp"

namespace ufsg {

// Word of the free semigroup on `rank` generators; letters are 1-based.
class FreeWord {
 public:
  explicit FreeWord(unsigned rank) : rank_(rank) { check_rank(rank); }

  FreeWord(unsigned rank, std::vector<unsigned> letters)
      : rank_(rank), letters_(std::move(letters)) {
    check_rank(rank);
    for (const unsigned letter : letters_)
      if (letter < 1 || letter > rank_)
        throw std::invalid_argument("letter out of range for rank " + std::to_string(rank_));
  }

  unsigned rank() const { return rank_; }
  const std::vector<unsigned>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend FreeWord operator*(const FreeWord& g, const FreeWord& h) {
    if (g.rank_ != h.rank_) throw std::invalid_argument("rank mismatch");
    FreeWord out(g.rank_);
    out.letters_ = g.letters_;
    out.letters_.insert(out.letters_.end(), h.letters_.begin(), h.letters_.end());
    return out;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  static void check_rank(unsigned rank) {
    if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  }

  unsigned rank_;
  std::vector<unsigned> letters_;
};

// Shorter word first; equal lengths fall back to letter-by-letter comparison.
inline std::strong_ordering shortlex_compare(const FreeWord& g, const FreeWord& h) {
  if (g.rank() != h.rank()) throw std::invalid_argument("rank mismatch");
  if (const auto c = g.length() <=> h.length(); c != 0) return c;
  return g.letters() <=> h.letters();
}

inline std::strong_ordering operator<=>(const FreeWord& g, const FreeWord& h) {
  return shortlex_compare(g, h);
}

inline FreeWord unit_of(const FreeWord& g) { return FreeWord(g.rank()); }

inline FreeWord word_pow(const FreeWord& g, std::uint64_t n) {
  FreeWord out(g.rank());
  for (std::uint64_t i = 0; i < n; ++i) out = out * g;
  return out;
}

// All words of length <= max_len in shortlex order, including the unit.
inline std::vector<FreeWord> enumerate_words(unsigned rank, std::size_t max_len) {
  std::vector<FreeWord> out;
  out.emplace_back(rank);
  std::vector<unsigned> letters;
  for (std::size_t len = 1; len <= max_len; ++len) {
    letters.assign(len, 1);
    for (;;) {
      out.emplace_back(rank, letters);
      std::size_t i = len;
      while (i > 0 && letters[i - 1] == rank) letters[--i] = 1;
      if (i == 0) break;
      ++letters[i - 1];
    }
  }
  return out;
}

namespace detail {

inline bool matches_at(const FreeWord& w, std::size_t pos, const FreeWord& factor) {
  if (pos + factor.length() > w.length()) return false;
  for (std::size_t i = 0; i < factor.length(); ++i)
    if (w.letters()[pos + i] != factor.letters()[i]) return false;
  return true;
}

// Counts factorizations of the suffix w[pos..] as products m_{i1}^{a1}...m_{it}^{at}
// with strictly increasing member positions i1 < ... < it >= min_member and a_j >= 1.
// Memoized on (pos, min_member); pass count_all = false to stop at the first hit.
inline std::uint64_t factorizations_from(const FreeWord& w, std::span<const FreeWord> members,
                                         std::size_t pos, std::size_t min_member,
                                         std::vector<std::int64_t>& memo, bool count_all) {
  const std::size_t cols = members.size() + 1;
  std::int64_t& slot = memo[pos * cols + min_member];
  if (slot >= 0) return static_cast<std::uint64_t>(slot);
  std::uint64_t total = (pos == w.length()) ? 1 : 0;
  for (std::size_t i = min_member; i < members.size() && (count_all || total == 0); ++i) {
    const FreeWord& m = members[i];
    if (m.is_identity()) continue;
    std::size_t next = pos;
    while (matches_at(w, next, m)) {
      next += m.length();
      total += factorizations_from(w, members, next, i + 1, memo, count_all);
      if (!count_all && total > 0) break;
    }
  }
  slot = static_cast<std::int64_t>(total);
  return total;
}

inline std::uint64_t run_factorization_dp(const FreeWord& w, std::span<const FreeWord> members,
                                          bool count_all) {
  for (const FreeWord& m : members)
    if (m.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<std::int64_t> memo((w.length() + 1) * (members.size() + 1), -1);
  return factorizations_from(w, members, 0, 0, memo, count_all);
}

}  // namespace detail

// Exact number of ways to write w over `members` in strictly increasing member
// order with positive exponents; the empty word counts once (empty product).
inline std::uint64_t count_increasing_factorizations(const FreeWord& w,
                                                     std::span<const FreeWord> members) {
  return detail::run_factorization_dp(w, members, true);
}

inline bool representable_over(const FreeWord& w, std::span<const FreeWord> members) {
  return detail::run_factorization_dp(w, members, false) > 0;
}

// Greedily grown factorization basis: the generators, then repeatedly the
// shortlex-minimal word of length <= max_len that no increasing-order product
// of earlier members reaches.
struct UFBasis {
  unsigned rank = 2;
  std::size_t max_len = 1;
  std::vector<FreeWord> members;
};

inline UFBasis construct_uf_basis(unsigned rank, std::size_t max_len) {
  UFBasis basis;
  basis.rank = rank;
  basis.max_len = max_len;
  for (unsigned letter = 1; letter <= rank && max_len >= 1; ++letter)
    basis.members.emplace_back(rank, std::vector<unsigned>{letter});
  // One ascending pass suffices: every word below the scan point is already
  // representable, so the next irredundant word is the minimal one.
  for (const FreeWord& w : enumerate_words(rank, max_len)) {
    if (w.length() <= 1) continue;
    if (!representable_over(w, basis.members)) basis.members.push_back(w);
  }
  return basis;
}

inline std::uint64_t count_increasing_factorizations(const FreeWord& w, const UFBasis& basis) {
  return count_increasing_factorizations(w, basis.members);
}

// ---------------------------------------------------------------------------
// Text grammar: generators 1..26 print as 'a'..'z'; '_' is the empty word.

inline std::string to_string(const FreeWord& w) {
  if (w.is_identity()) return "_";
  std::string out;
  for (const unsigned letter : w.letters()) {
    if (letter > 26) throw std::invalid_argument("letter index beyond 'z'");
    out += static_cast<char>('a' + letter - 1);
  }
  return out;
}

inline FreeWord parse_word(std::string_view text, unsigned rank) {
  if (text.empty()) throw parse_error("empty word text");
  if (text == "_") return FreeWord(rank);
  std::vector<unsigned> letters;
  letters.reserve(text.size());
  for (const char c : text) {
    if (c < 'a' || c > 'z') throw parse_error("bad letter '" + std::string(1, c) + "'");
    const unsigned letter = static_cast<unsigned>(c - 'a') + 1;
    if (letter > rank)
      throw parse_error("letter '" + std::string(1, c) + "' exceeds rank " + std::to_string(rank));
    letters.push_back(letter);
  }
  return FreeWord(rank, std::move(letters));
}

}  // namespace ufsg

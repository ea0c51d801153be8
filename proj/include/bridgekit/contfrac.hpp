#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bridgekit/rational.hpp"

namespace bridgekit {

using Entry = std::int64_t;

/// General continued fraction [a_1, ..., a_m]: nonempty, no zero entries.
class IntWord {
 public:
  /// Throws InvalidWord.
  explicit IntWord(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& vec() const { return entries_; }

  friend bool operator==(const IntWord&, const IntWord&) = default;
  friend auto operator<=>(const IntWord&, const IntWord&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Reduced even continued fraction (2a_1, ..., 2a_{2m}). Entries are stored
/// as the even values themselves, never halved.
class EvenWord {
 public:
  /// Throws InvalidWord unless every entry is even and nonzero and the length
  /// is even and at least 2.
  explicit EvenWord(std::vector<Entry> entries);
  /// Builds from an IntWord; throws InvalidWord if it is not even.
  explicit EvenWord(const IntWord& w) : EvenWord(w.vec()) {}

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& vec() const { return entries_; }

  IntWord to_int_word() const { return IntWord(entries_); }

  /// Lexicographic by signed entry value.
  friend bool operator==(const EvenWord&, const EvenWord&) = default;
  friend auto operator<=>(const EvenWord&, const EvenWord&) = default;

  static bool is_valid(std::span<const Entry> entries);

 private:
  struct Unchecked {};
  EvenWord(Unchecked, std::vector<Entry> entries) : entries_(std::move(entries)) {}
  friend EvenWord make_even_word_unchecked(std::vector<Entry> entries);

  std::vector<Entry> entries_;
};

/// Skips validation; for callers that construct words from validated parts.
EvenWord make_even_word_unchecked(std::vector<Entry> entries);

template <class W>
concept WordLike = requires(const W& w) {
  { w.vec() } -> std::convertible_to<const std::vector<Entry>&>;
} && std::constructible_from<W, std::vector<Entry>>;

/// Value of the tower 1/(a_1 + 1/(a_2 + ... + 1/a_m)). Throws ZeroDivision
/// when some tail evaluates to zero.
Rational eval(const IntWord& word);
inline Rational eval(const EvenWord& word) { return eval(word.to_int_word()); }

/// Number of adjacent pairs with opposite signs.
int sign_changes(std::span<const Entry> entries);
inline int sign_changes(const IntWord& w) { return sign_changes(w.entries()); }
inline int sign_changes(const EvenWord& w) { return sign_changes(w.entries()); }

/// Sum of |entries|.
Entry abs_sum(std::span<const Entry> entries);

template <WordLike W>
W reverse(const W& w) {
  return W(std::vector<Entry>(w.vec().rbegin(), w.vec().rend()));
}

template <WordLike W>
W negate(const W& w) {
  std::vector<Entry> out(w.vec());
  for (auto& e : out) e = -e;
  return W(std::move(out));
}

template <WordLike W>
W rev_neg(const W& w) {
  std::vector<Entry> out(w.vec().rbegin(), w.vec().rend());
  for (auto& e : out) e = -e;
  return W(std::move(out));
}

/// Reduced even expansion of r. Requires 0 < |r| < 1 and an odd denominator;
/// throws NotAKnotFraction otherwise. The result satisfies eval(w) == r.
EvenWord to_reduced_even(const Rational& r);

/// Parses "n1,n2,...": whitespace around commas ignored, optional signs.
/// Throws ParseError naming the offending token and its offset.
IntWord parse_int_word(std::string_view text);
/// As parse_int_word, additionally rejecting odd entries and odd lengths.
EvenWord parse_even_word(std::string_view text);

/// "2,-4,4,-2"
std::string format_word(std::span<const Entry> entries);
inline std::string format_word(const EvenWord& w) { return format_word(w.entries()); }
inline std::string format_word(const IntWord& w) { return format_word(w.entries()); }

}  // namespace bridgekit

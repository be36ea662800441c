#pragma once

#include "vecfield/exact.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vfc {

/// The five bracketing symbols. Enumerator order is the lexicographic order
/// used everywhere (enumeration, canonical forms).
enum class Symbol : std::uint8_t { RoundOpen, RoundClose, SquareOpen, SquareClose, Dot };

enum class BracketKind : std::uint8_t { Round, Square };

constexpr bool is_open(Symbol s) noexcept {
  return s == Symbol::RoundOpen || s == Symbol::SquareOpen;
}
constexpr bool is_close(Symbol s) noexcept {
  return s == Symbol::RoundClose || s == Symbol::SquareClose;
}
constexpr BracketKind kind_of(Symbol s) noexcept {
  return (s == Symbol::RoundOpen || s == Symbol::RoundClose) ? BracketKind::Round
                                                             : BracketKind::Square;
}
constexpr Symbol open_symbol(BracketKind k) noexcept {
  return k == BracketKind::Round ? Symbol::RoundOpen : Symbol::SquareOpen;
}
constexpr Symbol close_symbol(BracketKind k) noexcept {
  return k == BracketKind::Round ? Symbol::RoundClose : Symbol::SquareClose;
}
char to_char(Symbol s) noexcept;

/// A finite word over the bracketing alphabet. Validity is a predicate on the
/// word, not a construction invariant.
class BracketingString {
 public:
  BracketingString() = default;
  explicit BracketingString(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  BracketingString without(std::size_t position) const;

  /// ASCII rendering; dots are written as '.'.
  std::string str() const;

  friend bool operator==(const BracketingString&, const BracketingString&) = default;
  friend std::strong_ordering operator<=>(const BracketingString& a,
                                          const BracketingString& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
};

struct MatchedPair {
  std::size_t open;
  std::size_t close;
  BracketKind kind;
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// Associated bracket pairs of a valid string, sorted by opening position, and
/// the positions of its dots in increasing order.
struct PairingTable {
  std::size_t length = 0;
  std::vector<MatchedPair> pairs;
  std::vector<std::size_t> dots;

  /// Rebuilds the string the table was extracted from.
  BracketingString to_string() const;
};

/// Accepts ( ) [ ] . and the UTF-8 bullet U+2022; skips ASCII whitespace.
/// Throws UnknownCharacter with the byte offset of the offending character.
BracketingString parse_string(std::string_view text);

bool is_valid(const BracketingString& s);

/// Valid, or valid after deleting a single dot.
bool is_quasi_valid(const BracketingString& s);

/// Throws NotValid naming the first violation found in a left-to-right scan.
PairingTable match_pairs(const BracketingString& s);

/// Lexicographic stream of the valid strings of one length. Holds O(n) state;
/// nothing is materialized. Single consumer.
class ValidStrings {
 public:
  explicit ValidStrings(std::size_t length);

  /// Next string in lexicographic order, or nullopt when exhausted.
  std::optional<BracketingString> next();

  /// Same as next() but reuses the caller's buffer. Returns false when done.
  bool next(BracketingString& out);

 private:
  struct Open {
    std::size_t position;
    BracketKind kind;
  };

  bool feasible() const;
  bool try_place(std::size_t pos, Symbol s);
  void undo(std::size_t pos);
  bool fill_from(std::size_t pos);
  bool advance();

  std::size_t length_;
  std::vector<Symbol> current_;
  std::vector<Open> stack_;
  std::vector<Open> popped_;  // opener consumed by the close at each position
  std::size_t filled_ = 0;
  bool started_ = false;
  bool done_ = false;
};

inline ValidStrings enumerate_valid(std::size_t length) { return ValidStrings(length); }

/// b_n, number of valid strings of length n, by the first-symbol recursion.
ExactCount count_valid(std::size_t n);

/// c_m, number of quasi-valid strings of length m, by the three-case recursion.
ExactCount count_quasi(std::size_t m);

}  // namespace vfc

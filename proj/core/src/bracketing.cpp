#include "vecfield/bracketing.hpp"

#include "memo.hpp"
#include "vecfield/errors.hpp"

#include <algorithm>

namespace vfc {

namespace {

constexpr Symbol kAllSymbols[] = {Symbol::RoundOpen, Symbol::RoundClose, Symbol::SquareOpen,
                                  Symbol::SquareClose, Symbol::Dot};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::RoundOpen: return '(';
    case Symbol::RoundClose: return ')';
    case Symbol::SquareOpen: return '[';
    case Symbol::SquareClose: return ']';
    case Symbol::Dot: return '.';
  }
  return '?';
}

std::string BracketingString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(to_char(s));
  return out;
}

BracketingString BracketingString::without(std::size_t position) const {
  std::vector<Symbol> rest;
  rest.reserve(symbols_.size() - 1);
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (i != position) rest.push_back(symbols_[i]);
  return BracketingString(std::move(rest));
}

BracketingString PairingTable::to_string() const {
  std::vector<Symbol> symbols(length, Symbol::Dot);
  for (const auto& p : pairs) {
    symbols[p.open] = open_symbol(p.kind);
    symbols[p.close] = close_symbol(p.kind);
  }
  return BracketingString(std::move(symbols));
}

BracketingString parse_string(std::string_view text) {
  std::vector<Symbol> symbols;
  std::size_t character = 0;  // code-point index reported in errors
  for (std::size_t i = 0; i < text.size(); ++i, ++character) {
    const char c = text[i];
    switch (c) {
      case '(': symbols.push_back(Symbol::RoundOpen); continue;
      case ')': symbols.push_back(Symbol::RoundClose); continue;
      case '[': symbols.push_back(Symbol::SquareOpen); continue;
      case ']': symbols.push_back(Symbol::SquareClose); continue;
      case '.': symbols.push_back(Symbol::Dot); continue;
      default: break;
    }
    if (is_space(c)) continue;
    // U+2022 BULLET is E2 80 A2 in UTF-8.
    if (text.substr(i, 3) == "\xE2\x80\xA2") {
      symbols.push_back(Symbol::Dot);
      i += 2;
      continue;
    }
    throw UnknownCharacter(character);
  }
  return BracketingString(std::move(symbols));
}

PairingTable match_pairs(const BracketingString& s) {
  using Reason = NotValid::Reason;
  PairingTable table;
  table.length = s.size();
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Symbol sym = s[i];
    if (sym == Symbol::Dot) {
      table.dots.push_back(i);
    } else if (is_open(sym)) {
      stack.push_back(i);
    } else {
      if (stack.empty())
        throw NotValid(Reason::Unbalanced, i,
                       "unbalanced: closing bracket at " + std::to_string(i) + " has no opener");
      const std::size_t open = stack.back();
      if (kind_of(s[open]) != kind_of(sym))
        throw NotValid(Reason::Crossing, i,
                       "crossing: bracket at " + std::to_string(i) +
                           " closes a pair of the other kind opened at " + std::to_string(open));
      if ((i - open - 1) % 2 != 0)
        throw NotValid(Reason::OddInterior, i,
                       "odd interior: pair " + std::to_string(open) + ".." + std::to_string(i) +
                           " encloses an odd number of symbols");
      stack.pop_back();
      table.pairs.push_back({open, i, kind_of(sym)});
    }
  }
  if (!stack.empty())
    throw NotValid(Reason::Unbalanced, stack.back(),
                   "unbalanced: bracket at " + std::to_string(stack.back()) + " is never closed");
  std::sort(table.pairs.begin(), table.pairs.end(),
            [](const MatchedPair& a, const MatchedPair& b) { return a.open < b.open; });
  return table;
}

bool is_valid(const BracketingString& s) {
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Symbol sym = s[i];
    if (is_open(sym)) {
      stack.push_back(i);
    } else if (is_close(sym)) {
      if (stack.empty()) return false;
      const std::size_t open = stack.back();
      if (kind_of(s[open]) != kind_of(sym) || (i - open - 1) % 2 != 0) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

bool is_quasi_valid(const BracketingString& s) {
  if (is_valid(s)) return true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == Symbol::Dot && is_valid(s.without(i))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// ValidStrings

ValidStrings::ValidStrings(std::size_t length)
    : length_(length), current_(length, Symbol::Dot), popped_(length) {
  stack_.reserve(length);
}

// A prefix extends to a valid word iff closing the open brackets from the top
// down, padding with one dot whenever parity demands it, fits in the rest.
bool ValidStrings::feasible() const {
  std::size_t pos = filled_;
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
    if ((pos - it->position) % 2 == 0) ++pos;
    ++pos;
  }
  return pos <= length_;
}

bool ValidStrings::try_place(std::size_t pos, Symbol s) {
  if (is_open(s)) {
    stack_.push_back({pos, kind_of(s)});
  } else if (is_close(s)) {
    if (stack_.empty()) return false;
    const Open top = stack_.back();
    if (top.kind != kind_of(s) || (pos - top.position - 1) % 2 != 0) return false;
    popped_[pos] = top;
    stack_.pop_back();
  }
  current_[pos] = s;
  filled_ = pos + 1;
  if (!feasible()) {
    undo(pos);
    return false;
  }
  return true;
}

void ValidStrings::undo(std::size_t pos) {
  const Symbol s = current_[pos];
  if (is_open(s))
    stack_.pop_back();
  else if (is_close(s))
    stack_.push_back(popped_[pos]);
  filled_ = pos;
}

bool ValidStrings::fill_from(std::size_t pos) {
  for (std::size_t p = pos; p < length_; ++p) {
    bool placed = false;
    for (Symbol s : kAllSymbols) {
      if (try_place(p, s)) {
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

bool ValidStrings::advance() {
  for (std::size_t p = length_; p-- > 0;) {
    const Symbol old = current_[p];
    undo(p);
    for (Symbol s : kAllSymbols) {
      if (s <= old) continue;
      if (try_place(p, s)) return fill_from(p + 1);
    }
  }
  return false;
}

bool ValidStrings::next(BracketingString& out) {
  if (done_) return false;
  const bool ok = started_ ? advance() : fill_from(0);
  started_ = true;
  if (!ok) {
    done_ = true;
    return false;
  }
  out = BracketingString(current_);
  return true;
}

std::optional<BracketingString> ValidStrings::next() {
  BracketingString out;
  if (!next(out)) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// Counting recursions

namespace {

detail::MemoSequence& valid_table() {
  static detail::MemoSequence table([](std::size_t n, const std::vector<ExactCount>& b) -> ExactCount {
    if (n == 0) return ExactCount(1);
    ExactCount value = b[n - 1];
    for (std::size_t even = 0; even + 2 <= n; even += 2) value += 2 * b[even] * b[n - 2 - even];
    return value;
  });
  return table;
}

detail::MemoSequence& quasi_table() {
  static detail::MemoSequence table([](std::size_t m, const std::vector<ExactCount>& c) -> ExactCount {
    if (m == 0) return ExactCount(1);
    ExactCount value = c[m - 1];
    // Opener closes at an even 1-based position: even valid interior, quasi tail.
    for (std::size_t even = 0; even + 2 <= m; even += 2)
      value += 2 * count_valid(even) * c[m - 2 - even];
    // Opener closes at an odd position: odd quasi interior, valid tail.
    for (std::size_t odd = 1; odd + 2 <= m; odd += 2)
      value += 2 * c[odd] * count_valid(m - 2 - odd);
    return value;
  });
  return table;
}

}  // namespace

ExactCount count_valid(std::size_t n) { return valid_table().at(n); }

ExactCount count_quasi(std::size_t m) { return quasi_table().at(m); }

}  // namespace vfc

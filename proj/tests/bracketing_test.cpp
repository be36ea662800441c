#include "vecfield/bracketing.hpp"
#include "vecfield/errors.hpp"

#include "test_oracles.hpp"

#include <gtest/gtest.h>

#include <set>

namespace vfc {
namespace {

BracketingString P(const char* text) { return parse_string(text); }

std::vector<std::string> all_valid(std::size_t length) {
  std::vector<std::string> out;
  ValidStrings strings(length);
  BracketingString s;
  while (strings.next(s)) out.push_back(s.str());
  return out;
}

TEST(ParseString, MapsSymbols) {
  EXPECT_EQ(P("[]").symbols(), (std::vector{Symbol::SquareOpen, Symbol::SquareClose}));
  EXPECT_EQ(P("(\xE2\x80\xA2)"), P("(.)"));
  EXPECT_EQ(P("(\xE2\x80\xA2)").size(), 3u);
  EXPECT_EQ(P(" ( )\t.\n"), P("()."));
  EXPECT_TRUE(P("").empty());
}

TEST(ParseString, RejectsUnknownCharacters) {
  try {
    P("ab");
    FAIL() << "expected UnknownCharacter";
  } catch (const UnknownCharacter& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    P("(\xE2\x80\xA2)x");
    FAIL() << "expected UnknownCharacter";
  } catch (const UnknownCharacter& e) {
    EXPECT_EQ(e.position(), 3u);  // counted in characters, the bullet is one
  }
  EXPECT_THROW(P("\xE2\x80"), UnknownCharacter);
}

TEST(IsValid, Examples) {
  EXPECT_TRUE(is_valid(P("[]")));
  EXPECT_TRUE(is_valid(P("")));
  EXPECT_FALSE(is_valid(P("([)]")));
  EXPECT_FALSE(is_valid(P("(.)")));
  EXPECT_TRUE(is_valid(P("(..)")));
  EXPECT_FALSE(is_valid(P(")(")));
}

TEST(IsValid, LengthThreeIsExactlyFiveWords) {
  std::set<std::string> valid;
  testing::for_each_word(3, [&](const std::string& w) {
    if (is_valid(P(w.c_str()))) valid.insert(w);
  });
  EXPECT_EQ(valid, (std::set<std::string>{"...", "().", ".()", "[].", ".[]"}));
}

TEST(IsQuasiValid, Examples) {
  EXPECT_TRUE(is_quasi_valid(P("(.)")));
  EXPECT_TRUE(is_quasi_valid(P("()")));
  EXPECT_FALSE(is_quasi_valid(P("((.)")));
  EXPECT_TRUE(is_quasi_valid(P("[[.]]")));
  EXPECT_TRUE(is_quasi_valid(P("(..)")));
}

TEST(MatchPairs, Examples) {
  const PairingTable t = match_pairs(P("()"));
  ASSERT_EQ(t.pairs.size(), 1u);
  EXPECT_EQ(t.pairs[0], (MatchedPair{0, 1, BracketKind::Round}));
  EXPECT_TRUE(t.dots.empty());

  const PairingTable u = match_pairs(P("[(..)].."));
  EXPECT_EQ(u.pairs, (std::vector<MatchedPair>{{0, 5, BracketKind::Square},
                                               {1, 4, BracketKind::Round}}));
  EXPECT_EQ(u.dots, (std::vector<std::size_t>{2, 3, 6, 7}));
}

TEST(MatchPairs, NamesTheViolation) {
  const auto reason = [](const char* text) {
    try {
      match_pairs(P(text));
    } catch (const NotValid& e) {
      return e.reason();
    }
    ADD_FAILURE() << text << " was accepted";
    return NotValid::Reason::Other;
  };
  EXPECT_EQ(reason("[.]"), NotValid::Reason::OddInterior);
  EXPECT_EQ(reason("([)]"), NotValid::Reason::Crossing);
  EXPECT_EQ(reason("(()"), NotValid::Reason::Unbalanced);
  EXPECT_EQ(reason("())"), NotValid::Reason::Unbalanced);
}

TEST(MatchPairs, SucceedsExactlyOnValidWordsAndRoundTrips) {
  for (std::size_t length = 0; length <= 7; ++length) {
    testing::for_each_word(length, [&](const std::string& w) {
      const BracketingString s = P(w.c_str());
      if (is_valid(s)) {
        EXPECT_EQ(match_pairs(s).to_string(), s) << w;
      } else {
        EXPECT_THROW(match_pairs(s), NotValid) << w;
      }
    });
  }
}

TEST(EnumerateValid, SmallLengths) {
  EXPECT_EQ(all_valid(0), std::vector<std::string>{""});
  EXPECT_EQ(all_valid(1), std::vector<std::string>{"."});
  EXPECT_EQ(all_valid(2), (std::vector<std::string>{"()", "[]", ".."}));
  EXPECT_EQ(all_valid(3), (std::vector<std::string>{"().", "[].", ".()", ".[]", "..."}));
}

TEST(EnumerateValid, StrictlyIncreasingAndCountMatchesRecursion) {
  for (std::size_t length = 0; length <= 12; ++length) {
    ValidStrings strings(length);
    BracketingString previous;
    BracketingString s;
    std::size_t count = 0;
    while (strings.next(s)) {
      if (count > 0) ASSERT_LT(previous, s);
      ASSERT_TRUE(is_valid(s)) << s.str();
      previous = s;
      ++count;
    }
    EXPECT_EQ(ExactCount(count), count_valid(length)) << "length " << length;
    EXPECT_FALSE(strings.next(s));  // stays exhausted
  }
}

// The five-symbol grammar, the four counting rules and the stack recognizer
// must describe the same language.
TEST(EnumerateValid, AgreesWithCountingRulesUpToTwelve) {
  for (std::size_t length = 0; length <= 12; length += 2) {
    const auto by_rules = testing::valid_words_by_rules(length);
    EXPECT_EQ(all_valid(length), by_rules) << "length " << length;
  }
}

TEST(IsValid, AgreesWithGrammarAndRulesOnAllShortWords) {
  for (std::size_t length = 0; length <= 7; ++length) {
    testing::for_each_word(length, [&](const std::string& w) {
      const bool valid = is_valid(P(w.c_str()));
      ASSERT_EQ(valid, testing::GrammarRecognizer(w).valid()) << w;
      if (length % 2 == 0) ASSERT_EQ(valid, testing::satisfies_rules(w)) << w;
    });
  }
}

TEST(IsQuasiValid, AgreesWithGrammarAndDeletionOnAllShortWords) {
  for (std::size_t length = 0; length <= 7; ++length) {
    std::size_t count = 0;
    testing::for_each_word(length, [&](const std::string& w) {
      const bool quasi = is_quasi_valid(P(w.c_str()));
      ASSERT_EQ(quasi, testing::GrammarRecognizer(w).quasi()) << w;
      ASSERT_EQ(quasi, testing::quasi_by_deletion(w)) << w;
      if (quasi) ++count;
    });
    EXPECT_EQ(ExactCount(count), count_quasi(length)) << "length " << length;
  }
}

// Every quasi-valid word is valid or a valid word with one dot inserted, so
// the union of those two sets is the whole class.
TEST(IsQuasiValid, CountMatchesRecursionUpToTwelve) {
  for (std::size_t m = 1; m <= 12; ++m) {
    std::set<std::string> words;
    for (const auto& w : all_valid(m)) words.insert(w);
    for (const auto& w : all_valid(m - 1))
      for (std::size_t i = 0; i <= w.size(); ++i) words.insert(w.substr(0, i) + "." + w.substr(i));
    for (const auto& w : words) ASSERT_TRUE(is_quasi_valid(P(w.c_str()))) << w;
    EXPECT_EQ(ExactCount(words.size()), count_quasi(m)) << "m = " << m;
  }
}

TEST(IsQuasiValid, ValidImpliesQuasi) {
  for (std::size_t length = 0; length <= 10; ++length)
    for (const auto& w : all_valid(length)) ASSERT_TRUE(is_quasi_valid(P(w.c_str()))) << w;
}

TEST(CountValid, Values) {
  EXPECT_EQ(count_valid(0), 1);
  EXPECT_EQ(count_valid(1), 1);
  EXPECT_EQ(count_valid(2), 3);
  EXPECT_EQ(count_valid(3), 5);
  EXPECT_EQ(count_valid(4), 17);
  EXPECT_EQ(count_valid(6), 119);
  // Far beyond 64 bits.
  EXPECT_GT(count_valid(80), ExactCount(1) << 128);
}

TEST(CountQuasi, Values) {
  EXPECT_EQ(count_quasi(0), 1);
  EXPECT_EQ(count_quasi(2), 3);
  EXPECT_EQ(count_quasi(3), 7);
}

}  // namespace
}  // namespace vfc

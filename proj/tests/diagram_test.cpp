#include "vecfield/diagram.hpp"
#include "vecfield/errors.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <map>
#include <set>

namespace vfc {
namespace {

BoardDiagram D(const char* text) { return diagram_from_bracketing(parse_string(text)); }
std::string S(const BoardDiagram& d) { return bracketing_from_diagram(d).str(); }

template <typename F>
void for_each_valid_diagram(std::size_t slots, F&& f) {
  ValidStrings strings(slots);
  BracketingString s;
  while (strings.next(s)) f(diagram_from_bracketing(s));
}

TEST(DiagramFromBracketing, Examples) {
  const BoardDiagram a = D("()");
  ASSERT_EQ(a.slot_count(), 2u);
  EXPECT_EQ(a.slot(0), (Pairing{1, EdgeKind::Homoclinic}));
  EXPECT_EQ(a.slot(1), (Pairing{0, EdgeKind::Homoclinic}));

  const BoardDiagram b = D("[]..");
  EXPECT_EQ(b.slot(0), (Pairing{1, EdgeKind::Transversal}));
  EXPECT_FALSE(b.slot(2).has_value());
  EXPECT_FALSE(b.slot(3).has_value());

  EXPECT_THROW(D("(.)"), OddLength);
  EXPECT_THROW(D("(..]"), NotValid);
  EXPECT_THROW(D("([)]"), NotValid);
  EXPECT_THROW(D(""), EmptyDiagram);
}

TEST(BracketingFromDiagram, Examples) {
  EXPECT_EQ(S(BoardDiagram({Pairing{1, EdgeKind::Homoclinic}, Pairing{0, EdgeKind::Homoclinic}})),
            "()");
  const BoardDiagram nested({Pairing{3, EdgeKind::Homoclinic}, Pairing{2, EdgeKind::Homoclinic},
                             Pairing{1, EdgeKind::Homoclinic}, Pairing{0, EdgeKind::Homoclinic}});
  EXPECT_EQ(S(nested), "(())");
  EXPECT_EQ(S(rotate(nested, 1)), "()()");
}

TEST(BoardDiagram, RejectsBrokenInvariants) {
  using K = EdgeKind;
  EXPECT_THROW(BoardDiagram({Pairing{1, K::Homoclinic}, std::nullopt}), MalformedDiagram);
  EXPECT_THROW(BoardDiagram({Pairing{1, K::Homoclinic}, Pairing{0, K::Transversal}}),
               MalformedDiagram);
  EXPECT_THROW(BoardDiagram({Pairing{0, K::Homoclinic}, std::nullopt}), MalformedDiagram);
  EXPECT_THROW(BoardDiagram({Pairing{5, K::Homoclinic}, std::nullopt}), MalformedDiagram);
  // Crossing chords of one kind read off as a valid word; still rejected.
  EXPECT_THROW(BoardDiagram({Pairing{2, K::Homoclinic}, Pairing{3, K::Homoclinic},
                             Pairing{0, K::Homoclinic}, Pairing{1, K::Homoclinic}}),
               MalformedDiagram);
  // Even interior is part of the contract.
  EXPECT_THROW(BoardDiagram({Pairing{2, K::Homoclinic}, std::nullopt, Pairing{0, K::Homoclinic},
                             std::nullopt}),
               NotValid);
  EXPECT_THROW(BoardDiagram({std::nullopt, std::nullopt, std::nullopt}), OddLength);
  EXPECT_THROW(BoardDiagram(std::vector<Slot>{}), EmptyDiagram);
}

TEST(Rotate, Examples) {
  const BoardDiagram d = D("([])");
  EXPECT_EQ(rotate(d, 0), d);
  EXPECT_EQ(rotate(D("(())"), 2), D("(())"));
  // Old slot i moves to slot i + r.
  EXPECT_EQ(rotate(d, 1), D("()[]"));
  EXPECT_EQ(rotate(d, 3), D("[]()"));
  EXPECT_EQ(rotate(d, -1), rotate(d, 3));
  EXPECT_EQ(rotate(d, 4 * 7 + 3), rotate(d, 3));
}

TEST(Period, Examples) {
  EXPECT_EQ(period(D("....")), 1u);
  EXPECT_EQ(period(D("()()")), 2u);
  EXPECT_EQ(period(D("()[]")), 4u);
  EXPECT_EQ(period(D("(())")), 2u);
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(D("([])")).str(), "()[]");
  EXPECT_EQ(canonical_form(D("()")).str(), "()");
  std::set<std::string> rotations;
  for (int r = 0; r < 4; ++r) rotations.insert(S(rotate(D("([])"), r)));
  EXPECT_EQ(rotations, (std::set<std::string>{"()[]", "[()]", "[]()", "([])"}));
}

TEST(IsGeneric, Examples) {
  EXPECT_TRUE(is_generic(D("[[]]")));
  EXPECT_FALSE(is_generic(D("()")));
  EXPECT_FALSE(is_generic(D("[]..")));
}

TEST(Diagram, RoundTripUpToTen) {
  for (std::size_t slots = 2; slots <= 10; slots += 2) {
    ValidStrings strings(slots);
    BracketingString s;
    while (strings.next(s)) ASSERT_EQ(bracketing_from_diagram(diagram_from_bracketing(s)), s);
  }
}

TEST(Rotate, GroupLaws) {
  for (std::size_t slots = 2; slots <= 8; slots += 2) {
    const auto size = static_cast<long long>(slots);
    for_each_valid_diagram(slots, [&](const BoardDiagram& d) {
      ASSERT_EQ(rotate(d, size), d);
      for (long long a = 0; a < size; ++a)
        for (long long b = 0; b < size; ++b)
          ASSERT_EQ(rotate(d, a + b), rotate(rotate(d, a), b));
    });
  }
}

TEST(Period, DividesSlotCountAndCharacterizesFixedShifts) {
  for (std::size_t slots = 2; slots <= 10; slots += 2) {
    for_each_valid_diagram(slots, [&](const BoardDiagram& d) {
      const std::size_t p = period(d);
      ASSERT_EQ(slots % p, 0u);
      for (std::size_t r = 0; r < slots; ++r)
        ASSERT_EQ(rotate(d, static_cast<long long>(r)) == d, r % p == 0);
    });
  }
}

// Canonical form separates orbits exactly: orbits built by explicit rotation
// are the fibres of canonical_form.
TEST(CanonicalForm, ConstantOnOrbitsAndDistinctAcrossThem) {
  for (std::size_t slots = 2; slots <= 12; slots += 2) {
    std::map<std::string, std::string> orbit_of;  // word -> orbit label
    std::set<std::string> labels;
    for_each_valid_diagram(slots, [&](const BoardDiagram& d) {
      const std::string word = S(d);
      if (orbit_of.count(word)) return;
      const std::string label = canonical_form(d).str();
      ASSERT_TRUE(labels.insert(label).second) << "two orbits share " << label;
      for (std::size_t r = 0; r < slots; ++r) {
        const BoardDiagram e = rotate(d, static_cast<long long>(r));
        orbit_of[S(e)] = label;
        ASSERT_EQ(canonical_form(e).str(), label);
      }
    });
    EXPECT_EQ(ExactCount(orbit_of.size()), count_valid(slots));
  }
}

TEST(IsGeneric, GenericDiagramsAreCatalan) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t generic = 0;
    for_each_valid_diagram(2 * n, [&](const BoardDiagram& d) { generic += is_generic(d); });
    EXPECT_EQ(generic, catalan[n]) << "n = " << n;
  }
}

TEST(DiagramJson, LayoutAndRoundTrip) {
  const BoardDiagram d = D("[].().");
  const nlohmann::json j = to_json(d);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["slots"][0], (nlohmann::json{{"partner", 1}, {"kind", "T"}}));
  EXPECT_TRUE(j["slots"][2]["partner"].is_null());
  EXPECT_TRUE(j["slots"][2]["kind"].is_null());
  EXPECT_EQ(j["slots"][4], (nlohmann::json{{"partner", 3}, {"kind", "H"}}));
  EXPECT_EQ(diagram_from_json(j), d);

  nlohmann::json bad = j;
  bad["n"] = 4;
  EXPECT_THROW(diagram_from_json(bad), MalformedDiagram);
  bad = j;
  bad["slots"][0]["kind"] = "X";
  EXPECT_THROW(diagram_from_json(bad), MalformedDiagram);
  EXPECT_THROW(diagram_from_json(nlohmann::json::array()), MalformedDiagram);
}

}  // namespace
}  // namespace vfc

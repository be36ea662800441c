#pragma once

#include "vecfield/bracketing.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace vfc {

/// Transversal (square brackets, solid) or homoclinic (round brackets, dashed).
enum class EdgeKind : std::uint8_t { Transversal, Homoclinic };

constexpr EdgeKind edge_kind(BracketKind k) noexcept {
  return k == BracketKind::Square ? EdgeKind::Transversal : EdgeKind::Homoclinic;
}
constexpr BracketKind bracket_kind(EdgeKind k) noexcept {
  return k == EdgeKind::Transversal ? BracketKind::Square : BracketKind::Round;
}

struct Pairing {
  std::size_t partner;
  EdgeKind kind;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// One boundary board: unpaired, or paired with another board.
using Slot = std::optional<Pairing>;

/// 2n boards on a circle, read from slot 0 in increasing index order, with
/// typed non-crossing pairings. Instances always satisfy the invariants:
/// the pairing is a fixed-point-free involution preserving kind and the
/// read-off bracketing is valid.
class BoardDiagram {
 public:
  /// Validates and adopts `slots`. Throws EmptyDiagram, OddLength or
  /// MalformedDiagram.
  explicit BoardDiagram(std::vector<Slot> slots);

  std::size_t slot_count() const noexcept { return slots_.size(); }
  std::size_t n() const noexcept { return slots_.size() / 2; }
  const Slot& slot(std::size_t i) const { return slots_[i]; }
  const std::vector<Slot>& slots() const noexcept { return slots_; }

  friend bool operator==(const BoardDiagram&, const BoardDiagram&) = default;

 private:
  struct Trusted {};
  BoardDiagram(std::vector<Slot> slots, Trusted) : slots_(std::move(slots)) {}

  friend BoardDiagram diagram_from_bracketing(const BracketingString&);
  friend BoardDiagram rotate(const BoardDiagram&, long long);

  std::vector<Slot> slots_;
};

/// Throws OddLength or NotValid.
BoardDiagram diagram_from_bracketing(const BracketingString& s);

BracketingString bracketing_from_diagram(const BoardDiagram& d);

/// Shifts every board by r positions (mod 2n) in increasing index direction.
BoardDiagram rotate(const BoardDiagram& d, long long r);

/// Smallest r > 0 with rotate(d, r) == d. Divides slot_count().
std::size_t period(const BoardDiagram& d);

/// Lexicographically least reading over all rotations; equal exactly for
/// rotation-equivalent diagrams.
BracketingString canonical_form(const BoardDiagram& d);

/// No unpaired board and no homoclinic pair.
bool is_generic(const BoardDiagram& d);

/// {"n": n, "slots": [{"partner": j|null, "kind": "T"|"H"|null}, ...]}
nlohmann::json to_json(const BoardDiagram& d);

/// Inverse of to_json; ignores an optional "schema" member. Throws
/// MalformedDiagram on shape errors and on invariant violations.
BoardDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace vfc

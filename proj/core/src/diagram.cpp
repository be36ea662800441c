#include "vecfield/diagram.hpp"

#include "vecfield/errors.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace vfc {

namespace {

BracketingString read_off(const std::vector<Slot>& slots) {
  std::vector<Symbol> symbols(slots.size(), Symbol::Dot);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    const BracketKind kind = bracket_kind(slots[i]->kind);
    symbols[i] = i < slots[i]->partner ? open_symbol(kind) : close_symbol(kind);
  }
  return BracketingString(std::move(symbols));
}

std::size_t wrap(long long value, std::size_t modulus) {
  const auto m = static_cast<long long>(modulus);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

}  // namespace

BoardDiagram::BoardDiagram(std::vector<Slot> slots) : slots_(std::move(slots)) {
  const std::size_t size = slots_.size();
  if (size == 0) throw EmptyDiagram();
  if (size % 2 != 0) throw OddLength();
  for (std::size_t i = 0; i < size; ++i) {
    if (!slots_[i]) continue;
    const auto [j, kind] = *slots_[i];
    if (j >= size || j == i)
      throw MalformedDiagram("slot " + std::to_string(i) + " has an out-of-range partner");
    if (!slots_[j] || slots_[j]->partner != i || slots_[j]->kind != kind)
      throw MalformedDiagram("pairing is not a kind-preserving involution at slot " +
                             std::to_string(i));
  }
  // The read-off word can be valid while the stored pairing crosses, so
  // compare the matched pairs as well.
  const PairingTable table = match_pairs(read_off(slots_));
  for (const auto& p : table.pairs) {
    if (slots_[p.open]->partner != p.close)
      throw MalformedDiagram("pairings cross at slot " + std::to_string(p.open));
  }
}

BoardDiagram diagram_from_bracketing(const BracketingString& s) {
  if (s.size() % 2 != 0) throw OddLength();
  if (s.empty()) throw EmptyDiagram();
  const PairingTable table = match_pairs(s);
  std::vector<Slot> slots(s.size());
  for (const auto& p : table.pairs) {
    slots[p.open] = Pairing{p.close, edge_kind(p.kind)};
    slots[p.close] = Pairing{p.open, edge_kind(p.kind)};
  }
  return BoardDiagram(std::move(slots), BoardDiagram::Trusted{});
}

BracketingString bracketing_from_diagram(const BoardDiagram& d) { return read_off(d.slots()); }

BoardDiagram rotate(const BoardDiagram& d, long long r) {
  const std::size_t size = d.slot_count();
  const std::size_t shift = wrap(r, size);
  std::vector<Slot> slots(size);
  for (std::size_t i = 0; i < size; ++i) {
    Slot s = d.slot(i);
    if (s) s->partner = (s->partner + shift) % size;
    slots[(i + shift) % size] = s;
  }
  return BoardDiagram(std::move(slots), BoardDiagram::Trusted{});
}

std::size_t period(const BoardDiagram& d) {
  const std::size_t size = d.slot_count();
  for (std::size_t r = 1; r < size; ++r) {
    if (size % r == 0 && rotate(d, static_cast<long long>(r)) == d) return r;
  }
  return size;
}

BracketingString canonical_form(const BoardDiagram& d) {
  BracketingString best = bracketing_from_diagram(d);
  for (std::size_t r = 1; r < d.slot_count(); ++r) {
    BracketingString candidate = bracketing_from_diagram(rotate(d, static_cast<long long>(r)));
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

bool is_generic(const BoardDiagram& d) {
  for (const Slot& s : d.slots())
    if (!s || s->kind != EdgeKind::Transversal) return false;
  return true;
}

nlohmann::json to_json(const BoardDiagram& d) {
  nlohmann::json slots = nlohmann::json::array();
  for (const Slot& s : d.slots()) {
    if (s)
      slots.push_back({{"partner", s->partner},
                       {"kind", s->kind == EdgeKind::Transversal ? "T" : "H"}});
    else
      slots.push_back({{"partner", nullptr}, {"kind", nullptr}});
  }
  return {{"n", d.n()}, {"slots", std::move(slots)}};
}

BoardDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("slots") || !j["slots"].is_array())
    throw MalformedDiagram("diagram JSON needs a \"slots\" array");
  std::vector<Slot> slots;
  for (const auto& entry : j["slots"]) {
    if (!entry.is_object()) throw MalformedDiagram("slot entries must be objects");
    const auto partner = entry.value("partner", nlohmann::json());
    const auto kind = entry.value("kind", nlohmann::json());
    if (partner.is_null() && kind.is_null()) {
      slots.emplace_back();
      continue;
    }
    if (!partner.is_number_unsigned() || !kind.is_string())
      throw MalformedDiagram("paired slot needs an unsigned \"partner\" and a \"kind\"");
    const auto k = kind.get<std::string>();
    if (k != "T" && k != "H") throw MalformedDiagram("slot kind must be \"T\" or \"H\"");
    slots.push_back(Pairing{partner.get<std::size_t>(),
                            k == "T" ? EdgeKind::Transversal : EdgeKind::Homoclinic});
  }
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() * 2 != slots.size()))
    throw MalformedDiagram("\"n\" does not match the number of slots");
  return BoardDiagram(std::move(slots));
}

}  // namespace vfc

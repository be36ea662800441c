#pragma once

#include "vecfield/bracketing.hpp"
#include "vecfield/diagram.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace vfc {

enum class IncidenceType : std::uint8_t { Edge, HalfEdge };

/// One entry of a vertex's circular incidence list.
struct Incidence {
  IncidenceType type = IncidenceType::HalfEdge;
  std::size_t neighbor = 0;                  // edges only
  EdgeKind kind = EdgeKind::Transversal;     // edges only

  static Incidence edge(std::size_t to, EdgeKind k) { return {IncidenceType::Edge, to, k}; }
  static Incidence half_edge() { return {}; }
  bool is_edge() const noexcept { return type == IncidenceType::Edge; }

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct IncidenceRef {
  std::size_t vertex;
  std::size_t index;
};

struct TreeStats {
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t half_edges = 0;
  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

/// Rooted plane tree with transversal/homoclinic edges and half-edges.
///
/// Stored canonically: vertices are numbered in contour discovery order, the
/// root is vertex 0 and its root incidence is entry 0, and every other
/// vertex's list starts with the edge to its parent. Lists are read
/// counterclockwise. Two trees are equal iff they are the same rooted plane
/// tree.
class GeneralizedTree {
 public:
  /// The single-vertex tree with no incidences.
  GeneralizedTree() : rotation_(1) {}

  std::size_t vertex_count() const noexcept { return rotation_.size(); }
  std::size_t root() const noexcept { return 0; }
  const std::vector<Incidence>& incidences(std::size_t vertex) const { return rotation_[vertex]; }
  const std::vector<std::vector<Incidence>>& rotation() const noexcept { return rotation_; }

  friend bool operator==(const GeneralizedTree&, const GeneralizedTree&) = default;

 private:
  explicit GeneralizedTree(std::vector<std::vector<Incidence>> rotation)
      : rotation_(std::move(rotation)) {}

  friend GeneralizedTree tree_from_bracketing(const BracketingString&);
  friend GeneralizedTree tree_from_rotation(std::vector<std::vector<Incidence>>, std::size_t,
                                            std::size_t);

  std::vector<std::vector<Incidence>> rotation_;
};

/// Contour decoding: an opener descends along a new edge of its kind, a closer
/// climbs back, a dot hangs a half-edge on the current vertex. Throws NotValid.
GeneralizedTree tree_from_bracketing(const BracketingString& s);

/// Builds the canonical tree from an arbitrary rotation system (circular
/// incidence lists, edges listed at both ends) rooted at `root_incidence` of
/// `root_vertex`. Throws BadIncidence if the lists do not describe a tree.
GeneralizedTree tree_from_rotation(std::vector<std::vector<Incidence>> rotation,
                                   std::size_t root_vertex, std::size_t root_incidence);

/// Counterclockwise contour walk from the root incidence.
BracketingString bracketing_from_tree(const GeneralizedTree& t);

TreeStats tree_stats(const GeneralizedTree& t);

/// Drops the marked half-edge and re-roots at the first full edge following it
/// counterclockwise around the same vertex, which becomes the root vertex.
/// Throws BadIncidence if `marked` is not a half-edge, NoEdgeAtVertexOrBeyond
/// if the tree has no edges.
GeneralizedTree reroot_from_half_edge(const GeneralizedTree& t, IncidenceRef marked);

/// Graphviz rendering: solid transversal edges, dashed homoclinic edges,
/// half-edges as stubs to point nodes, root vertex double-circled.
std::string to_dot(const GeneralizedTree& t);

/// {"root": 0, "vertices": [[{"edge": j, "kind": "T"|"H"} | {"half_edge": true}, ...], ...]}
nlohmann::json to_json(const GeneralizedTree& t);

/// Accepts the to_json layout with any vertex numbering; an optional
/// "root_incidence" selects the root orientation (default 0). Throws
/// BadIncidence.
GeneralizedTree tree_from_json(const nlohmann::json& j);

}  // namespace vfc

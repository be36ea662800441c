#include "vecfield/tree.hpp"

#include "vecfield/errors.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace vfc {

namespace {

using Rotation = std::vector<std::vector<Incidence>>;

// Contour word of a (not necessarily canonical) rotation system, starting at
// incidence `start` of `root`. At any other vertex the walk begins just after
// the edge it arrived by.
BracketingString contour(const Rotation& rotation, std::size_t root, std::size_t start) {
  struct Frame {
    std::size_t vertex;
    std::size_t first;
    std::size_t step;
    std::size_t steps;
  };
  BracketingString out;
  const auto deg = [&](std::size_t v) { return rotation[v].size(); };
  std::vector<Frame> stack{{root, start, 0, deg(root)}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.step == f.steps) {
      stack.pop_back();
      if (!stack.empty()) {
        const Frame& up = stack.back();
        const Incidence& via = rotation[up.vertex][(up.first + up.step - 1) % deg(up.vertex)];
        out.push_back(close_symbol(bracket_kind(via.kind)));
      }
      continue;
    }
    const Incidence& inc = rotation[f.vertex][(f.first + f.step) % deg(f.vertex)];
    ++f.step;
    if (!inc.is_edge()) {
      out.push_back(Symbol::Dot);
      continue;
    }
    const std::size_t child = inc.neighbor;
    out.push_back(open_symbol(bracket_kind(inc.kind)));
    const auto& list = rotation[child];
    std::size_t back = 0;
    while (!(list[back].is_edge() && list[back].neighbor == f.vertex)) ++back;
    stack.push_back({child, back + 1, 0, list.size() - 1});
  }
  return out;
}

}  // namespace

GeneralizedTree tree_from_bracketing(const BracketingString& s) {
  const PairingTable table = match_pairs(s);  // validates
  (void)table;
  Rotation rotation(1);
  std::size_t current = 0;
  for (Symbol sym : s) {
    if (sym == Symbol::Dot) {
      rotation[current].push_back(Incidence::half_edge());
    } else if (is_open(sym)) {
      const EdgeKind kind = edge_kind(kind_of(sym));
      const std::size_t child = rotation.size();
      rotation[current].push_back(Incidence::edge(child, kind));
      rotation.push_back({Incidence::edge(current, kind)});
      current = child;
    } else {
      current = rotation[current].front().neighbor;
    }
  }
  return GeneralizedTree(std::move(rotation));
}

BracketingString bracketing_from_tree(const GeneralizedTree& t) {
  return contour(t.rotation(), t.root(), 0);
}

TreeStats tree_stats(const GeneralizedTree& t) {
  TreeStats stats;
  stats.vertices = t.vertex_count();
  stats.edges = stats.vertices - 1;
  for (const auto& list : t.rotation())
    for (const Incidence& inc : list)
      if (!inc.is_edge()) ++stats.half_edges;
  return stats;
}

GeneralizedTree reroot_from_half_edge(const GeneralizedTree& t, IncidenceRef marked) {
  if (marked.vertex >= t.vertex_count() || marked.index >= t.incidences(marked.vertex).size() ||
      t.incidences(marked.vertex)[marked.index].is_edge())
    throw BadIncidence("marked incidence is not a half-edge of the tree");
  if (t.vertex_count() == 1) throw NoEdgeAtVertexOrBeyond();

  Rotation rotation = t.rotation();
  auto& list = rotation[marked.vertex];
  list.erase(list.begin() + static_cast<std::ptrdiff_t>(marked.index));
  // Every vertex of a tree with an edge carries one, so this terminates.
  std::size_t start = marked.index % list.size();
  while (!list[start].is_edge()) start = (start + 1) % list.size();
  return tree_from_bracketing(contour(rotation, marked.vertex, start));
}

GeneralizedTree tree_from_rotation(Rotation rotation, std::size_t root_vertex,
                                   std::size_t root_incidence) {
  const std::size_t vertices = rotation.size();
  if (vertices == 0) throw BadIncidence("tree needs at least one vertex");
  if (root_vertex >= vertices) throw BadIncidence("root vertex out of range");
  if (rotation[root_vertex].empty()) {
    if (vertices != 1) throw BadIncidence("isolated root in a multi-vertex tree");
    return GeneralizedTree();
  }
  if (root_incidence >= rotation[root_vertex].size())
    throw BadIncidence("root incidence out of range");

  std::size_t edge_ends = 0;
  for (std::size_t v = 0; v < vertices; ++v) {
    for (const Incidence& inc : rotation[v]) {
      if (!inc.is_edge()) continue;
      ++edge_ends;
      if (inc.neighbor >= vertices || inc.neighbor == v)
        throw BadIncidence("edge at vertex " + std::to_string(v) + " has a bad endpoint");
      std::size_t back = 0;
      for (const Incidence& other : rotation[inc.neighbor])
        if (other.is_edge() && other.neighbor == v && other.kind == inc.kind) ++back;
      if (back != 1)
        throw BadIncidence("edge " + std::to_string(v) + "-" + std::to_string(inc.neighbor) +
                           " is not listed exactly once, with the same kind, at both ends");
    }
  }
  // Connected with |E| = |V| - 1 means a tree.
  if (edge_ends != 2 * (vertices - 1)) throw BadIncidence("edge count does not match a tree");
  std::vector<bool> seen(vertices, false);
  std::vector<std::size_t> todo{root_vertex};
  seen[root_vertex] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t v = todo.back();
    todo.pop_back();
    for (const Incidence& inc : rotation[v]) {
      if (inc.is_edge() && !seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        todo.push_back(inc.neighbor);
      }
    }
  }
  if (reached != vertices) throw BadIncidence("incidence lists are not connected");
  return tree_from_bracketing(contour(rotation, root_vertex, root_incidence));
}

nlohmann::json to_json(const GeneralizedTree& t) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& list : t.rotation()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Incidence& inc : list) {
      if (inc.is_edge())
        entries.push_back(
            {{"edge", inc.neighbor}, {"kind", inc.kind == EdgeKind::Transversal ? "T" : "H"}});
      else
        entries.push_back({{"half_edge", true}});
    }
    vertices.push_back(std::move(entries));
  }
  return {{"root", t.root()}, {"vertices", std::move(vertices)}};
}

GeneralizedTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw BadIncidence("tree JSON needs a \"vertices\" array");
  Rotation rotation;
  for (const auto& list : j["vertices"]) {
    if (!list.is_array()) throw BadIncidence("each vertex must be an array of incidences");
    auto& out = rotation.emplace_back();
    for (const auto& entry : list) {
      if (!entry.is_object()) throw BadIncidence("incidences must be objects");
      if (entry.value("half_edge", false)) {
        out.push_back(Incidence::half_edge());
        continue;
      }
      if (!entry.contains("edge") || !entry["edge"].is_number_unsigned() ||
          !entry.contains("kind") || !entry["kind"].is_string())
        throw BadIncidence("edge incidences need \"edge\" and \"kind\"");
      const auto kind = entry["kind"].get<std::string>();
      if (kind != "T" && kind != "H") throw BadIncidence("edge kind must be \"T\" or \"H\"");
      out.push_back(Incidence::edge(entry["edge"].get<std::size_t>(),
                                    kind == "T" ? EdgeKind::Transversal : EdgeKind::Homoclinic));
    }
  }
  const auto field = [&](const char* name) -> std::size_t {
    if (!j.contains(name)) return 0;
    if (!j[name].is_number_unsigned()) throw BadIncidence(std::string(name) + " must be unsigned");
    return j[name].get<std::size_t>();
  };
  return tree_from_rotation(std::move(rotation), field("root"), field("root_incidence"));
}

std::string to_dot(const GeneralizedTree& t) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\", shape="
        << (v == t.root() ? "doublecircle" : "circle") << "];\n";
  }
  std::size_t stub = 0;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    for (const Incidence& inc : t.incidences(v)) {
      if (inc.is_edge()) {
        if (inc.neighbor < v) continue;  // each edge once, parent side
        out << "  v" << v << " -- v" << inc.neighbor << " [style="
            << (inc.kind == EdgeKind::Transversal ? "solid" : "dashed") << "];\n";
      } else {
        out << "  h" << stub << " [label=\"\", shape=point];\n";
        out << "  v" << v << " -- h" << stub << " [style=solid, penwidth=0.5];\n";
        ++stub;
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace vfc

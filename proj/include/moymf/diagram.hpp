#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "moymf/mf.hpp"
#include "moymf/symfun.hpp"

namespace moymf {

// An edge end is either a vertex or a boundary label. A label that is the head
// of one edge and the tail of another glues the two ends together.
struct Endpoint {
  bool boundary = false;
  std::string name;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  std::string id;
  int color = 0;
  Endpoint tail, head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class VertexKind { merge, split };

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::merge;
  std::vector<std::string> ins, outs;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Diagram {
  int level = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;

  const Edge& edge(const std::string& id) const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct BoundaryEnd {
  std::string label;
  std::string edge;
  int color = 0;
  bool out = false;  // head of its edge
};

struct DiagramOptions {
  bool allow_large_colors = false;  // colors above the level
  std::optional<int> level;         // overrides the `level` line
};

Diagram parse_diagram(std::string_view text, const DiagramOptions& opt = {});
std::string render(const Diagram& d);
void check_diagram(const Diagram& d, bool allow_large_colors = false);

// Unglued boundary ends, in edge order.
std::vector<BoundaryEnd> boundary_ends(const Diagram& d);
bool is_closed(const Diagram& d);

struct CompiledDiagram {
  KoszulMF mf;
  std::vector<Alphabet> inputs, outputs;
  std::vector<Alphabet> internal;
  std::vector<VarId> internal_vars() const;
  std::vector<VarId> external_vars() const;
};

// Internal alphabets are labelled "<prefix>@<edge id>" so that separately
// compiled diagrams only share their boundary alphabets.
CompiledDiagram compile(const Diagram& d, const std::string& internal_prefix = "");
Poly boundary_potential(const Diagram& d);

// A random valid diagram built from merges and splits of a few strands.
Diagram random_diagram(std::mt19937_64& rng, int level, int max_color, int max_vertices, bool close = false);

}  // namespace moymf

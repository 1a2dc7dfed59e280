#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lll/rational.hpp"

namespace lll {

enum class GraphFormat { json, edgelist };

// Undirected graph with an exact rational probability label per vertex.
// Vertices keep their input order and get dense indices 0..n-1 in that
// order; the input order is the deterministic tie-breaker everywhere
// downstream. Immutable after construction.
class LabeledGraph {
 public:
  struct VertexSpec {
    std::string name;
    Rational label;
  };

  // Validates names (unique, nonempty, no whitespace), labels (in [0, 1]),
  // and edges (known endpoints, no self-loops). Parallel edges collapse.
  // Throws ValidationError.
  LabeledGraph(std::vector<VertexSpec> vertices,
               const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return edge_count_; }
  const std::string& name_of(int v) const { return names_.at(v); }
  std::optional<int> index_of(const std::string& name) const;
  const Rational& label(int v) const { return labels_.at(v); }
  const std::vector<Rational>& labels() const { return labels_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  bool adjacent(int u, int v) const;

  // Edges as index pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  // True iff no two members of s are adjacent. Throws std::invalid_argument
  // on an unknown index.
  bool is_independent(const std::vector<int>& s) const;

  // Same structure with every label replaced by p.
  LabeledGraph with_uniform_label(const Rational& p) const;
  // Same structure with the given per-vertex labels.
  LabeledGraph with_labels(std::vector<Rational> labels) const;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> labels_;
  std::vector<std::vector<int>> adjacency_;  // sorted, symmetric, irreflexive
  int edge_count_ = 0;
};

// Throws ParseError on malformed input and ValidationError on invariant
// violations. Vertex order is preserved from the input.
LabeledGraph parse_graph(std::istream& in, GraphFormat format);
LabeledGraph parse_graph(const std::string& text, GraphFormat format);

// Inverse of parse_graph: parse(serialize(g)) reproduces names, edges and
// exact labels.
std::string serialize_graph(const LabeledGraph& g, GraphFormat format);

}  // namespace lll

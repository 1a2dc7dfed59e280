#pragma once

// Shared graph fixtures for the test suites.

#include <string>
#include <vector>

#include "lll/graph.hpp"
#include "lll/tree_order.hpp"

namespace fixtures {

inline lll::Rational rq(const std::string& text) {
  return lll::parse_rational(text);
}

// 11 vertices a..k, 27 edges: maximal planar, chordal, non-Hamiltonian.
inline lll::LabeledGraph goldner_harary(const std::string& label = "1/8") {
  std::vector<lll::LabeledGraph::VertexSpec> vertices;
  for (char c = 'a'; c <= 'k'; ++c) {
    vertices.push_back({std::string(1, c), rq(label)});
  }
  const char* edge_spec[] = {"ab", "ae", "ag", "bc", "bd", "be", "bf",
                             "bg", "dg", "df", "ce", "cf", "ef", "fg",
                             "kj", "ke", "kg", "jh", "ji", "je", "jf",
                             "jg", "ig", "if", "he", "hf", "eg"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (const char* e : edge_spec) {
    edges.emplace_back(std::string(1, e[0]), std::string(1, e[1]));
  }
  return lll::LabeledGraph(std::move(vertices), edges);
}

// The successor forest drawn in the tree-order realization of the
// Goldner--Harary graph: a,c,d -> b; h,i,k -> j; b,j -> e; e -> f; f -> g.
inline lll::TreeOrder goldner_harary_order() {
  auto idx = [](char c) { return c - 'a'; };
  std::vector<int> successor(11, -1);
  successor[idx('a')] = idx('b');
  successor[idx('c')] = idx('b');
  successor[idx('d')] = idx('b');
  successor[idx('h')] = idx('j');
  successor[idx('i')] = idx('j');
  successor[idx('k')] = idx('j');
  successor[idx('b')] = idx('e');
  successor[idx('j')] = idx('e');
  successor[idx('e')] = idx('f');
  successor[idx('f')] = idx('g');
  return lll::TreeOrder::from_successors(std::move(successor));
}

inline lll::LabeledGraph complete_graph(int n, const std::string& label) {
  std::vector<lll::LabeledGraph::VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back({"v" + std::to_string(i), rq(label)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(vertices[i].name, vertices[j].name);
    }
  }
  return lll::LabeledGraph(std::move(vertices), edges);
}

inline lll::LabeledGraph cycle_graph(int n, const std::string& label = "1/8") {
  std::vector<lll::LabeledGraph::VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back({"v" + std::to_string(i), rq(label)});
  }
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(vertices[i].name, vertices[(i + 1) % n].name);
  }
  return lll::LabeledGraph(std::move(vertices), edges);
}

// Path a - b - c.
inline lll::LabeledGraph path3(const std::string& label = "1/4") {
  return lll::LabeledGraph(
      {{"a", rq(label)}, {"b", rq(label)}, {"c", rq(label)}},
      {{"a", "b"}, {"b", "c"}});
}

inline lll::LabeledGraph edgeless(int n, const std::string& label = "1/2") {
  std::vector<lll::LabeledGraph::VertexSpec> vertices;
  for (int i = 0; i < n; ++i) {
    vertices.push_back({"v" + std::to_string(i), rq(label)});
  }
  return lll::LabeledGraph(std::move(vertices), {});
}

inline std::vector<int> indices_of(const lll::LabeledGraph& g,
                                   const std::string& names) {
  std::vector<int> out;
  for (char c : names) out.push_back(*g.index_of(std::string(1, c)));
  return out;
}

}  // namespace fixtures

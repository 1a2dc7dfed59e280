#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lll/graph.hpp"

namespace lll {

// Permutation of vertex indices.
using EliminationOrdering = std::vector<int>;

// Maximum cardinality search visit order, ties broken by smallest input
// index. If the graph is chordal, the reverse of this order is a perfect
// elimination ordering.
EliminationOrdering mcs_order(const LabeledGraph& g);

struct ChordalityCheck {
  bool chordal = false;
  // Valid when !chordal: (v, u, w) with u, w neighbors of v later in the
  // elimination order and u not adjacent to w.
  std::array<int, 3> witness = {-1, -1, -1};
};

// Tests whether reverse(ord) is a perfect elimination ordering of g.
// ord must be a permutation of the vertex indices.
ChordalityCheck check_chordal(const LabeledGraph& g,
                              const EliminationOrdering& ord);

// Same test for an elimination ordering given first-eliminated-first.
ChordalityCheck check_elimination_ordering(const LabeledGraph& g,
                                           const EliminationOrdering& peo);

// Clique tree of a chordal graph: nodes are the maximal cliques, tree edges
// form a maximum-weight spanning tree of the clique intersection graph, so
// for every vertex the set of nodes containing it induces a subtree, and two
// vertices are adjacent iff their subtrees share a node.
struct CliqueTree {
  std::vector<std::vector<int>> nodes;            // sorted vertex sets
  std::vector<std::pair<int, int>> edges;         // between node indices
  std::vector<std::vector<int>> vertex_subtree;   // per vertex: nodes holding it
  int root = -1;  // lowest-index node containing the last vertex of the peo
};

// peo is an elimination ordering, first-eliminated first. Throws
// NotChordalError (carrying the check witness) when g is not chordal.
CliqueTree build_clique_tree(const LabeledGraph& g,
                             const EliminationOrdering& peo);

}  // namespace lll

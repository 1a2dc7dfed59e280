#pragma once

#include <vector>

#include "lll/chordal.hpp"
#include "lll/graph.hpp"

namespace lll {

// Tree partial order on the vertex set, stored as a successor forest: every
// non-maximal vertex points at the unique smallest vertex above it, so the
// up-set of each vertex is exactly its successor chain. u <= v holds iff v
// is reached from u by following successor links.
class TreeOrder {
 public:
  TreeOrder() = default;
  // successor[v] = -1 marks a maximal vertex. A map with cycles is accepted
  // and reported through has_cycle(); order queries then throw.
  static TreeOrder from_successors(std::vector<int> successor);

  int size() const { return static_cast<int>(successor_.size()); }
  int successor(int v) const { return successor_.at(v); }
  const std::vector<int>& successors() const { return successor_; }

  bool has_cycle() const { return cycle_vertex_ >= 0; }
  int cycle_vertex() const { return cycle_vertex_; }

  bool leq(int u, int v) const;   // u <= v
  bool less(int u, int v) const;  // u <= v and u != v

 private:
  std::vector<int> successor_;
  std::vector<int> height_;  // chain length up to the maximal element
  int cycle_vertex_ = -1;
};

struct TreeOrderOptions {
  // Default root: the clique-tree node holding the last peo vertex; the
  // variant anchors at the first peo vertex instead. Either choice yields a
  // valid lefthanded order; having both exercises order-invariance.
  bool root_at_first_peo_vertex = false;
  // Ties between mutually blocking vertices go to the smaller input index by
  // default; true flips that.
  bool reverse_tie_break = false;
};

// Lefthanded tree-order for a chordal graph, built on its clique tree viewed
// as a subtree representation: hang a virtual leaf x0 off the root node, and
// put u below v whenever the path from u's subtree to x0 meets v's subtree
// but not conversely (mutual meets are tied by input index). The result is
// verified before it is returned. Throws NotChordalError for non-chordal
// input.
TreeOrder build_tree_order(const LabeledGraph& g,
                           const TreeOrderOptions& options = {});

struct LefthandedCheck {
  enum class Kind { ok, cycle, incomparable_edge, betweenness };
  Kind kind = Kind::ok;
  // cycle: {v on a successor cycle}; incomparable_edge: {u, v};
  // betweenness: {w, u, v} with w < u < v, v ~ w, v !~ u.
  std::vector<int> witness;
  bool ok() const { return kind == Kind::ok; }
};

// Checks that t is a valid tree order (acyclic successor chains) making g
// lefthanded: every edge joins comparable vertices, and w < u < v with
// v ~ w forces v ~ u. Returns the first violation found.
LefthandedCheck verify_lefthanded(const LabeledGraph& g, const TreeOrder& t);

// D_v, N_v = down-set members adjacent to v, and F_v = D_v minus N_v.
// All returned sorted by index. Throw std::invalid_argument on a bad vertex.
std::vector<int> down_set(const LabeledGraph& g, const TreeOrder& t, int v);
std::vector<int> down_neighbors(const LabeledGraph& g, const TreeOrder& t,
                                int v);
std::vector<int> down_nonneighbors(const LabeledGraph& g, const TreeOrder& t,
                                   int v);

// Maximal elements of u under t: members with no other member above them.
std::vector<int> maximal_elements(const TreeOrder& t, const std::vector<int>& u);

// Linear extension of t: peel off the minimal elements layer by layer, each
// layer in input-index order. Throws std::invalid_argument on a cyclic map.
EliminationOrdering linear_extension(const TreeOrder& t);

}  // namespace lll

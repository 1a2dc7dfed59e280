#include "lll/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lll/errors.hpp"

namespace lll {

EliminationOrdering mcs_order(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  EliminationOrdering order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!visited[u]) ++weight[u];
    }
  }
  return order;
}

namespace {

void require_permutation(const LabeledGraph& g, const EliminationOrdering& ord) {
  const int n = g.vertex_count();
  if (static_cast<int>(ord.size()) != n) {
    throw std::invalid_argument("ordering size does not match vertex count");
  }
  std::vector<bool> seen(n, false);
  for (int v : ord) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("ordering is not a permutation of the vertices");
    }
    seen[v] = true;
  }
}

}  // namespace

ChordalityCheck check_elimination_ordering(const LabeledGraph& g,
                                           const EliminationOrdering& peo) {
  require_permutation(g, peo);
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  // Golumbic's test: for each vertex it is enough to check the later
  // neighbors against the earliest of them.
  for (int v : peo) {
    int parent = -1;
    for (int u : g.neighbors(v)) {
      if (pos[u] > pos[v] && (parent == -1 || pos[u] < pos[parent])) parent = u;
    }
    if (parent == -1) continue;
    for (int u : g.neighbors(v)) {
      if (u != parent && pos[u] > pos[v] && !g.adjacent(parent, u)) {
        return {false, {v, parent, u}};
      }
    }
  }
  return {true, {-1, -1, -1}};
}

ChordalityCheck check_chordal(const LabeledGraph& g,
                              const EliminationOrdering& ord) {
  EliminationOrdering peo(ord.rbegin(), ord.rend());
  return check_elimination_ordering(g, peo);
}

namespace {

bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
  size_t j = 0;
  for (int x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size() || b[j] != x) return false;
    ++j;
  }
  return true;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  int count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

CliqueTree build_clique_tree(const LabeledGraph& g,
                             const EliminationOrdering& peo) {
  ChordalityCheck chk = check_elimination_ordering(g, peo);
  if (!chk.chordal) {
    throw NotChordalError({g.name_of(chk.witness[0]), g.name_of(chk.witness[1]),
                           g.name_of(chk.witness[2])});
  }
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  // Candidate cliques {v} + later neighbors, deduplicated and filtered to the
  // inclusion-maximal ones, keeping elimination order.
  std::vector<std::vector<int>> candidates;
  for (int v : peo) {
    std::vector<int> c{v};
    for (int u : g.neighbors(v)) {
      if (pos[u] > pos[v]) c.push_back(u);
    }
    std::sort(c.begin(), c.end());
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
      candidates.push_back(std::move(c));
    }
  }
  CliqueTree out;
  for (const auto& c : candidates) {
    bool maximal = true;
    for (const auto& d : candidates) {
      if (&c != &d && c.size() < d.size() && sorted_subset(c, d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.nodes.push_back(c);
  }

  // Maximum-weight spanning tree of the clique intersection graph; ties by
  // lowest node index pair. Zero-weight links join components of a
  // disconnected graph.
  const int m = static_cast<int>(out.nodes.size());
  struct WeightedEdge { int w, i, j; };
  std::vector<WeightedEdge> wedges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      wedges.push_back({intersection_size(out.nodes[i], out.nodes[j]), i, j});
    }
  }
  std::sort(wedges.begin(), wedges.end(), [](const auto& a, const auto& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  DisjointSets dsu(m);
  for (const auto& e : wedges) {
    if (dsu.unite(e.i, e.j)) out.edges.emplace_back(e.i, e.j);
  }

  out.vertex_subtree.assign(n, {});
  for (int i = 0; i < m; ++i) {
    for (int v : out.nodes[i]) out.vertex_subtree[v].push_back(i);
  }
  if (n > 0) {
    const int anchor = peo.back();
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(out.nodes[i].begin(), out.nodes[i].end(), anchor)) {
        out.root = i;
        break;
      }
    }
  }

  // The subtree property is what every downstream order computation leans
  // on, so fail loudly if the spanning tree ever lacks it.
  std::vector<std::vector<int>> tree_adj(m);
  for (const auto& [i, j] : out.edges) {
    tree_adj[i].push_back(j);
    tree_adj[j].push_back(i);
  }
  for (int v = 0; v < n; ++v) {
    const auto& sub = out.vertex_subtree[v];
    if (sub.empty()) throw std::logic_error("vertex missing from all cliques");
    std::vector<bool> in_sub(m, false);
    for (int i : sub) in_sub[i] = true;
    std::vector<int> stack{sub.front()};
    std::vector<bool> seen(m, false);
    seen[sub.front()] = true;
    size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree_adj[x]) {
        if (in_sub[y] && !seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != sub.size()) {
      throw std::logic_error("clique tree lost the subtree property");
    }
  }
  return out;
}

}  // namespace lll

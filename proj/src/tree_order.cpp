#include "lll/tree_order.hpp"

#include <algorithm>
#include <stdexcept>

#include "lll/errors.hpp"

namespace lll {

TreeOrder TreeOrder::from_successors(std::vector<int> successor) {
  const int n = static_cast<int>(successor.size());
  for (int s : successor) {
    if (s < -1 || s >= n) {
      throw std::invalid_argument("successor map mentions unknown vertex");
    }
  }
  TreeOrder t;
  t.successor_ = std::move(successor);
  t.height_.assign(n, -1);
  // Heights by chain walking; state 1 marks the chain in progress so a cycle
  // closes on itself.
  std::vector<int> state(n, 0);
  for (int start = 0; start < n && t.cycle_vertex_ < 0; ++start) {
    if (state[start] == 2) continue;
    std::vector<int> chain;
    int v = start;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      chain.push_back(v);
      v = t.successor_[v];
    }
    if (v != -1 && state[v] == 1) {
      t.cycle_vertex_ = v;
      break;
    }
    int h = v == -1 ? -1 : t.height_[v];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      t.height_[*it] = ++h;
      state[*it] = 2;
    }
  }
  return t;
}

bool TreeOrder::leq(int u, int v) const {
  if (u < 0 || v < 0 || u >= size() || v >= size()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (has_cycle()) throw std::logic_error("order query on a cyclic successor map");
  if (height_[u] < height_[v]) return false;
  int x = u;
  for (int steps = height_[u] - height_[v]; steps > 0; --steps) x = successor_[x];
  return x == v;
}

bool TreeOrder::less(int u, int v) const { return u != v && leq(u, v); }

TreeOrder build_tree_order(const LabeledGraph& g,
                           const TreeOrderOptions& options) {
  const int n = g.vertex_count();
  if (n == 0) return TreeOrder::from_successors({});

  EliminationOrdering ord = mcs_order(g);
  EliminationOrdering peo(ord.rbegin(), ord.rend());
  CliqueTree ct = build_clique_tree(g, peo);  // throws NotChordalError
  const int m = static_cast<int>(ct.nodes.size());

  int anchor = options.root_at_first_peo_vertex ? peo.front() : peo.back();
  int root = -1;
  for (int i = 0; i < m && root < 0; ++i) {
    if (std::binary_search(ct.nodes[i].begin(), ct.nodes[i].end(), anchor)) {
      root = i;
    }
  }

  // Root the clique tree; the virtual leaf x0 hangs off `root`, so the path
  // from any subtree to x0 is the ancestor path of its closest node.
  std::vector<std::vector<int>> tree_adj(m);
  for (const auto& [i, j] : ct.edges) {
    tree_adj[i].push_back(j);
    tree_adj[j].push_back(i);
  }
  std::vector<int> parent(m, -1), depth(m, 0);
  {
    std::vector<bool> seen(m, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree_adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = x;
          depth[y] = depth[x] + 1;
          stack.push_back(y);
        }
      }
    }
  }

  std::vector<std::vector<bool>> in_subtree(n, std::vector<bool>(m, false));
  for (int v = 0; v < n; ++v) {
    for (int i : ct.vertex_subtree[v]) in_subtree[v][i] = true;
  }
  // Closest node of each subtree to the root; unique because subtrees are
  // connected.
  std::vector<int> nearest(n);
  for (int v = 0; v < n; ++v) {
    int best = ct.vertex_subtree[v].front();
    for (int i : ct.vertex_subtree[v]) {
      if (depth[i] < depth[best]) best = i;
    }
    nearest[v] = best;
  }
  std::vector<std::vector<int>> rootward_path(n);
  for (int v = 0; v < n; ++v) {
    for (int x = nearest[v]; x != -1; x = parent[x]) rootward_path[v].push_back(x);
  }

  auto meets = [&](int u, int v) {
    for (int node : rootward_path[u]) {
      if (in_subtree[v][node]) return true;
    }
    return false;
  };
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool uv = meets(u, v);
      bool vu = meets(v, u);
      if (uv && vu) {
        // Mutually blocking pair; the tie-break orders it.
        if (options.reverse_tie_break) below[v][u] = true;
        else below[u][v] = true;
      } else if (uv) {
        below[u][v] = true;
      } else if (vu) {
        below[v][u] = true;
      }
    }
  }

  std::vector<int> successor(n, -1);
  for (int u = 0; u < n; ++u) {
    std::vector<int> ups;
    for (int v = 0; v < n; ++v) {
      if (v != u && below[u][v]) ups.push_back(v);
    }
    for (int v : ups) {
      bool minimal = true;
      for (int w : ups) {
        if (w != v && below[w][v]) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        successor[u] = v;
        break;  // the up-set is a chain, so the minimal element is unique
      }
    }
  }

  TreeOrder t = TreeOrder::from_successors(std::move(successor));
  LefthandedCheck check = verify_lefthanded(g, t);
  if (!check.ok()) {
    throw std::logic_error("constructed tree order failed verification");
  }
  return t;
}

namespace {

void require_vertex(const TreeOrder& t, int v) {
  if (v < 0 || v >= t.size()) {
    throw std::invalid_argument("unknown vertex index " + std::to_string(v));
  }
}

}  // namespace

LefthandedCheck verify_lefthanded(const LabeledGraph& g, const TreeOrder& t) {
  if (t.size() != g.vertex_count()) {
    throw std::invalid_argument("tree order size does not match the graph");
  }
  if (t.has_cycle()) {
    return {LefthandedCheck::Kind::cycle, {t.cycle_vertex()}};
  }
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v && !t.leq(u, v) && !t.leq(v, u)) {
        return {LefthandedCheck::Kind::incomparable_edge, {u, v}};
      }
    }
  }
  // Condition 2 along successor chains: the vertices strictly between w and
  // an upper neighbor v are exactly the chain elements in between.
  for (int w = 0; w < n; ++w) {
    for (int v : g.neighbors(w)) {
      if (!t.less(w, v)) continue;
      for (int u = t.successor(w); u != v; u = t.successor(u)) {
        if (!g.adjacent(u, v)) {
          return {LefthandedCheck::Kind::betweenness, {w, u, v}};
        }
      }
    }
  }
  return {};
}

std::vector<int> down_set(const LabeledGraph& g, const TreeOrder& t, int v) {
  require_vertex(t, v);
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (t.less(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<int> down_neighbors(const LabeledGraph& g, const TreeOrder& t,
                                int v) {
  require_vertex(t, v);
  std::vector<int> out;
  for (int u : g.neighbors(v)) {
    if (t.less(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<int> down_nonneighbors(const LabeledGraph& g, const TreeOrder& t,
                                   int v) {
  require_vertex(t, v);
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (t.less(u, v) && !g.adjacent(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<int> maximal_elements(const TreeOrder& t,
                                  const std::vector<int>& u) {
  for (int v : u) require_vertex(t, v);
  std::vector<int> out;
  for (int x : u) {
    bool maximal = true;
    for (int w : u) {
      if (t.less(x, w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EliminationOrdering linear_extension(const TreeOrder& t) {
  if (t.has_cycle()) {
    throw std::invalid_argument("cycle in successor map");
  }
  const int n = t.size();
  std::vector<int> pending(n, 0);  // direct predecessors not yet placed
  for (int v = 0; v < n; ++v) {
    if (t.successor(v) != -1) ++pending[t.successor(v)];
  }
  std::vector<bool> placed(n, false);
  EliminationOrdering out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      if (!placed[v] && pending[v] == 0) layer.push_back(v);
    }
    for (int v : layer) {
      placed[v] = true;
      out.push_back(v);
    }
    for (int v : layer) {
      if (t.successor(v) != -1) --pending[t.successor(v)];
    }
  }
  return out;
}

}  // namespace lll

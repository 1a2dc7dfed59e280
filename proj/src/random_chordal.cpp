#include "lll/random_chordal.hpp"

#include <random>
#include <stdexcept>

namespace lll {

LabeledGraph random_chordal(int n, std::uint64_t seed,
                            const LabelMode& labels) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (!labels.uniform && labels.max_denominator < 1) {
    throw std::invalid_argument("max_denominator must be >= 1");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::uint64_t bound) -> std::uint64_t {
    return bound == 0 ? 0 : rng() % bound;
  };

  std::vector<LabeledGraph::VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<int>> cliques;
  for (int v = 0; v < n; ++v) {
    Rational label;
    if (labels.uniform) {
      label = *labels.uniform;
    } else {
      long den = 1 + static_cast<long>(draw(labels.max_denominator));
      long num = static_cast<long>(draw(den + 1));
      label = make_rational(num, den);
    }
    vertices.push_back({"v" + std::to_string(v), std::move(label)});
    if (v == 0) {
      cliques.push_back({0});
      continue;
    }
    const std::vector<int>& base = cliques[draw(cliques.size())];
    std::vector<int> attach;
    for (int u : base) {
      if (rng() & 1) attach.push_back(u);
    }
    for (int u : attach) {
      edges.emplace_back(vertices[u].name, vertices[v].name);
    }
    attach.push_back(v);
    cliques.push_back(std::move(attach));
  }
  return LabeledGraph(std::move(vertices), edges);
}

}  // namespace lll

#include "lll/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lll/errors.hpp"

namespace lll {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::iscntrl(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

LabeledGraph::LabeledGraph(
    std::vector<VertexSpec> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  names_.reserve(vertices.size());
  labels_.reserve(vertices.size());
  std::map<std::string, int> index;
  for (auto& v : vertices) {
    if (!valid_name(v.name)) {
      throw ValidationError("invalid vertex name '" + v.name + "'");
    }
    if (!index.emplace(v.name, static_cast<int>(names_.size())).second) {
      throw ValidationError("duplicate vertex " + v.name);
    }
    if (v.label < 0 || v.label > 1) {
      throw ValidationError("label out of range " + v.name);
    }
    names_.push_back(std::move(v.name));
    labels_.push_back(std::move(v.label));
  }
  adjacency_.assign(names_.size(), {});
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw ValidationError("unknown endpoint " + a);
    if (ib == index.end()) throw ValidationError("unknown endpoint " + b);
    if (ia->second == ib->second) {
      throw ValidationError("self-loop rejected " + a);
    }
    adjacency_[ia->second].push_back(ib->second);
    adjacency_[ib->second].push_back(ia->second);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += static_cast<int>(nbrs.size());
  }
  edge_count_ /= 2;
}

std::optional<int> LabeledGraph::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool LabeledGraph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool LabeledGraph::is_independent(const std::vector<int>& s) const {
  for (int v : s) {
    if (v < 0 || v >= vertex_count()) {
      throw std::invalid_argument("unknown vertex index " + std::to_string(v));
    }
  }
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

LabeledGraph LabeledGraph::with_uniform_label(const Rational& p) const {
  return with_labels(std::vector<Rational>(names_.size(), p));
}

LabeledGraph LabeledGraph::with_labels(std::vector<Rational> labels) const {
  if (labels.size() != names_.size()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  LabeledGraph out = *this;
  for (size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] > 1) {
      throw ValidationError("label out of range " + names_[v]);
    }
  }
  out.labels_ = std::move(labels);
  return out;
}

namespace {

using nlohmann::json;

LabeledGraph parse_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ParseError("expected an object with 'vertices' and 'edges'");
  }
  std::vector<LabeledGraph::VertexSpec> vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_object() || !v.contains("name") || !v.contains("p")) {
      throw ParseError("vertex entries need 'name' and 'p'");
    }
    if (!v.at("name").is_string() || !v.at("p").is_string()) {
      throw ParseError("vertex 'name' and 'p' must be strings"
                       " (labels are exact rationals, not JSON numbers)");
    }
    std::string name = v.at("name").get<std::string>();
    Rational label;
    try {
      label = parse_rational(v.at("p").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " for vertex " + name);
    }
    vertices.push_back({std::move(name), std::move(label)});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      throw ParseError("edges must be [name, name] pairs");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return LabeledGraph(std::move(vertices), edges);
}

LabeledGraph parse_edgelist(std::istream& in) {
  std::vector<LabeledGraph::VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertex") {
      if (tokens.size() != 3) {
        throw ParseError("expected 'vertex <name> <p>'", lineno);
      }
      try {
        vertices.push_back({tokens[1], parse_rational(tokens[2])});
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
      }
    } else if (tokens.size() == 2) {
      edges.emplace_back(tokens[0], tokens[1]);
    } else {
      throw ParseError("expected 'vertex <name> <p>' or '<name> <name>'",
                       lineno);
    }
  }
  return LabeledGraph(std::move(vertices), edges);
}

}  // namespace

LabeledGraph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::json ? parse_json(in) : parse_edgelist(in);
}

LabeledGraph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

std::string serialize_graph(const LabeledGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    json doc;
    doc["vertices"] = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
      doc["vertices"].push_back(
          {{"name", g.name_of(v)}, {"p", to_fraction_string(g.label(v))}});
    }
    doc["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) {
      doc["edges"].push_back({g.name_of(u), g.name_of(v)});
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.name_of(v) << " " << to_fraction_string(g.label(v))
        << "\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << g.name_of(u) << " " << g.name_of(v) << "\n";
  }
  return out.str();
}

}  // namespace lll

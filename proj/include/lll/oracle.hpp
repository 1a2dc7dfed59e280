#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lll/graph.hpp"
#include "lll/tree_order.hpp"

namespace lll {

// The brute-force oracle enumerates subsets exhaustively and exists for
// cross-validating the polynomial-time checker on small graphs, not for
// scale.
inline constexpr int kDefaultOracleCap = 20;
// Subsets are carried in 32-bit masks.
inline constexpr int kOracleHardCap = 32;

using VertexMask = std::uint32_t;

VertexMask mask_of(const std::vector<int>& vertices);
std::vector<int> mask_vertices(VertexMask m);

// All independent sets, ordered by size and then lexicographically by the
// sorted index sequence. Throws CapExceededError when vertex_count > cap.
std::vector<VertexMask> independent_sets(const LabeledGraph& g,
                                         int cap = kDefaultOracleCap);

// sigma(S): alternating sum over the independent supersets of S, by direct
// enumeration. Zero when S is dependent (the sum is empty).
Rational sigma(const LabeledGraph& g, VertexMask s,
               int cap = kDefaultOracleCap);

// Second computation path: sigma(S) = prod_{v in S} p_v * B(V minus the
// closed neighborhood of S). Requires S independent; must agree exactly with
// sigma().
Rational sigma_via_bfunc(const LabeledGraph& g, VertexMask s,
                         int cap = kDefaultOracleCap);

// B(S): signed independence polynomial of the subgraph induced on S,
// sum over independent I within S of (-1)^|I| prod p_v.
Rational bfunc(const LabeledGraph& g, VertexMask s,
               int cap = kDefaultOracleCap);

struct ShearerReport {
  std::vector<VertexMask> sets;  // independent sets, canonical order
  std::vector<Rational> sigma;   // parallel to sets
  Rational sigma_empty;
  Rational min_sigma;
  bool in_family = false;  // min_sigma >= 0 and sigma_empty > 0
  std::optional<VertexMask> witness;  // first set with sigma < 0

  const Rational& sigma_of(VertexMask s) const;  // 0 for dependent sets
};

// Exhaustive Shearer criterion. The per-set sums are independent and run in
// parallel; results are written by slot, so the report is deterministic
// regardless of scheduling. Internally asserts the sum identity
// (sum of sigma over all independent sets = 1) and spot instances of
// B(S) = sum of sigma over independent subsets of the complement.
ShearerReport shearer_check(const LabeledGraph& g, int cap = kDefaultOracleCap);

// Single-threaded reference for the same report, computed by the opposite
// loop nesting: each independent set scatters its signed product onto all of
// its subsets. Kept for tests and the benchmark.
ShearerReport shearer_check_serial(const LabeledGraph& g,
                                   int cap = kDefaultOracleCap);

// The tight assignment x_v = p_v B(F_v) / B(D_v) from oracle B values.
// Throws std::domain_error when some B(D_v) = 0 (then sigma(empty) = 0 and
// the graph sits on the boundary).
std::vector<Rational> canonical_assignment(const LabeledGraph& g,
                                           const TreeOrder& t,
                                           int cap = kDefaultOracleCap);

}  // namespace lll

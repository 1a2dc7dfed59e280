#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lll/graph.hpp"
#include "lll/oracle.hpp"
#include "lll/tree_order.hpp"

namespace lll {

struct CheckReport {
  bool in_family = false;
  EliminationOrdering order;  // linear extension used by the recursion
  // x[v] is set for every vertex processed before the first failure; when
  // in_family, every x[v] is set and lies in [0, 1).
  std::vector<std::optional<Rational>> x;
  // prod(1 - x_v), only when in_family; always > 0 then.
  std::optional<Rational> bound;
  // First processed vertex with x >= 1.
  std::optional<int> witness;
};

// Decides membership in Shearer's family for a labeled chordal graph by the
// recursion x_v = p_v / prod_{u in N_v} (1 - x_u) along a linear extension
// of the lefthanded order t, halting at the first x outside [0, 1). The
// boundary x = 1 counts as out. Exact arithmetic throughout. Throws
// ValidationError when t does not make g lefthanded.
CheckReport check_membership(const LabeledGraph& g, const TreeOrder& t);

struct FloatCheckReport {
  bool in_family = false;
  EliminationOrdering order;
  std::vector<double> x;  // NaN for unprocessed vertices
  double bound = 0.0;
  std::optional<int> witness;
  bool exact_rerun = false;  // a near-boundary x forced the exact path
};

// Double-precision fast path for large graphs. Any x within
// kFloatBoundaryGuard of 1 makes the verdict untrustworthy, so the exact
// recursion is re-run and its verdict reported.
inline constexpr double kFloatBoundaryGuard = 1e-12;
FloatCheckReport check_membership_float(const LabeledGraph& g,
                                        const TreeOrder& t);

struct CrosscheckReport {
  bool ok = false;
  std::vector<std::string> mismatches;
};

// Exact agreement of the recursion with the brute-force oracle: the bound
// equals sigma(empty), x equals the canonical assignment, and
// p_v = x_v * prod_{u in N_v} (1 - x_u) holds for every vertex. Requires an
// in-family graph within the oracle cap.
CrosscheckReport bound_crosscheck(const LabeledGraph& g, const TreeOrder& t,
                                  int cap = kDefaultOracleCap);

}  // namespace lll

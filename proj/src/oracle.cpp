#include "lll/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "lll/errors.hpp"

namespace lll {

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kOracleHardCap) {
      throw std::invalid_argument("vertex index out of mask range");
    }
    m |= VertexMask{1} << v;
  }
  return m;
}

std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

namespace {

void require_within_cap(const LabeledGraph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("oracle size cap exceeded");
  }
  if (g.vertex_count() > kOracleHardCap) {
    throw CapExceededError("oracle supports at most 32 vertices");
  }
}

std::vector<VertexMask> neighbor_masks(const LabeledGraph& g) {
  std::vector<VertexMask> nbr(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int u : g.neighbors(v)) nbr[v] |= VertexMask{1} << u;
  }
  return nbr;
}

bool mask_independent(VertexMask s, const std::vector<VertexMask>& nbr) {
  for (VertexMask m = s; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (nbr[v] & s) return false;
  }
  return true;
}

void require_subset_of_vertices(const LabeledGraph& g, VertexMask s) {
  if (g.vertex_count() < kOracleHardCap &&
      (s >> g.vertex_count()) != 0) {
    throw std::invalid_argument("set mentions unknown vertices");
  }
}

// Ordering by size, then lexicographic on the sorted index sequences.
bool canonical_mask_less(VertexMask a, VertexMask b) {
  int ca = std::popcount(a);
  int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  while (a && b) {
    int va = std::countr_zero(a);
    int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Signed sum over the independent subsets T of `allowed` (kept independent
// jointly with `base_mask`) of sign * prod(labels over T), times `prefix`.
// Enumeration is a straight include/exclude recursion over the allowed
// vertices in ascending index order.
struct SubsetSum {
  const std::vector<Rational>& labels;
  const std::vector<VertexMask>& nbr;
  std::vector<int> allowed;
  Rational total = 0;

  void run(VertexMask base_mask, const Rational& prefix) {
    recurse(0, base_mask, prefix, false);
  }

  void recurse(size_t i, VertexMask chosen, const Rational& prod,
               bool negate) {
    if (i == allowed.size()) {
      if (negate) total -= prod;
      else total += prod;
      return;
    }
    recurse(i + 1, chosen, prod, negate);
    int v = allowed[i];
    if ((nbr[v] & chosen) == 0) {
      recurse(i + 1, chosen | (VertexMask{1} << v), prod * labels[v], !negate);
    }
  }
};

}  // namespace

std::vector<VertexMask> independent_sets(const LabeledGraph& g, int cap) {
  require_within_cap(g, cap);
  const int n = g.vertex_count();
  const auto nbr = neighbor_masks(g);
  std::vector<VertexMask> out;
  const VertexMask limit =
      n >= kOracleHardCap ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  for (VertexMask m = 0;; ++m) {
    if (mask_independent(m, nbr)) out.push_back(m);
    if (m == limit) break;
  }
  std::sort(out.begin(), out.end(), canonical_mask_less);
  return out;
}

Rational sigma(const LabeledGraph& g, VertexMask s, int cap) {
  require_within_cap(g, cap);
  require_subset_of_vertices(g, s);
  const auto nbr = neighbor_masks(g);
  if (!mask_independent(s, nbr)) return 0;

  Rational base = 1;
  VertexMask closed = s;
  for (VertexMask m = s; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    base *= g.label(v);
    closed |= nbr[v];
  }
  SubsetSum sum{g.labels(), nbr, {}, 0};
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((closed & (VertexMask{1} << v)) == 0) sum.allowed.push_back(v);
  }
  sum.run(s, base);
  return sum.total;
}

Rational bfunc(const LabeledGraph& g, VertexMask s, int cap) {
  require_within_cap(g, cap);
  require_subset_of_vertices(g, s);
  const auto nbr = neighbor_masks(g);
  SubsetSum sum{g.labels(), nbr, mask_vertices(s), 0};
  sum.run(0, 1);
  return sum.total;
}

Rational sigma_via_bfunc(const LabeledGraph& g, VertexMask s, int cap) {
  require_within_cap(g, cap);
  require_subset_of_vertices(g, s);
  const auto nbr = neighbor_masks(g);
  if (!mask_independent(s, nbr)) {
    throw std::invalid_argument("sigma_via_bfunc needs an independent set");
  }
  Rational prefix = 1;
  VertexMask closed = s;
  for (VertexMask m = s; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    prefix *= g.label(v);
    closed |= nbr[v];
  }
  const int n = g.vertex_count();
  const VertexMask all =
      n >= kOracleHardCap ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  return prefix * bfunc(g, all & ~closed, cap);
}

const Rational& ShearerReport::sigma_of(VertexMask s) const {
  static const Rational zero = 0;
  auto it = std::lower_bound(sets.begin(), sets.end(), s, canonical_mask_less);
  if (it == sets.end() || *it != s) return zero;
  return sigma[it - sets.begin()];
}

namespace {

ShearerReport finalize_report(const LabeledGraph& g,
                              std::vector<VertexMask> sets,
                              std::vector<Rational> values, int cap) {
  ShearerReport rep;
  rep.sets = std::move(sets);
  rep.sigma = std::move(values);
  rep.sigma_empty = rep.sigma.front();  // the empty set sorts first
  rep.min_sigma = rep.sigma.front();
  for (size_t i = 0; i < rep.sigma.size(); ++i) {
    if (rep.sigma[i] < rep.min_sigma) rep.min_sigma = rep.sigma[i];
    if (!rep.witness && rep.sigma[i] < 0) rep.witness = rep.sets[i];
  }
  rep.in_family = rep.min_sigma >= 0 && rep.sigma_empty > 0;

  // Internal identity assertions: these hold for every labeled graph, so a
  // failure means the oracle itself is broken.
  Rational total = 0;
  for (const Rational& v : rep.sigma) total += v;
  if (total != 1) {
    throw std::logic_error("oracle identity failed: sigma does not sum to 1");
  }
  const int n = g.vertex_count();
  const VertexMask all =
      n >= kOracleHardCap ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  if (n > 0 && bfunc(g, all, cap) != rep.sigma_empty) {
    throw std::logic_error("oracle identity failed: B(V) != sigma(empty)");
  }
  for (int v = 0; v < n; ++v) {
    Rational lhs = 1 - g.label(v);
    Rational rhs = 0;
    const VertexMask bit = VertexMask{1} << v;
    for (size_t i = 0; i < rep.sets.size(); ++i) {
      if ((rep.sets[i] & bit) == 0) rhs += rep.sigma[i];
    }
    if (lhs != rhs) {
      throw std::logic_error(
          "oracle identity failed: B({v}) != sum of sigma off v");
    }
  }
  return rep;
}

}  // namespace

ShearerReport shearer_check(const LabeledGraph& g, int cap) {
  require_within_cap(g, cap);
  std::vector<VertexMask> sets = independent_sets(g, cap);
  std::unordered_map<VertexMask, size_t> slot;
  slot.reserve(sets.size());
  for (size_t i = 0; i < sets.size(); ++i) slot.emplace(sets[i], i);

  // Each independent set scatters its signed product onto its subsets.
  // Threads accumulate into private arrays merged at the end; the merge
  // order is schedule-dependent but exact addition makes the sums identical
  // regardless.
  std::vector<Rational> values(sets.size(), Rational(0));
  const std::int64_t count = static_cast<std::int64_t>(sets.size());
#pragma omp parallel
  {
    std::vector<Rational> local(sets.size(), Rational(0));
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const VertexMask full = sets[i];
      Rational prod = 1;
      for (VertexMask m = full; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        prod *= g.label(v);
      }
      const int bits = std::popcount(full);
      VertexMask sub = full;
      while (true) {
        if ((bits - std::popcount(sub)) % 2 == 0) {
          local[slot.at(sub)] += prod;
        } else {
          local[slot.at(sub)] -= prod;
        }
        if (sub == 0) break;
        sub = (sub - 1) & full;
      }
    }
#pragma omp critical
    for (size_t j = 0; j < values.size(); ++j) values[j] += local[j];
  }
  return finalize_report(g, std::move(sets), std::move(values), cap);
}

ShearerReport shearer_check_serial(const LabeledGraph& g, int cap) {
  require_within_cap(g, cap);
  std::vector<VertexMask> sets = independent_sets(g, cap);
  std::unordered_map<VertexMask, size_t> slot;
  slot.reserve(sets.size());
  for (size_t i = 0; i < sets.size(); ++i) slot.emplace(sets[i], i);

  std::vector<Rational> values(sets.size(), Rational(0));
  for (VertexMask full : sets) {
    Rational prod = 1;
    for (VertexMask m = full; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      prod *= g.label(v);
    }
    const int bits = std::popcount(full);
    // Every subset of an independent set is independent, so each has a slot.
    VertexMask sub = full;
    while (true) {
      if ((bits - std::popcount(sub)) % 2 == 0) {
        values[slot.at(sub)] += prod;
      } else {
        values[slot.at(sub)] -= prod;
      }
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  return finalize_report(g, std::move(sets), std::move(values), cap);
}

std::vector<Rational> canonical_assignment(const LabeledGraph& g,
                                           const TreeOrder& t, int cap) {
  require_within_cap(g, cap);
  LefthandedCheck check = verify_lefthanded(g, t);
  if (!check.ok()) {
    throw std::invalid_argument(
        "canonical assignment needs a verified lefthanded order");
  }
  const int n = g.vertex_count();
  std::vector<Rational> x(n);
  for (int v = 0; v < n; ++v) {
    VertexMask d = mask_of(down_set(g, t, v));
    VertexMask nb = mask_of(down_neighbors(g, t, v));
    Rational bd = bfunc(g, d, cap);
    if (bd == 0) {
      throw std::domain_error("degenerate: sigma(empty) = 0");
    }
    x[v] = g.label(v) * bfunc(g, d & ~nb, cap) / bd;
  }
  return x;
}

}  // namespace lll

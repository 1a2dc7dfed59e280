#include "lll/checker.hpp"

#include <cmath>
#include <limits>

#include "lll/errors.hpp"

namespace lll {

CheckReport check_membership(const LabeledGraph& g, const TreeOrder& t) {
  LefthandedCheck check = verify_lefthanded(g, t);
  if (!check.ok()) {
    throw ValidationError("tree order does not make the graph lefthanded");
  }
  CheckReport report;
  report.order = linear_extension(t);
  report.x.assign(g.vertex_count(), std::nullopt);
  for (int v : report.order) {
    // Down-neighbors precede v in every linear extension, and every
    // processed x is < 1, so the divisor is positive.
    Rational divisor = 1;
    for (int u : down_neighbors(g, t, v)) divisor *= 1 - *report.x[u];
    Rational xv = g.label(v) / divisor;
    report.x[v] = xv;
    if (xv >= 1) {
      report.in_family = false;
      report.witness = v;
      return report;
    }
  }
  report.in_family = true;
  Rational bound = 1;
  for (const auto& xv : report.x) bound *= 1 - *xv;
  report.bound = std::move(bound);
  return report;
}

FloatCheckReport check_membership_float(const LabeledGraph& g,
                                        const TreeOrder& t) {
  LefthandedCheck check = verify_lefthanded(g, t);
  if (!check.ok()) {
    throw ValidationError("tree order does not make the graph lefthanded");
  }
  FloatCheckReport report;
  report.order = linear_extension(t);
  report.x.assign(g.vertex_count(), std::numeric_limits<double>::quiet_NaN());

  bool near_boundary = false;
  for (int v : report.order) {
    double divisor = 1.0;
    for (int u : down_neighbors(g, t, v)) divisor *= 1.0 - report.x[u];
    double xv = g.label(v).get_d() / divisor;
    report.x[v] = xv;
    if (std::abs(xv - 1.0) < kFloatBoundaryGuard) {
      near_boundary = true;
      break;
    }
    if (xv >= 1.0) {
      report.in_family = false;
      report.witness = v;
      return report;
    }
  }
  if (near_boundary) {
    CheckReport exact = check_membership(g, t);
    report.exact_rerun = true;
    report.in_family = exact.in_family;
    report.witness = exact.witness;
    for (int v = 0; v < g.vertex_count(); ++v) {
      report.x[v] = exact.x[v] ? exact.x[v]->get_d()
                               : std::numeric_limits<double>::quiet_NaN();
    }
    report.bound = exact.bound ? exact.bound->get_d() : 0.0;
    return report;
  }
  report.in_family = true;
  report.bound = 1.0;
  for (double xv : report.x) report.bound *= 1.0 - xv;
  return report;
}

CrosscheckReport bound_crosscheck(const LabeledGraph& g, const TreeOrder& t,
                                  int cap) {
  CheckReport rep = check_membership(g, t);
  if (!rep.in_family) {
    throw std::invalid_argument("bound_crosscheck needs an in-family graph");
  }
  CrosscheckReport out;
  Rational sigma_empty = sigma(g, 0, cap);
  if (*rep.bound != sigma_empty) {
    out.mismatches.push_back("bound " + to_fraction_string(*rep.bound) +
                             " != sigma(empty) " +
                             to_fraction_string(sigma_empty));
  }
  std::vector<Rational> canonical = canonical_assignment(g, t, cap);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (*rep.x[v] != canonical[v]) {
      out.mismatches.push_back(
          "x_" + g.name_of(v) + " " + to_fraction_string(*rep.x[v]) +
          " != canonical " + to_fraction_string(canonical[v]));
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational rhs = *rep.x[v];
    for (int u : down_neighbors(g, t, v)) rhs *= 1 - *rep.x[u];
    if (rhs != g.label(v)) {
      out.mismatches.push_back("p_" + g.name_of(v) + " != x_" + g.name_of(v) +
                               " * prod(1 - x_u)");
    }
  }
  out.ok = out.mismatches.empty();
  return out;
}

}  // namespace lll

#include "lll/threshold.hpp"

#include <stdexcept>

#include "lll/errors.hpp"

namespace lll {

ThresholdReport threshold_bisect(const LabeledGraph& g, const TreeOrder& t,
                                 const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (g.vertex_count() == 0) {
    throw std::invalid_argument(
        "empty graph is in the family for every label; no threshold");
  }
  auto probe = [&](const Rational& p) {
    return check_membership(g.with_uniform_label(p), t);
  };

  ThresholdReport report;
  report.lo = 0;
  report.hi = 1;
  CheckReport at_hi = probe(report.hi);
  if (at_hi.in_family) {
    throw std::logic_error("membership held at uniform label 1");
  }
  report.critical_vertex = *at_hi.witness;

  const Rational target = tol / static_cast<long>(kBracketRefine);
  while (report.hi - report.lo > target) {
    Rational mid = (report.lo + report.hi) / 2;
    CheckReport at_mid = probe(mid);
    if (at_mid.in_family) {
      report.lo = std::move(mid);
    } else {
      report.hi = std::move(mid);
      report.critical_vertex = *at_mid.witness;
    }
  }
  return report;
}

std::vector<RationalFunction> symbolic_assignment(const LabeledGraph& g,
                                                  const TreeOrder& t) {
  LefthandedCheck check = verify_lefthanded(g, t);
  if (!check.ok()) {
    throw ValidationError("tree order does not make the graph lefthanded");
  }
  std::vector<RationalFunction> x(g.vertex_count());
  for (int v : linear_extension(t)) {
    IntPolynomial num = IntPolynomial::variable();
    IntPolynomial den = IntPolynomial::constant(1);
    for (int u : down_neighbors(g, t, v)) {
      IntPolynomial one_minus = x[u].den() - x[u].num();
      if (one_minus.is_zero()) {
        throw std::domain_error("degenerate recursion: x_u identically 1");
      }
      num = num * x[u].den();
      den = den * one_minus;
    }
    x[v] = RationalFunction(std::move(num), std::move(den));
  }
  return x;
}

CriticalPolynomial critical_polynomial(const LabeledGraph& g,
                                       const TreeOrder& t,
                                       const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  const int n = g.vertex_count();
  if (n == 0) {
    throw std::invalid_argument("empty graph has no constraint polynomials");
  }
  std::vector<RationalFunction> x = symbolic_assignment(g, t);

  struct Constraint {
    IntPolynomial poly;
    bool root_at_one = false;
    bool has_root = false;
    Rational lo, hi;
  };
  std::vector<Constraint> constraints(n);
  std::exception_ptr scan_error;
  // The per-vertex scans are independent once the recursion is done.
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) {
    try {
      Constraint c;
      c.poly = (x[v].den() - x[v].num()).primitive_part();
      if (c.poly.eval(1) == 0) {
        // x_v reaches 1 exactly at p = 1; any interior root still wins below.
        auto bracket = smallest_root(c.poly, 0, 1 - tol / 2, tol);
        if (bracket) {
          c.has_root = true;
          c.lo = bracket->first;
          c.hi = bracket->second;
        } else {
          c.root_at_one = true;
          c.lo = 1 - tol;
          c.hi = 1;
        }
      } else {
        auto bracket = smallest_root(c.poly, 0, 1, tol);
        if (bracket) {
          c.has_root = true;
          c.lo = bracket->first;
          c.hi = bracket->second;
        }
      }
      constraints[v] = std::move(c);
    } catch (...) {
#pragma omp critical
      if (!scan_error) scan_error = std::current_exception();
    }
  }
  if (scan_error) std::rethrow_exception(scan_error);

  int best = -1;
  for (int v = 0; v < n; ++v) {
    const Constraint& c = constraints[v];
    if (!c.has_root && !c.root_at_one) continue;
    if (best == -1) {
      best = v;
      continue;
    }
    const Constraint& b = constraints[best];
    // Interior roots beat a root pinned at 1; among interior roots the
    // lower bracket wins, ties by index.
    bool c_interior = c.has_root;
    bool b_interior = b.has_root;
    if (c_interior != b_interior) {
      if (c_interior) best = v;
    } else if (c_interior && c.lo < b.lo) {
      best = v;
    }
  }
  if (best == -1) {
    throw std::logic_error("no binding constraint found");
  }
  return {best, constraints[best].poly, constraints[best].lo,
          constraints[best].hi};
}

}  // namespace lll

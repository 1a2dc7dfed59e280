#pragma once

#include <vector>

#include "lll/checker.hpp"
#include "lll/graph.hpp"
#include "lll/polynomial.hpp"
#include "lll/tree_order.hpp"

namespace lll {

struct ThresholdReport {
  // Membership holds with uniform label lo and fails with uniform label hi;
  // hi - lo <= tol.
  Rational lo;
  Rational hi;
  // The recursion's failing vertex at hi.
  int critical_vertex = -1;
};

// Locates the uniform-label membership threshold by bisection on p in [0, 1]
// with exact rational midpoints; valid because membership is monotone
// decreasing in the labels. Stored labels are ignored. The bracket is
// narrowed to tol/kBracketRefine (still <= tol) so it sits strictly inside
// any tol-wide window containing the threshold. Throws on tol <= 0 and on
// the empty graph, which is in the family for every p.
ThresholdReport threshold_bisect(const LabeledGraph& g, const TreeOrder& t,
                                 const Rational& tol);

// Runs the membership recursion with the uniform label left symbolic:
// x_v(p) = p * prod(den_u) / prod(den_u - num_u) over the down-neighbors,
// reduced to lowest terms after every step. Stored labels are ignored.
// Throws std::domain_error if some den_u - num_u is identically zero.
std::vector<RationalFunction> symbolic_assignment(const LabeledGraph& g,
                                                  const TreeOrder& t);

struct CriticalPolynomial {
  int vertex = -1;        // vertex whose constraint binds first
  IntPolynomial poly;     // primitive part of den_v - num_v
  Rational bracket_lo;    // root bracket for the smallest root in (0, 1]
  Rational bracket_hi;
};

// Constraint polynomials c_v = primitive(den_v - num_v) vanish where x_v(p)
// reaches 1; the vertex whose c_v has the smallest root in (0, 1] is the
// binding constraint and its root is the membership threshold. All n
// polynomials are scanned and the minimizer reported; ties go to the
// smaller vertex index. A root at exactly 1 is reported as the bracket
// [1 - tol, 1].
CriticalPolynomial critical_polynomial(const LabeledGraph& g,
                                       const TreeOrder& t,
                                       const Rational& tol = Rational(1,
                                                                      1000000));

}  // namespace lll

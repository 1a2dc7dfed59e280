#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lll/rational.hpp"

namespace lll {

// Univariate polynomial with arbitrary-precision integer coefficients.
// coefficients()[i] is the coefficient of x^i. The zero polynomial stores no
// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<Integer> ascending_coefficients);

  static IntPolynomial constant(Integer c);
  static IntPolynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& leading_coefficient() const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& rhs) const = default;

  Rational eval(const Rational& x) const;

  // gcd of the coefficients, always >= 0; 0 for the zero polynomial.
  Integer content() const;

  // Content divided out and the sign fixed so the lowest-degree nonzero
  // coefficient is positive. Throws std::invalid_argument on the zero
  // polynomial.
  IntPolynomial primitive_part() const;

  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

  // Exact quotient; throws std::logic_error if b does not divide a in Z[x].
  static IntPolynomial divide_exact(const IntPolynomial& a,
                                    const IntPolynomial& b);

  std::string to_string(const std::string& var = "p") const;

 private:
  std::vector<Integer> coeffs_;
  void trim();
};

// Quotient of integer polynomials, reduced so that gcd(num, den) is constant
// and den's lowest-degree nonzero coefficient is positive.
class RationalFunction {
 public:
  RationalFunction();  // 0/1
  RationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  // Requires den(x) != 0.
  Rational eval(const Rational& x) const;

  bool operator==(const RationalFunction& rhs) const = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

// Returned brackets are narrowed to tol/kBracketRefine so that a bracket
// around a root sits strictly inside any tol-wide window containing that
// root, instead of merely having width <= tol.
inline constexpr unsigned kBracketRefine = 256;

// Smallest sign-change bracket of width <= tol inside (lo, hi): the interval
// is split into grid_cells equal cells, the leftmost sign change is located,
// and the cell is narrowed by bisection. Returns nullopt when no sign change
// exists at this refinement; roots of even multiplicity produce no sign
// change and are invisible. Throws std::invalid_argument when lo >= hi,
// tol <= 0, or a(lo) = 0 or a(hi) = 0.
std::optional<std::pair<Rational, Rational>> smallest_root(
    const IntPolynomial& a, const Rational& lo, const Rational& hi,
    const Rational& tol, int grid_cells = 1024);

}  // namespace lll

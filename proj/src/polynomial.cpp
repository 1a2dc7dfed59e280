#include "lll/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lll {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Integer c) {
  std::vector<Integer> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::variable() {
  return IntPolynomial({Integer(0), Integer(1)});
}

const Integer& IntPolynomial::leading_coefficient() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Integer> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Integer> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] -= rhs.coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

Integer IntPolynomial::content() const {
  Integer g(0);
  for (const Integer& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

namespace {

// Flips the sign so the lowest-degree nonzero coefficient is positive.
IntPolynomial normalized_sign(const IntPolynomial& a) {
  for (const Integer& c : a.coefficients()) {
    if (c != 0) return c > 0 ? a : -a;
  }
  return a;
}

}  // namespace

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) {
    throw std::invalid_argument("zero polynomial has no primitive part");
  }
  Integer c = content();
  std::vector<Integer> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return normalized_sign(IntPolynomial(std::move(out)));
}

namespace {

// Pseudo-remainder of a by b (b nonzero): repeatedly cancels the leading term
// of a after scaling by b's leading coefficient, so all arithmetic stays in
// Z[x].
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  const Integer& lb = b.leading_coefficient();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const Integer la = a.leading_coefficient();
    std::vector<Integer> next(a.degree() + 1);
    const auto& ac = a.coefficients();
    for (int i = 0; i <= a.degree(); ++i) next[i] = ac[i] * lb;
    const auto& bc = b.coefficients();
    for (int i = 0; i <= db; ++i) next[shift + i] -= la * bc[i];
    a = IntPolynomial(std::move(next));
  }
  return a;
}

}  // namespace

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a,
                                 const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? IntPolynomial() : normalized_sign(b);
  if (b.is_zero()) return normalized_sign(a);

  Integer content_gcd;
  mpz_gcd(content_gcd.get_mpz_t(), a.content().get_mpz_t(),
          b.content().get_mpz_t());

  IntPolynomial big = a.primitive_part();
  IntPolynomial small = b.primitive_part();
  if (big.degree() < small.degree()) std::swap(big, small);
  while (!small.is_zero()) {
    IntPolynomial rem = pseudo_remainder(big, small);
    big = std::move(small);
    small = rem.is_zero() ? IntPolynomial() : rem.primitive_part();
  }
  return IntPolynomial::constant(content_gcd) * big;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& a,
                                          const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) throw std::logic_error("polynomial division: not divisible");

  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(da - db + 1);
  const Integer& lb = b.leading_coefficient();
  const auto& bc = b.coefficients();
  for (int k = da - db; k >= 0; --k) {
    const Integer& lead = rem[k + db];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) {
      throw std::logic_error("polynomial division: not divisible");
    }
    Integer qk;
    mpz_divexact(qk.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) rem[k + i] -= qk * bc[i];
    quot[k] = std::move(qk);
  }
  for (const Integer& c : rem) {
    if (c != 0) throw std::logic_error("polynomial division: not divisible");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Integer mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RationalFunction::RationalFunction()
    : num_(), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::invalid_argument("rational function with zero denominator");
  }
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = IntPolynomial::gcd(num_, den_);
  num_ = IntPolynomial::divide_exact(num_, g);
  den_ = IntPolynomial::divide_exact(den_, g);
  for (const Integer& c : den_.coefficients()) {
    if (c != 0) {
      if (c < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      break;
    }
  }
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("rational function pole");
  return num_.eval(x) / d;
}

namespace {

// Narrows a strict sign-change bracket [l, h] (a(l), a(h) nonzero and of
// opposite sign) until h - l <= target, preserving the sign change. Exact
// rational arithmetic makes hitting a root head-on detectable and
// recoverable.
std::pair<Rational, Rational> refine_bracket(const IntPolynomial& a,
                                             Rational l, Rational h,
                                             const Rational& target) {
  int sl = sgn(a.eval(l));
  while (h - l > target) {
    Rational mid = (l + h) / 2;
    int sm = sgn(a.eval(mid));
    if (sm == 0) {
      // Root exactly at mid. Shrink symmetrically around it if the signs
      // flip there, otherwise chase the sign change into a flank.
      Rational e = (h - l) / 4;
      bool placed = false;
      for (int attempt = 0; attempt < 128 && !placed; ++attempt) {
        Rational l2 = mid - e;
        Rational h2 = mid + e;
        int sl2 = sgn(a.eval(l2));
        int sh2 = sgn(a.eval(h2));
        if (sl2 != 0 && sh2 != 0) {
          if (sl2 != sh2) {
            l = l2;
            h = h2;
            sl = sl2;
          } else if (sl2 != sl) {
            h = l2;  // sign change within [l, l2]
          } else {
            l = h2;  // sign change within [h2, h]
          }
          placed = true;
          break;
        }
        e /= 2;
      }
      if (!placed) throw std::logic_error("root isolation failed to converge");
    } else if (sm == sl) {
      l = mid;
    } else {
      h = mid;
    }
  }
  return {l, h};
}

}  // namespace

std::optional<std::pair<Rational, Rational>> smallest_root(
    const IntPolynomial& a, const Rational& lo, const Rational& hi,
    const Rational& tol, int grid_cells) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (!(lo < hi)) throw std::invalid_argument("empty root search interval");
  if (grid_cells < 1) throw std::invalid_argument("grid_cells must be >= 1");
  if (a.eval(lo) == 0 || a.eval(hi) == 0) {
    throw std::invalid_argument("root at interval endpoint");
  }

  const Rational target = tol / static_cast<long>(kBracketRefine);
  const Rational step = (hi - lo) / grid_cells;
  Rational prev = lo;
  int sprev = sgn(a.eval(lo));
  for (int i = 1; i <= grid_cells; ++i) {
    Rational t = i == grid_cells ? hi : Rational(lo + step * i);
    int s = sgn(a.eval(t));
    if (s == 0) {
      // Exact root on a grid point; bracketable only if the sign flips.
      Rational e = std::min(Rational(tol / 2), Rational(step / 2));
      bool resolved = false;
      for (int attempt = 0; attempt < 128 && !resolved; ++attempt) {
        Rational l = t - e;
        Rational h = t + e;
        int slft = sgn(a.eval(l));
        int srgt = sgn(a.eval(h));
        if (slft != 0 && srgt != 0) {
          // A crossing strictly inside the cell but before t wins.
          if (slft != sprev) return refine_bracket(a, prev, l, target);
          if (slft != srgt) return refine_bracket(a, l, h, target);
          // Even multiplicity: skip this root and keep scanning.
          prev = h;
          sprev = srgt;
          resolved = true;
          break;
        }
        e /= 2;
      }
      if (!resolved) throw std::logic_error("root isolation failed to converge");
      continue;
    }
    if (s != sprev) {
      return refine_bracket(a, prev, t, target);
    }
    prev = t;
    sprev = s;
  }
  return std::nullopt;
}

}  // namespace lll

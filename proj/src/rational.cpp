#include "lll/rational.hpp"

#include <cctype>
#include <cstring>
#include <stdexcept>

namespace lll {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("invalid rational '" + text + "'");
  };

  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) return fail();

  Rational q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Integer d(den, 10);
    if (d == 0) {
      throw std::invalid_argument("invalid rational '" + text +
                                  "': denominator must be positive");
    }
    q = Rational(Integer(num, 10), d);
    q.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string intpart = s.substr(0, dot);
    std::string fracpart = s.substr(dot + 1);
    if (intpart.empty() && fracpart.empty()) return fail();
    if (!intpart.empty() && !all_digits(intpart)) return fail();
    if (!fracpart.empty() && !all_digits(fracpart)) return fail();
    Integer num((intpart.empty() ? "0" : intpart) + fracpart, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fracpart.size());
    q = Rational(num, den);
    q.canonicalize();
  } else {
    if (!all_digits(s)) return fail();
    q = Rational(Integer(s, 10));
  }
  return negative ? Rational(-q) : q;
}

std::string to_fraction_string(const Rational& r) { return r.get_str(); }

std::string to_decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  mpf_class f(0, 512);
  mpf_set_q(f.get_mpf_t(), r.get_mpq_t());
  char* buf = nullptr;
  gmp_asprintf(&buf, "%.*Fg", significant_digits, f.get_mpf_t());
  std::string out(buf);
  void (*free_func)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_func);
  free_func(buf, std::strlen(buf) + 1);
  return out;
}

}  // namespace lll

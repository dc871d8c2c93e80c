#include "antipod/rational.hpp"

#include <cctype>

namespace antipod {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  const Integer d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  // The mpq string constructor does not canonicalize; the (num, den)
  // constructor does, so route through it.
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& value) {
  return value.str();
}

Integer rational_floor(const Rational& value) {
  Integer q = numerator(value) / denominator(value);
  // mpz division truncates toward zero; fix up negatives.
  if (q * denominator(value) != numerator(value) && value < 0) --q;
  return q;
}

Integer rational_ceil(const Rational& value) {
  return -rational_floor(-value);
}

Rational snap_to_rational(double x, const Integer& max_denominator) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("cannot snap non-finite value");
  }
  return snap_to_rational(Rational(x), max_denominator);
}

Rational snap_to_rational(const Rational& x, const Integer& max_denominator) {
  if (max_denominator < 1) {
    throw std::invalid_argument("max_denominator must be >= 1");
  }
  if (denominator(x) <= max_denominator) return x;

  // Continued-fraction convergents h/k of x until the denominator bound
  // is exceeded, then the best semiconvergent between the last two.
  Integer p = numerator(x), q = denominator(x);
  Integer h0 = 1, k0 = 0;  // h_{-1}/k_{-1}
  Integer h1, k1;          // current convergent
  {
    Integer a = p / q;
    if (a * q != p && x < 0) --a;
    h1 = a;
    k1 = 1;
    Integer r = p - a * q;
    p = q;
    q = r;
  }
  while (q != 0) {
    const Integer a = p / q;
    const Integer h2 = a * h1 + h0;
    const Integer k2 = a * k1 + k0;
    if (k2 > max_denominator) {
      // Largest t with k0 + t*k1 <= bound; the semiconvergent beats the
      // previous convergent iff t >= a/2 (standard best-approximation rule,
      // decided here by exact comparison of the two candidates).
      const Integer t = (max_denominator - k0) / k1;
      const Rational semi(h0 + t * h1, k0 + t * k1);
      const Rational conv(h1, k1);
      const Rational err_semi = abs(x - semi);
      const Rational err_conv = abs(x - conv);
      return err_semi < err_conv ? semi : conv;
    }
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
    const Integer r = p - a * q;
    p = q;
    q = r;
  }
  return Rational(h1, k1);
}

}  // namespace antipod

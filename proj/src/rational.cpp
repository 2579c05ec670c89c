#include "qmc/rational.hpp"

#include <cmath>
#include <string>

namespace qmc {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("malformed number '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw InputError("malformed number '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputError("malformed number '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt p = parse_integer(text.substr(0, slash), text);
    std::string_view qs = text.substr(slash + 1);
    if (!qs.empty() && (qs[0] == '-' || qs[0] == '+')) throw InputError("malformed number '" + std::string(text) + "'");
    BigInt q = parse_integer(qs, text);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.empty() || frac[0] == '+' || frac[0] == '-') throw InputError("malformed number '" + std::string(text) + "'");
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    BigInt whole = parse_integer(digits + frac, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rational(whole, scale);
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 bits of mantissa are exact in a 64-bit integer.
  auto m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  if (exp > 0) r *= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exp)));
  if (exp < 0) r /= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-exp)));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qmc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown for malformed user input (graph files, data files, CLI arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q" and plain decimals such as "0.25" (converted exactly).
Rational parse_rational(std::string_view text);

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Exact binary value of a finite double.
Rational from_double(double x);

BigInt binomial(long n, long k);

}  // namespace qmc

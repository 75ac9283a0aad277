// Exact integer and rational scalars shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hilbdim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that must be an integer turned out not to be.
class NonIntegral : public Error {
 public:
  using Error::Error;
};

class NonIntegralChiN : public NonIntegral {
 public:
  using NonIntegral::NonIntegral;
};

class NonIntegralDim : public NonIntegral {
 public:
  using NonIntegral::NonIntegral;
};

/// Malformed input that violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Returns q as an Integer or throws E carrying `what`.
template <class E = NonIntegral>
Integer require_integral(const Rational& q, const std::string& what) {
  if (!is_integral(q)) {
    throw E(what + " is not integral: " + q.str());
  }
  return numerator(q);
}

std::string to_string(const Integer& z);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0.
Integer binomial(long long n, long long k);

/// Ceiling of p/q for q > 0.
long long ceil_div(long long p, long long q);

}  // namespace hilbdim

#include "hilbdim/arith.hpp"

namespace hilbdim {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

long long ceil_div(long long p, long long q) {
  long long r = p / q;
  if ((p % q != 0) && ((p > 0) == (q > 0))) ++r;
  return r;
}

}  // namespace hilbdim

// Dense univariate polynomials over the rationals.
#pragma once

#include "hilbdim/arith.hpp"

#include <string>
#include <vector>

namespace hilbdim {

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// The polynomial t + shift.
  static RationalPolynomial linear(const Rational& shift);
  /// C(t + shift, k) as a polynomial in t, i.e. prod_{i=1..k} (t + shift - k + i) / k!.
  static RationalPolynomial binomial(long long shift, long long k);

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k (zero beyond the degree).
  Rational coefficient(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& t) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "7/6 t^3 + 5/2 t^2 + 7/3 t + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hilbdim

// Eagon-Northcott resolutions and Hilbert polynomials of standard determinantal
// schemes cut out by the maximal minors of a homogeneous t x (t+c-1) matrix
// representing  u: sum_i O(b_i) -> sum_j O(a_j)  on P^N.
//
// Entries are assumed generic: the codimension-c condition and the
// good-determinantal submatrix condition are not verified.
#pragma once

#include "hilbdim/arith.hpp"
#include "hilbdim/families.hpp"
#include "hilbdim/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hilbdim {

struct DegreeMatrix {
  std::vector<long long> b;  // t source twists
  std::vector<long long> a;  // t + c - 1 target twists
  long long N = 0;           // ambient projective dimension
  long long c = 1;           // expected codimension

  /// Builds a matrix with c inferred from the list lengths.
  static DegreeMatrix from_twists(std::vector<long long> b, std::vector<long long> a, long long N);

  long long t() const { return static_cast<long long>(b.size()); }
  friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;
};

class InvalidShape : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Throws InvalidShape when lengths, codimension or entry degrees are inconsistent.
void validate(const DegreeMatrix& m);

struct TwistMultiplicity {
  long long twist = 0;
  Integer multiplicity;
  friend bool operator==(const TwistMultiplicity&, const TwistMultiplicity&) = default;
};

/// C_{index} = sum O(twist)^multiplicity, twists in decreasing order.
struct ResolutionTerm {
  int index = 1;
  std::vector<TwistMultiplicity> summands;
};

/// Terms C_1 .. C_c of the resolution of O_X (C_0 = O is implicit). C_{k+1}
/// collects, over size-k multisets M of b and size-(t+k) subsets J of a,
/// twists sum(M) + sum(b) - sum(J).
std::vector<ResolutionTerm> en_resolution(const DegreeMatrix& m);

/// p(s) = C(s+N, N) + sum_k (-1)^(k+1) sum mult * C(s+twist+N, N), binomials as polynomials.
RationalPolynomial hilbert_polynomial(const DegreeMatrix& m);

/// Same alternating sum with C(x, N) = 0 for x < N. Throws InvalidArgument for s < 0.
Integer hilbert_function(const DegreeMatrix& m, long long s);

struct DegreeGenus {
  long long d = 0;
  long long g = 0;
  friend bool operator==(const DegreeGenus&, const DegreeGenus&) = default;
};

/// d = 6 lead(p), g = d + 1 - 2 [t^2]p for a cubic Hilbert polynomial.
/// Throws InvalidArgument when deg p != 3, NonIntegral when d or g is fractional.
DegreeGenus degree_genus(const RationalPolynomial& p);

/// A printed determinantal construction and the values printed alongside it.
struct DeterminantalExample {
  std::string label;
  DegreeMatrix matrix;
  FamilyDescriptor family;
  RationalPolynomial printed_polynomial;
  DegreeGenus printed_degree_genus;
  long long paired_dim = 0;  // dim H printed next to this family in the summary table
  long long listed_dim_w = 0;  // value at this example's index in the printed dim W_i list
};

std::span<const DeterminantalExample> builtin_determinantal_examples();

struct MatchReport {
  RationalPolynomial derived;   // from the resolution
  RationalPolynomial expected;  // chi(tL) of the family
  bool polynomial_match = false;
  DegreeGenus derived_degree_genus;
  bool degree_genus_match = false;
  Integer dim;
  std::optional<long long> printed_dim;  // from a matching built-in example
  bool dim_match = true;
  std::vector<std::string> notes;
  bool pass() const { return polynomial_match && degree_genus_match && dim_match; }
};

MatchReport match_family(const DegreeMatrix& m, const FamilyDescriptor& f);

}  // namespace hilbdim

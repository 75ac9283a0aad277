// Split vector bundles on P^1 and the splitting-type predicates used as
// unobstructedness hypotheses.
#pragma once

#include "hilbdim/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbdim {

/// O(a_1) + ... + O(a_r), degrees kept sorted ascending.
class SplitBundle {
 public:
  /// Throws InvalidArgument on an empty list.
  explicit SplitBundle(std::vector<long long> degrees);

  const std::vector<long long>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  long long degree() const;
  long long min_degree() const { return degrees_.front(); }
  long long max_degree() const { return degrees_.back(); }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

  std::string str() const;

 private:
  std::vector<long long> degrees_;
};

/// k-th symmetric power: all sums of k-element multicombinations of degrees.
SplitBundle sym(const SplitBundle& E, long long k);
SplitBundle twist(const SplitBundle& E, long long t);
SplitBundle tensor(const SplitBundle& E, const SplitBundle& F);
SplitBundle dual(const SplitBundle& E);

struct Cohomology {
  Integer h0;
  Integer h1;
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

Cohomology cohomology(const SplitBundle& E);

/// Degree e of E and twist b of a fibration model, solving
///   d = alpha e + b,   2g - 2 = alpha (e + b - 2) + (alpha - 2) d.
struct FibrationDegrees {
  long long e = 0;
  long long b = 0;
  friend bool operator==(const FibrationDegrees&, const FibrationDegrees&) = default;
};

/// Throws NonIntegral when (d, g, alpha) admits no integral (e, b), and
/// InvalidArgument when alpha is not 2 or 3.
FibrationDegrees derive_eb(long long d, long long g, int alpha);

/// e1/2 <= a <= e1/2 + 1 for the splitting O(a) + O(e1 - a) on a line of P^2.
bool check_scroll_p2_splitting(long long e1, long long a);

/// Splitting on the two rulings of Q must be O(ceil(e12/2)) + ... and O(ceil(e11/2)) + ...
bool check_scroll_q_splitting(long long e11, long long e12, long long a, long long b);

/// -alpha a1 - 1 <= b, with a1 replaced by a certified lower bound.
bool check_fibration_bound(int alpha, long long b, long long a1_lower);

/// Which rule produced a lower bound for the smallest splitting degree a1.
enum class A1Rule {
  cited_value,    // a1 = 1 imported from the classification literature
  small_twist,    // b <= 1 (alpha = 2) or b <= 2 (alpha = 3) forces a1 >= 0
  h1_vanishing,   // H^1(E) = H^1(X, L) = 0 forces a1 >= -1
};

/// Extra knowledge about a specific case that the rule table cannot derive.
enum class A1Hint {
  none,
  cited_a1_equals_one,
};

struct A1Bound {
  long long value = -1;
  A1Rule rule = A1Rule::h1_vanishing;
  friend bool operator==(const A1Bound&, const A1Bound&) = default;
};

A1Bound infer_a1_lower(int alpha, long long b, A1Hint hint = A1Hint::none);

std::string to_string(A1Rule rule);

}  // namespace hilbdim

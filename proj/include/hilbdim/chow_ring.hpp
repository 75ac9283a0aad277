// Graded intersection rings of the three ambient geometries:
//
//   ScrollP2  X = P(E) over P^2, generators xi (tautological) and h (line class);
//             h^3 = 0, xi^2 = e1 xi h - e2 h^2, deg(xi h^2) = 1.
//   ScrollQ   X = P(E) over the quadric Q, generators xi, h1, h2 (rulings);
//             h1^2 = h2^2 = 0, xi^2 = xi (e11 h1 + e12 h2) - e2 h1 h2, deg(xi h1 h2) = 1.
//   BundleP1  the 4-fold P = P(E) over P^1 with E = O(a1) + ... + O(a4), generators H, f;
//             f^2 = 0, H^4 = e H^3 f with e = sum(a_i), deg(H^3 f) = 1.
//             The 3-fold X is the divisor alpha H + b f; numbers on X are obtained by
//             multiplying by that divisor class before evaluating on P.
//
// All coefficients are exact integers. Normal forms keep the fibre generator to
// exponent < rank(E) and the base generators below their nilpotency order.
#pragma once

#include "hilbdim/arith.hpp"
#include "hilbdim/invariants.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hilbdim {

struct ScrollP2Preset {
  long long e1 = 0;
  long long e2 = 0;
};

struct ScrollQPreset {
  long long e11 = 0;
  long long e12 = 0;
  long long e2 = 0;
};

struct BundleP1Preset {
  std::vector<long long> a;  // splitting of E; sorted ascending by make_ring
  int alpha = 2;             // fibre degree, 2 or 3
  long long b = 0;           // X = alpha H + b f
};

using AmbientPreset = std::variant<ScrollP2Preset, ScrollQPreset, BundleP1Preset>;

/// Exponent vector; unused trailing slots stay zero.
using Monomial = std::array<int, 3>;

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

/// Mismatched rings or a product beyond the ring dimension.
class RingError : public Error {
 public:
  using Error::Error;
};

class Ring {
 public:
  enum class Kind { scroll_p2, scroll_q, bundle_p1 };

  Kind kind() const { return kind_; }
  const AmbientPreset& preset() const { return preset_; }
  int dimension() const { return dimension_; }
  int generator_count() const { return generator_count_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const Monomial& evaluation_monomial() const { return point_; }

  /// Rewrites a single monomial into normal form.
  std::map<Monomial, Integer> reduce(const Monomial& m) const;

  // For BundleP1 only: e = deg E.
  long long bundle_degree() const { return bundle_degree_; }

 private:
  friend RingHandle make_ring(const AmbientPreset& preset);
  Ring() = default;

  Kind kind_ = Kind::scroll_p2;
  AmbientPreset preset_;
  int dimension_ = 0;
  int generator_count_ = 0;
  std::vector<std::string> names_;
  Monomial point_{};
  // Exponent at which each base generator vanishes (index 0 is the fibre generator).
  std::array<int, 3> nilpotency_{};
  // fibre^rank = sum coefficient * monomial.
  int rank_ = 0;
  std::vector<std::pair<Integer, Monomial>> grothendieck_;
  long long bundle_degree_ = 0;
};

/// Builds the ring for a preset; throws InvalidArgument on a malformed preset.
RingHandle make_ring(const AmbientPreset& preset);

/// Homogeneous element of a ring in normal form.
class CycleClass {
 public:
  static CycleClass zero(RingHandle ring, int degree);
  static CycleClass unit(RingHandle ring);
  /// The i-th generator (0 = tautological class).
  static CycleClass generator(RingHandle ring, int index);
  /// Builds from arbitrary (possibly non-normal) terms of one degree.
  static CycleClass from_terms(RingHandle ring, int degree,
                               const std::map<Monomial, Integer>& terms);

  const RingHandle& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  CycleClass& operator+=(const CycleClass& o);
  CycleClass& operator-=(const CycleClass& o);
  CycleClass& operator*=(const Integer& c);
  friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
  friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
  friend CycleClass operator-(CycleClass a) { return a *= Integer(-1); }
  friend CycleClass operator*(CycleClass a, const Integer& c) { return a *= c; }
  friend CycleClass operator*(const Integer& c, CycleClass a) { return a *= c; }
  friend CycleClass operator*(const CycleClass& a, const CycleClass& b);
  friend bool operator==(const CycleClass& a, const CycleClass& b);

  std::string str() const;

 private:
  CycleClass(RingHandle ring, int degree) : ring_(std::move(ring)), degree_(degree) {}
  void add_reduced(const Monomial& m, const Integer& c);

  RingHandle ring_;
  int degree_ = 0;
  std::map<Monomial, Integer> terms_;
};

/// Product reduced to normal form. Throws RingError on mismatched rings or
/// when the combined degree exceeds the ring dimension.
CycleClass mul(const CycleClass& x, const CycleClass& y);

/// Degree of a top-degree class. Throws RingError otherwise.
Integer evaluate(const CycleClass& x);

/// Canonical data. For the scrolls `canonical` is K_X and `divisor` is empty;
/// for BundleP1 `canonical` is K_P and `divisor` is the class of X.
struct CanonicalData {
  CycleClass canonical;
  std::optional<CycleClass> divisor;

  /// K_X for the scrolls, K_P + X for BundleP1 (restricts to K_X on X).
  CycleClass adjoint() const { return divisor ? canonical + *divisor : canonical; }
};

CanonicalData canonical_class(const RingHandle& ring);

/// c1, c2, c3 of T_X. For BundleP1 these are ambient classes whose restriction to X
/// is c(T_X), obtained from c(T_P) / (1 + X).
struct ChernRecord {
  CycleClass c1;
  CycleClass c2;
  CycleClass c3;
};

ChernRecord tangent_chern(const RingHandle& ring);

/// Degree on the 3-fold X of a class of degree 3: direct evaluation for the
/// scrolls, evaluation of x * X on P for BundleP1.
Integer degree_on_threefold(const CycleClass& x);

/// All seven intersection numbers by ring reduction; Euler data left at defaults.
InvariantSet invariants_from_ring(const AmbientPreset& preset);

}  // namespace hilbdim

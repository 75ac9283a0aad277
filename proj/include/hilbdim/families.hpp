// Closed-form invariants of the four 3-fold families and their descriptor checks.
#pragma once

#include "hilbdim/arith.hpp"
#include "hilbdim/chow_ring.hpp"
#include "hilbdim/invariants.hpp"
#include "hilbdim/p1_bundles.hpp"
#include "hilbdim/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hilbdim {

enum class Family {
  scroll_p2,   // scroll over P^2
  scroll_q,    // scroll over a smooth quadric surface
  hqf,         // hyperquadric fibration over P^1 (alpha = 2)
  del_pezzo3,  // cubic Del Pezzo fibration over P^1 (alpha = 3)
};

std::string to_string(Family f);
/// Accepts the CLI spellings scroll-p2, scroll-q, hqf, dp3 (also del-pezzo3).
std::optional<Family> parse_family(std::string_view name);
/// Fibre degree: 2 for hqf, 3 for del_pezzo3, 0 for the scrolls.
int fibre_degree(Family f);
bool is_fibration(Family f);

struct FibrationParams {
  /// Twist b as printed in a table, checked against the value forced by (d, g).
  std::optional<long long> declared_b;
  /// Full splitting of E when known; only its sum enters the invariants.
  std::optional<std::array<long long, 4>> splitting;
};

using FamilyParams = std::variant<ScrollP2Preset, ScrollQPreset, FibrationParams>;

struct FamilyDescriptor {
  Family family = Family::scroll_p2;
  long long d = 0;
  long long g = 0;
  long long n = 0;
  FamilyParams params;
  long long pg_S = 0;  // geometric genus of a surface section; Del Pezzo only
};

class InvalidFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Every violated descriptor invariant, one message each; empty when valid.
std::vector<std::string> descriptor_violations(const FamilyDescriptor& f);
/// Throws InvalidFamily naming the first violated invariant.
void require_valid(const FamilyDescriptor& f);

/// (e, b) for a fibration descriptor. Throws NonIntegral.
FibrationDegrees fibration_degrees(const FamilyDescriptor& f);

/// Intersection numbers from the printed closed forms, without validating the
/// descriptor. Euler data is filled as in invariant_set.
InvariantSet closed_form_invariants(const FamilyDescriptor& f);

/// Validated closed-form invariants. Throws InvalidFamily.
InvariantSet invariant_set(const FamilyDescriptor& f);

/// Raw value of the linear h^1(L) expression; may be negative.
Integer h1L(const FamilyDescriptor& f);

Integer chi_OS(const FamilyDescriptor& f);

/// Ring preset modelling the descriptor. For fibrations without a known
/// splitting a balanced splitting of degree e is used.
AmbientPreset ambient_preset(const FamilyDescriptor& f);

/// chi(tL) = (L^3/6) t^3 - (KL^2/4) t^2 + ((K^2L + c2L)/12) t + chi(O_X).
RationalPolynomial hilbert_polynomial_of(const InvariantSet& inv);

struct ConsistencyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<ConsistencyCheck> checks;
  bool all_pass() const;
  /// Nullptr when no check of that name was run.
  const ConsistencyCheck* find(std::string_view name) const;
};

ConsistencyReport consistency_report(const FamilyDescriptor& f);

}  // namespace hilbdim

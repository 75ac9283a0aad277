// Chern numbers of the normal bundle, chi(N) by Hirzebruch-Riemann-Roch,
// the closed-form dimension formulas, and hypothesis verdicts.
#pragma once

#include "hilbdim/arith.hpp"
#include "hilbdim/families.hpp"
#include "hilbdim/invariants.hpp"
#include "hilbdim/p1_bundles.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hilbdim {

/// Products of the Chern classes n_i of N = N_{X/P^n} with c_i = c_i(X), c1 = -K.
struct NormalChernNumbers {
  Rational n1_cubed;
  Rational n1_n2;
  Rational n3;
  Rational c1_n1sq;
  Rational c1_n2;
  Rational c1sq_plus_c2_dot_n1;

  friend bool operator==(const NormalChernNumbers&, const NormalChernNumbers&) = default;
};

/// Expands n1 = K + (n+1)L and the companion n2, n3 in the invariant basis.
NormalChernNumbers normal_chern(const InvariantSet& inv, long long n);

/// chi(N) from the normal Chern numbers; integral for every consistent invariant set.
Rational chi_normal_rational(const InvariantSet& inv, long long n);

/// chi(N) for a validated descriptor. Throws InvalidFamily or NonIntegralChiN.
Integer chi_normal(const FamilyDescriptor& f);

/// Printed closed-form dimension of the Hilbert-scheme component.
/// Throws InvalidFamily or NonIntegralDim.
Integer dim_closed_form(const FamilyDescriptor& f);

/// Same formula without validating the descriptor, as an exact rational.
Rational dim_closed_form_rational(const FamilyDescriptor& f);

enum class Verdict { pass, fail, assumed };
std::string to_string(Verdict v);

/// Where a hypothesis ii) verdict comes from.
enum class Provenance {
  checked,             // predicate evaluated on a supplied splitting type
  assumed_from_source,  // splitting type supplied by the source, not derivable here
  inferred_rule,       // lower bound for a1 from the rule table
};
std::string to_string(Provenance p);

struct ScrollP2Splitting {
  long long a = 0;  // E|line = O(a) + O(e1 - a)
};
struct ScrollQSplitting {
  long long a = 0;  // on a line of |O(1,0)|
  long long b = 0;  // on a line of |O(0,1)|
};
struct FibrationSplitting {
  A1Hint hint = A1Hint::none;
  /// A known a1 overrides the rule table.
  std::optional<long long> a1;
};
using SplittingInputs = std::variant<std::monostate, ScrollP2Splitting, ScrollQSplitting, FibrationSplitting>;

struct UnobstructedReport {
  Verdict hypothesis_i = Verdict::fail;
  Verdict hypothesis_ii = Verdict::fail;
  Provenance hypothesis_ii_provenance = Provenance::checked;
  std::string hypothesis_ii_detail;
  Integer h1L;
  Integer chiN;
  Integer dim_closed_form;
  bool agree = false;

  bool unobstructed() const {
    return hypothesis_i == Verdict::pass && hypothesis_ii != Verdict::fail && agree;
  }
};

/// Runs h1L, the family's splitting predicate, chi_normal and dim_closed_form.
/// The degree and genus identities are not enforced here, so perturbed
/// descriptors still get verdicts; consistency_report covers them.
/// With std::monostate the scrolls assume a generic splitting type of
/// ceil-balanced form and fibrations use the rule table without hints.
UnobstructedReport check_unobstructed(const FamilyDescriptor& f,
                                      const SplittingInputs& splitting = std::monostate{});

// ---------------------------------------------------------------------------
// Table fixtures

enum class TableSource { scroll_p2, scroll_p2_open, scroll_q, hqf, del_pezzo3 };
std::string to_string(TableSource s);

/// One row of a printed table, stored verbatim.
struct TableRow {
  TableSource source = TableSource::scroll_p2;
  std::string label;
  FamilyDescriptor descriptor;
  SplittingInputs splitting;
  long long printed_dim = 0;
  bool existence_known = true;
};

/// The 26 printed rows (24 with known existence plus 2 existence-open rows).
std::span<const TableRow> builtin_table_rows();

struct TableRowResult {
  const TableRow* row = nullptr;
  UnobstructedReport report;
  std::optional<std::string> error;
  bool pass = false;  // computed dim equals printed dim and hypotheses hold
};

struct TableReport {
  std::vector<TableRowResult> rows;
  int known_pass() const;
  int known_total() const;
  int open_pass() const;
  int open_total() const;
  bool all_known_pass() const { return known_pass() == known_total(); }
};

TableReport verify_tables(std::span<const TableRow> rows = builtin_table_rows());

}  // namespace hilbdim

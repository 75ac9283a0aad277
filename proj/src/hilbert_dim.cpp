#include "hilbdim/hilbert_dim.hpp"

#include <algorithm>

namespace hilbdim {

NormalChernNumbers normal_chern(const InvariantSet& inv, long long n) {
  const Rational m = n + 1;
  const Rational nn = n;
  const Rational K3 = inv.K3, K2L = inv.K2L, KL2 = inv.KL2, L3 = inv.L3;
  const Rational Kc2 = inv.Kc2, c2L = inv.c2L, c3 = inv.c3;
  const Rational half(1, 2);

  NormalChernNumbers r;
  r.n1_cubed = K3 + 3 * m * K2L + 3 * m * m * KL2 + m * m * m * L3;
  r.n1_n2 = K3 + 2 * m * K2L + (half * nn * m + m * m) * KL2 + half * nn * m * m * L3 - Kc2 - m * c2L;
  r.n3 = (nn - 1) * nn * m / 6 * L3 + half * nn * m * KL2 + m * K2L - m * c2L - 2 * Kc2 + K3 - c3;
  r.c1_n1sq = -K3 - 2 * m * K2L - m * m * KL2;
  r.c1_n2 = -half * nn * m * KL2 - m * K2L - K3 + Kc2;
  r.c1sq_plus_c2_dot_n1 = K3 + m * K2L + Kc2 + m * c2L;
  return r;
}

Rational chi_normal_rational(const InvariantSet& inv, long long n) {
  const NormalChernNumbers c = normal_chern(inv, n);
  return Rational(1, 6) * (c.n1_cubed - 3 * c.n1_n2 + 3 * c.n3) +
         Rational(1, 4) * (c.c1_n1sq - 2 * c.c1_n2) + Rational(1, 12) * c.c1sq_plus_c2_dot_n1 +
         Rational(n - 3) * Rational(inv.chi_OX);
}

Integer chi_normal(const FamilyDescriptor& f) {
  const InvariantSet inv = invariant_set(f);
  return require_integral<NonIntegralChiN>(chi_normal_rational(inv, f.n), "chi(N)");
}

Rational dim_closed_form_rational(const FamilyDescriptor& f) {
  const Rational d = f.d, g = f.g, n = f.n;
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    const Rational e1 = p->e1;
    return (d + 2) * (n - 3) + Rational(3, 2) * e1 * (n + 1) - e1 * e1 / 2 * (n - 5) - 4;
  }
  if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    const Rational e11 = q->e11, e12 = q->e12;
    return (d + 2) * (n - 3) + (e11 + e12) * (n + 1) - e11 * e12 * (n - 5) - 2;
  }
  if (fibre_degree(f.family) == 2) return d * (n - 4) + g * (14 - n) + 8 + 3 * n;
  return Rational(2, 3) * d * (n - 14) + g / 3 * (44 - n) + Rational(10, 3) * (10 + n);
}

Integer dim_closed_form(const FamilyDescriptor& f) {
  require_valid(f);
  return require_integral<NonIntegralDim>(dim_closed_form_rational(f), "closed-form dimension");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::assumed:
      return "assumed";
  }
  return "unknown";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::checked:
      return "checked";
    case Provenance::assumed_from_source:
      return "assumed-from-paper";
    case Provenance::inferred_rule:
      return "inferred-rule";
  }
  return "unknown";
}

namespace {

Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

void judge_splitting(const FamilyDescriptor& f, const SplittingInputs& s, UnobstructedReport& r) {
  auto wrong_kind = [&] {
    throw InvalidArgument("splitting inputs do not match family " + to_string(f.family));
  };
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    if (const auto* sp = std::get_if<ScrollP2Splitting>(&s)) {
      r.hypothesis_ii = verdict(check_scroll_p2_splitting(p->e1, sp->a));
      r.hypothesis_ii_provenance = Provenance::checked;
      r.hypothesis_ii_detail = "E|line = O(" + std::to_string(sp->a) + ") + O(" +
                               std::to_string(p->e1 - sp->a) + ")";
    } else if (std::holds_alternative<std::monostate>(s)) {
      const long long a = ceil_div(p->e1, 2);
      r.hypothesis_ii = check_scroll_p2_splitting(p->e1, a) ? Verdict::assumed : Verdict::fail;
      r.hypothesis_ii_provenance = Provenance::assumed_from_source;
      r.hypothesis_ii_detail = "generic splitting O(" + std::to_string(a) + ") + O(" +
                               std::to_string(p->e1 - a) + ") assumed";
    } else {
      wrong_kind();
    }
    return;
  }
  if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    if (const auto* sq = std::get_if<ScrollQSplitting>(&s)) {
      r.hypothesis_ii = verdict(check_scroll_q_splitting(q->e11, q->e12, sq->a, sq->b));
      r.hypothesis_ii_provenance = Provenance::checked;
      r.hypothesis_ii_detail = "rulings split with a = " + std::to_string(sq->a) +
                               ", b = " + std::to_string(sq->b);
    } else if (std::holds_alternative<std::monostate>(s)) {
      r.hypothesis_ii = Verdict::assumed;
      r.hypothesis_ii_provenance = Provenance::assumed_from_source;
      r.hypothesis_ii_detail = "balanced splitting on both rulings assumed";
    } else {
      wrong_kind();
    }
    return;
  }
  FibrationSplitting fs;
  if (const auto* given = std::get_if<FibrationSplitting>(&s)) {
    fs = *given;
  } else if (!std::holds_alternative<std::monostate>(s)) {
    wrong_kind();
  }
  const int alpha = fibre_degree(f.family);
  const FibrationDegrees eb = fibration_degrees(f);
  if (fs.a1) {
    r.hypothesis_ii = verdict(check_fibration_bound(alpha, eb.b, *fs.a1));
    r.hypothesis_ii_provenance = Provenance::checked;
    r.hypothesis_ii_detail = "a1 = " + std::to_string(*fs.a1) + ", b = " + std::to_string(eb.b);
    return;
  }
  const A1Bound bound = infer_a1_lower(alpha, eb.b, fs.hint);
  r.hypothesis_ii = verdict(check_fibration_bound(alpha, eb.b, bound.value));
  r.hypothesis_ii_provenance = Provenance::inferred_rule;
  r.hypothesis_ii_detail = "a1 >= " + std::to_string(bound.value) + " (" + to_string(bound.rule) +
                           "), b = " + std::to_string(eb.b);
}

}  // namespace

UnobstructedReport check_unobstructed(const FamilyDescriptor& f, const SplittingInputs& splitting) {
  const bool params_fit = is_fibration(f.family) ? std::holds_alternative<FibrationParams>(f.params)
                         : f.family == Family::scroll_p2 ? std::holds_alternative<ScrollP2Preset>(f.params)
                                                         : std::holds_alternative<ScrollQPreset>(f.params);
  if (!params_fit) throw InvalidFamily(to_string(f.family) + ": parameters belong to another family");
  UnobstructedReport r;
  r.h1L = h1L(f);
  r.hypothesis_i = verdict(r.h1L == 0);
  judge_splitting(f, splitting, r);
  r.chiN = require_integral<NonIntegralChiN>(chi_normal_rational(closed_form_invariants(f), f.n), "chi(N)");
  r.dim_closed_form = require_integral<NonIntegralDim>(dim_closed_form_rational(f), "closed-form dimension");
  r.agree = r.chiN == r.dim_closed_form;
  return r;
}

std::string to_string(TableSource s) {
  switch (s) {
    case TableSource::scroll_p2:
      return "scroll-p2";
    case TableSource::scroll_p2_open:
      return "scroll-p2-open";
    case TableSource::scroll_q:
      return "scroll-q";
    case TableSource::hqf:
      return "hqf";
    case TableSource::del_pezzo3:
      return "dp3";
  }
  return "unknown";
}

int TableReport::known_pass() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.row->existence_known && r.pass;
  }));
}

int TableReport::known_total() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.row->existence_known; }));
}

int TableReport::open_pass() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return !r.row->existence_known && r.pass;
  }));
}

int TableReport::open_total() const { return static_cast<int>(rows.size()) - known_total(); }

TableReport verify_tables(std::span<const TableRow> rows) {
  TableReport report;
  for (const TableRow& row : rows) {
    TableRowResult res;
    res.row = &row;
    try {
      res.report = check_unobstructed(row.descriptor, row.splitting);
      res.pass = res.report.unobstructed() && res.report.dim_closed_form == row.printed_dim &&
                 consistency_report(row.descriptor).all_pass();
    } catch (const Error& e) {
      res.error = e.what();
      res.pass = false;
    }
    report.rows.push_back(std::move(res));
  }
  return report;
}

}  // namespace hilbdim

#include "hilbdim/cli.hpp"

#include "hilbdim/determinantal.hpp"
#include "hilbdim/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace hilbdim::cli {

namespace {

/// Invalid user input; reported on stderr with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::string format = "text";
  bool quiet = false;
};

struct FamilyOptions {
  std::string family;
  std::optional<long long> d, g, n, e1, e2, e11, e12, b, pg, a1;
  std::vector<long long> c1, splitting, split;
  bool a1_cited = false;
};

void add_family_options(CLI::App* app, FamilyOptions& o) {
  app->add_option("--d", o.d, "degree L^3");
  app->add_option("--g", o.g, "sectional genus");
  app->add_option("--n", o.n, "ambient projective dimension");
  app->add_option("--e1", o.e1, "c1(E) on P^2");
  app->add_option("--e2", o.e2, "c2(E)");
  app->add_option("--e11", o.e11, "first component of c1(E) on Q");
  app->add_option("--e12", o.e12, "second component of c1(E) on Q");
  app->add_option("--c1", o.c1, "c1(E): e1, or e11,e12")->delimiter(',');
  app->add_option("--b", o.b, "twist b of the fibration divisor (checked against d, g)");
  app->add_option("--a", o.splitting, "splitting a1,a2,a3,a4 of E over P^1")->delimiter(',');
  app->add_option("--pg", o.pg, "p_g of a surface section (Del Pezzo fibrations)");
  app->add_option("--split", o.split, "splitting on a line: a (P^2) or a,b (Q rulings)")->delimiter(',');
  app->add_option("--a1", o.a1, "known smallest splitting degree a1");
  app->add_flag("--a1-cited", o.a1_cited, "a1 = 1 is known from the classification literature");
}

long long need(const std::optional<long long>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing required option --") + name);
  return *v;
}

Family parse_family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected scroll-p2, scroll-q, hqf, dp3)");
  return *f;
}

FamilyDescriptor build_descriptor(const FamilyOptions& o) {
  FamilyDescriptor f;
  f.family = parse_family_or_throw(o.family);
  f.d = need(o.d, "d");
  f.g = need(o.g, "g");
  f.n = need(o.n, "n");
  switch (f.family) {
    case Family::scroll_p2: {
      long long e1 = o.e1 ? *o.e1 : (o.c1.size() == 1 ? o.c1[0] : need(o.e1, "e1"));
      f.params = ScrollP2Preset{e1, need(o.e2, "e2")};
      break;
    }
    case Family::scroll_q: {
      long long e11 = 0, e12 = 0;
      if (o.c1.size() == 2) {
        e11 = o.c1[0];
        e12 = o.c1[1];
      } else {
        e11 = need(o.e11, "e11");
        e12 = need(o.e12, "e12");
      }
      f.params = ScrollQPreset{e11, e12, need(o.e2, "e2")};
      break;
    }
    case Family::hqf:
    case Family::del_pezzo3: {
      FibrationParams fp;
      fp.declared_b = o.b;
      if (!o.splitting.empty()) {
        if (o.splitting.size() != 4) throw UsageError("--a needs exactly four degrees");
        std::array<long long, 4> a{};
        std::copy(o.splitting.begin(), o.splitting.end(), a.begin());
        std::sort(a.begin(), a.end());
        fp.splitting = a;
      }
      f.params = fp;
      if (f.family == Family::del_pezzo3) f.pg_S = need(o.pg, "pg");
      break;
    }
  }
  if (o.pg && f.family != Family::del_pezzo3) f.pg_S = *o.pg;
  return f;
}

SplittingInputs build_splitting(const FamilyOptions& o, Family family) {
  switch (family) {
    case Family::scroll_p2:
      if (o.split.empty()) return std::monostate{};
      if (o.split.size() != 1) throw UsageError("--split takes one value for scroll-p2");
      return ScrollP2Splitting{o.split[0]};
    case Family::scroll_q:
      if (o.split.empty()) return std::monostate{};
      if (o.split.size() != 2) throw UsageError("--split takes a,b for scroll-q");
      return ScrollQSplitting{o.split[0], o.split[1]};
    default:
      return FibrationSplitting{o.a1_cited ? A1Hint::cited_a1_equals_one : A1Hint::none, o.a1};
  }
}

Json describe(const FamilyDescriptor& f) {
  Json j;
  j["family"] = to_string(f.family);
  j["d"] = f.d;
  j["g"] = f.g;
  j["n"] = f.n;
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    j["e1"] = p->e1;
    j["e2"] = p->e2;
  } else if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    j["e11"] = q->e11;
    j["e12"] = q->e12;
    j["e2"] = q->e2;
  } else {
    const auto& fp = std::get<FibrationParams>(f.params);
    if (fp.declared_b) j["b"] = *fp.declared_b;
    if (fp.splitting) j["a"] = *fp.splitting;
    if (f.family == Family::del_pezzo3) j["pg"] = f.pg_S;
  }
  return j;
}

Json describe(const UnobstructedReport& r) {
  Json j;
  j["h1L"] = json_integer(r.h1L);
  j["hypothesis_i"] = to_string(r.hypothesis_i);
  j["hypothesis_ii"] = to_string(r.hypothesis_ii);
  j["provenance"] = to_string(r.hypothesis_ii_provenance);
  j["splitting"] = r.hypothesis_ii_detail;
  j["chiN"] = json_integer(r.chiN);
  j["dim"] = json_integer(r.dim_closed_form);
  j["agree"] = r.agree;
  return j;
}

Json describe(const InvariantSet& inv) {
  Json j;
  j["L3"] = json_integer(inv.L3);
  j["KL2"] = json_integer(inv.KL2);
  j["K2L"] = json_integer(inv.K2L);
  j["K3"] = json_integer(inv.K3);
  j["c2L"] = json_integer(inv.c2L);
  j["Kc2"] = json_integer(inv.Kc2);
  j["c3"] = json_integer(inv.c3);
  j["chi_OX"] = json_integer(inv.chi_OX);
  j["chi_OS"] = json_integer(inv.chi_OS);
  j["h1L"] = json_integer(inv.h1L);
  return j;
}

Json coefficients_descending(const RationalPolynomial& p) {
  Json arr = Json::array();
  for (int k = p.degree(); k >= 0; --k) arr.push_back(to_string(p.coefficient(k)));
  return arr;
}

std::string join_args(const std::string& head, const std::vector<std::string>& args) {
  std::string s = head;
  for (const auto& a : args) s += " " + a;
  return s;
}

// ---------------------------------------------------------------------------

ReportRow match_row(const DeterminantalExample* ex, const DegreeMatrix& m, const FamilyDescriptor& f) {
  const MatchReport mr = match_family(m, f);
  ReportRow row;
  if (ex) row.input["example"] = ex->label;
  row.input["matrix"] = {{"b", m.b}, {"a", m.a}, {"N", m.N}, {"c", m.c}};
  row.input["target"] = describe(f);
  row.computed["polynomial"] = coefficients_descending(mr.derived);
  row.computed["chi_tL"] = coefficients_descending(mr.expected);
  row.computed["polynomial_match"] = mr.polynomial_match;
  row.computed["d"] = mr.derived_degree_genus.d;
  row.computed["g"] = mr.derived_degree_genus.g;
  row.computed["dim"] = json_integer(mr.dim);
  if (ex) row.paper["polynomial"] = coefficients_descending(ex->printed_polynomial);
  if (mr.printed_dim) row.paper["dim"] = *mr.printed_dim;
  row.pass = mr.pass();
  row.notes = mr.notes;
  return row;
}

Report verify_tables_report(const Context& ctx, const std::string& command) {
  Report rep;
  rep.command = command;
  const TableReport tr = verify_tables(ctx.table_rows);
  for (const auto& res : tr.rows) {
    ReportRow row;
    row.input["table"] = to_string(res.row->source);
    row.input["row"] = res.row->label;
    row.input.update(describe(res.row->descriptor));
    if (res.error) {
      row.notes.push_back("error: " + *res.error);
    } else {
      row.computed = describe(res.report);
    }
    row.paper["dim"] = res.row->printed_dim;
    row.pass = res.pass;
    if (!res.row->existence_known) row.notes.push_back("existence open");
    if (!res.error && res.report.dim_closed_form != res.row->printed_dim) {
      row.notes.push_back("computed dim differs from printed dim");
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& ex : builtin_determinantal_examples()) {
    rep.rows.push_back(match_row(&ex, ex.matrix, ex.family));
  }
  return rep;
}

int exit_code_for_tables(const Report& rep) {
  for (const auto& row : rep.rows) {
    const bool open = std::find(row.notes.begin(), row.notes.end(), "existence open") != row.notes.end();
    if (!row.pass && !open) return kMismatch;
  }
  return kAllPass;
}

void write_tables_summary(std::ostream& os, const Report& rep) {
  int known = 0, known_pass = 0, open = 0, open_pass = 0, det = 0, det_pass = 0;
  for (const auto& row : rep.rows) {
    const bool is_open =
        std::find(row.notes.begin(), row.notes.end(), "existence open") != row.notes.end();
    if (row.input.contains("example")) {
      ++det;
      det_pass += row.pass;
    } else if (is_open) {
      ++open;
      open_pass += row.pass;
    } else {
      ++known;
      known_pass += row.pass;
    }
  }
  os << "tables: " << known_pass << "/" << known << " known-existence rows pass; " << open_pass << "/"
     << open << " existence-open rows reproduce; determinantal " << det_pass << "/" << det << "\n";
}

// ---------------------------------------------------------------------------

ReportRow family_row(const FamilyDescriptor& f, const SplittingInputs& s, bool show_inv,
                     bool show_dim, bool show_hyp) {
  ReportRow row;
  row.input = describe(f);
  const InvariantSet inv = invariant_set(f);
  const InvariantSet oracle = invariants_from_ring(ambient_preset(f));
  const bool oracle_agrees = same_intersection_numbers(inv, oracle);
  const UnobstructedReport ur = check_unobstructed(f, s);
  if (show_inv) {
    row.computed["invariants"] = describe(inv);
    row.computed["ring_oracle_agrees"] = oracle_agrees;
  }
  if (show_dim) {
    row.computed["chiN"] = json_integer(ur.chiN);
    row.computed["dim"] = json_integer(ur.dim_closed_form);
  }
  if (show_hyp) {
    row.computed["hypothesis_i"] = to_string(ur.hypothesis_i);
    row.computed["h1L"] = json_integer(ur.h1L);
    row.computed["hypothesis_ii"] = to_string(ur.hypothesis_ii);
    row.computed["provenance"] = to_string(ur.hypothesis_ii_provenance);
    row.computed["splitting"] = ur.hypothesis_ii_detail;
  }
  row.pass = ur.unobstructed() && oracle_agrees;
  if (!oracle_agrees) row.notes.push_back("closed-form invariants disagree with the ring oracle");
  if (!ur.agree) row.notes.push_back("chi(N) differs from the closed-form dimension");
  for (const auto& c : consistency_report(f).checks) {
    if (!c.pass) row.notes.push_back("consistency check '" + c.name + "' failed: " + c.detail);
  }
  if (f.family == Family::scroll_p2 && f.d == 11) {
    const auto rows = builtin_table_rows();
    for (const auto& t : rows) {
      if (!t.existence_known && t.descriptor.d == f.d && t.descriptor.g == f.g && t.descriptor.n == f.n) {
        row.notes.push_back("existence of this scroll is open");
      }
    }
  }
  return row;
}

// ---------------------------------------------------------------------------

struct Candidate {
  FamilyDescriptor descriptor;
  std::optional<FibrationDegrees> eb;
};

const TableRow* table_match(const FamilyDescriptor& f) {
  for (const auto& row : builtin_table_rows()) {
    const auto& t = row.descriptor;
    if (t.family != f.family || t.d != f.d || t.g != f.g || t.n != f.n || t.pg_S != f.pg_S) continue;
    if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
      const auto& tp = std::get<ScrollP2Preset>(t.params);
      if (tp.e1 != p->e1 || tp.e2 != p->e2) continue;
    } else if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
      const auto& tq = std::get<ScrollQPreset>(t.params);
      if (tq.e11 != q->e11 || tq.e12 != q->e12 || tq.e2 != q->e2) continue;
    }
    return &row;
  }
  return nullptr;
}

std::vector<Candidate> enumerate(Family family, long long d_min, long long d_max,
                                 const std::vector<long long>& c1) {
  std::vector<Candidate> out;
  for (long long d = d_min; d <= d_max; ++d) {
    switch (family) {
      case Family::scroll_p2: {
        // Ample E restricts to O(>=1) + O(>=1) on lines, so e1 >= 2; n >= 6 bounds g.
        for (long long e1 = 2;; ++e1) {
          const long long g = (e1 - 1) * (e1 - 2) / 2;
          if (g > d_max - 4) break;
          if (!c1.empty() && e1 != c1[0]) continue;
          const long long e2 = e1 * e1 - d;
          const long long n = d - g + 2;
          if (e2 < 1 || n < 6) continue;
          out.push_back({{family, d, g, n, ScrollP2Preset{e1, e2}, 0}, std::nullopt});
        }
        break;
      }
      case Family::scroll_q: {
        for (long long e11 = 2; e11 - 1 <= d_max - 4; ++e11) {
          for (long long e12 = e11; (e11 - 1) * (e12 - 1) <= d_max - 4; ++e12) {
            if (c1.size() == 2 && !((e11 == c1[0] && e12 == c1[1]) || (e11 == c1[1] && e12 == c1[0]))) {
              continue;
            }
            const long long g = (e11 - 1) * (e12 - 1);
            const long long e2 = 2 * e11 * e12 - d;
            const long long n = d - g + 2;
            if (e2 < 1 || n < 6) continue;
            const long long first = c1.size() == 2 ? c1[0] : e11;
            const long long second = c1.size() == 2 ? c1[1] : e12;
            out.push_back({{family, d, g, n, ScrollQPreset{first, second, e2}, 0}, std::nullopt});
          }
        }
        break;
      }
      case Family::hqf:
      case Family::del_pezzo3: {
        const int alpha = fibre_degree(family);
        for (long long g = 0; g <= 2 * d; ++g) {
          long long pg = 0;
          if (alpha == 3) {
            // h0(E) = e + 4 = n + 1 together with d = 3e + b fixes p_g(S).
            if ((2 * g + 1 - d) % 3 != 0 || 2 * g + 1 - d < 0) continue;
            pg = (2 * g + 1 - d) / 3;
          }
          const long long n = 2 + pg + d - g;
          if (n < 6) continue;
          FibrationDegrees eb;
          try {
            eb = derive_eb(d, g, alpha);
          } catch (const NonIntegral&) {
            continue;
          }
          if (eb.e + 4 != n + 1) continue;
          // Hypothesis ii) needs some a1 <= e/4 with -alpha a1 - 1 <= b.
          const long long a1_max = eb.e >= 0 ? eb.e / 4 : -ceil_div(-eb.e, 4);
          if (!check_fibration_bound(alpha, eb.b, a1_max)) continue;
          out.push_back({{family, d, g, n, FibrationParams{eb.b, std::nullopt}, pg}, eb});
        }
        break;
      }
    }
  }
  return out;
}

Report search_report(Family family, long long d_min, long long d_max, const std::vector<long long>& c1,
                     const std::string& command) {
  Report rep;
  rep.command = command;
  for (const Candidate& cand : enumerate(family, d_min, d_max, c1)) {
    const FamilyDescriptor& f = cand.descriptor;
    if (!descriptor_violations(f).empty()) continue;
    ReportRow row;
    row.input = describe(f);
    UnobstructedReport ur;
    try {
      ur = check_unobstructed(f);
    } catch (const NonIntegral& e) {
      continue;
    }
    if (ur.h1L != 0) continue;
    row.computed = describe(ur);
    if (cand.eb) row.computed["e"] = cand.eb->e;
    row.pass = ur.unobstructed();
    if (ur.hypothesis_ii == Verdict::fail) {
      row.notes.push_back("hypothesis ii) not implied by the rule table; needs a larger a1");
    }
    if (const TableRow* t = table_match(f)) {
      if (ur.hypothesis_ii == Verdict::fail && !std::holds_alternative<std::monostate>(t->splitting)) {
        ur = check_unobstructed(f, t->splitting);
        row.computed = describe(ur);
        if (cand.eb) row.computed["e"] = cand.eb->e;
        row.pass = ur.unobstructed();
        row.notes.clear();
        row.notes.push_back("hypothesis ii) from the splitting data cited for row " + t->label);
      }
      row.paper["row"] = t->label;
      row.paper["dim"] = t->printed_dim;
      if (!t->existence_known) row.notes.push_back("existence open");
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw UsageError("unknown format '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx) {
  CLI::App app{"Hilbert-scheme dimensions of 3-folds that are scrolls or low-degree fibrations"};
  app.name("hilbdim");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--quiet", global.quiet, "print only the summary");
  app.set_version_flag("--version", std::string(HILBDIM_VERSION));

  auto* tables = app.add_subcommand("verify-tables", "reproduce every printed dimension table");

  FamilyOptions fam;
  bool show_inv = false, show_dim = false, show_hyp = false, allow_h1 = false;
  auto* family = app.add_subcommand("family", "invariants, chi(N), dimension and hypotheses");
  family->add_option("family", fam.family, "scroll-p2 | scroll-q | hqf | dp3")->required();
  add_family_options(family, fam);
  family->add_flag("--invariants", show_inv, "print the invariant set");
  family->add_flag("--dim", show_dim, "print chi(N) and the closed-form dimension");
  family->add_flag("--hypotheses", show_hyp, "print hypothesis verdicts");
  family->add_flag("--allow-h1l", allow_h1, "report descriptors with h1(L) != 0 instead of rejecting");

  std::string det_action;
  std::vector<long long> det_b, det_a;
  std::optional<long long> det_N, det_c;
  FamilyOptions det_fam;
  std::string det_family;
  auto* det = app.add_subcommand("det", "determinantal resolutions and Hilbert polynomials");
  det->add_option("action", det_action, "resolution | hilbert-poly | match")
      ->required()
      ->check(CLI::IsMember({"resolution", "hilbert-poly", "match"}));
  det->add_option("--b", det_b, "source twists b_i")->delimiter(',')->required();
  det->add_option("--a", det_a, "target twists a_j")->delimiter(',')->required();
  det->add_option("--ambient-dim", det_N, "N of P^N")->required();
  det->add_option("--c", det_c, "expected codimension (default len(a) - len(b) + 1)");
  det->add_option("--family", det_fam.family, "family to match against");
  {
    // Family parameters for `det match`; --a/--b are taken by the matrix.
    det->add_option("--d", det_fam.d);
    det->add_option("--g", det_fam.g);
    det->add_option("--n", det_fam.n);
    det->add_option("--e1", det_fam.e1);
    det->add_option("--e2", det_fam.e2);
    det->add_option("--e11", det_fam.e11);
    det->add_option("--e12", det_fam.e12);
    det->add_option("--pg", det_fam.pg);
    det->add_option("--fib-b", det_fam.b, "fibration twist b");
  }

  std::string search_family;
  std::optional<long long> d_min, d_max;
  std::vector<long long> search_c1;
  auto* search = app.add_subcommand("search", "enumerate descriptors passing the necessary conditions");
  search->add_option("family", search_family, "scroll-p2 | scroll-q | hqf | dp3")->required();
  search->add_option("--d-min", d_min, "smallest degree");
  search->add_option("--d-max", d_max, "largest degree");
  search->add_option("--c1", search_c1, "fix c1(E): e1, or e11,e12")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsageError;
  }

  const std::string command = join_args("hilbdim", args);
  try {
    const OutputFormat format = parse_format(global.format);
    Report rep;
    int code = kAllPass;

    if (tables->parsed()) {
      rep = verify_tables_report(ctx, command);
      code = exit_code_for_tables(rep);
      write_report(out, rep, format, global.quiet);
      if (format == OutputFormat::text) write_tables_summary(out, rep);
      return code;
    }

    if (family->parsed()) {
      const FamilyDescriptor f = build_descriptor(fam);
      const auto violations = descriptor_violations(f);
      if (!violations.empty()) {
        throw UsageError("invalid " + to_string(f.family) + " descriptor: " + violations.front());
      }
      const Integer h1 = h1L(f);
      if (h1 != 0 && !allow_h1) {
        throw UsageError("h1(L) = " + h1.str() + " != 0 for this descriptor" +
                         (h1 < 0 ? " (n too small)" : "") + "; pass --allow-h1l to report anyway");
      }
      if (!show_inv && !show_dim && !show_hyp) show_inv = show_dim = show_hyp = true;
      rep.command = command;
      rep.rows.push_back(family_row(f, build_splitting(fam, f.family), show_inv, show_dim, show_hyp));
      code = rep.rows.front().pass ? kAllPass : kMismatch;
    } else if (det->parsed()) {
      DegreeMatrix m = DegreeMatrix::from_twists(det_b, det_a, *det_N);
      if (det_c && *det_c != m.c) {
        throw UsageError("--c " + std::to_string(*det_c) + " does not fit " +
                         std::to_string(det_b.size()) + " x " + std::to_string(det_a.size()) +
                         " twists (c = " + std::to_string(m.c) + ")");
      }
      validate(m);
      rep.command = command;
      ReportRow row;
      row.input["b"] = m.b;
      row.input["a"] = m.a;
      row.input["N"] = m.N;
      row.input["c"] = m.c;
      if (det_action == "resolution") {
        for (const auto& term : en_resolution(m)) {
          std::string s;
          for (const auto& sm : term.summands) {
            if (!s.empty()) s += " + ";
            s += "(" + std::to_string(sm.twist) + ")x" + sm.multiplicity.str();
          }
          row.computed["C" + std::to_string(term.index)] = s;
        }
        row.pass = true;
      } else if (det_action == "hilbert-poly") {
        const RationalPolynomial p = hilbert_polynomial(m);
        row.computed["coefficients"] = coefficients_descending(p);
        row.computed["polynomial"] = p.str();
        if (p.degree() == 3) {
          try {
            const DegreeGenus dg = degree_genus(p);
            row.computed["d"] = dg.d;
            row.computed["g"] = dg.g;
          } catch (const NonIntegral& e) {
            row.notes.push_back(e.what());
          }
        }
        row.pass = true;
      } else {
        if (det_fam.family.empty()) throw UsageError("det match needs --family");
        const FamilyDescriptor f = build_descriptor(det_fam);
        const auto violations = descriptor_violations(f);
        if (!violations.empty()) {
          throw UsageError("invalid " + to_string(f.family) + " descriptor: " + violations.front());
        }
        const DeterminantalExample* known = nullptr;
        for (const auto& ex : builtin_determinantal_examples()) {
          auto s = [](std::vector<long long> v) {
            std::sort(v.begin(), v.end());
            return v;
          };
          if (s(ex.matrix.a) == s(m.a) && s(ex.matrix.b) == s(m.b) && ex.matrix.N == m.N &&
              ex.family.family == f.family && ex.family.d == f.d && ex.family.g == f.g) {
            known = &ex;
          }
        }
        row = match_row(known, m, f);
      }
      rep.rows.push_back(std::move(row));
      code = rep.rows.front().pass ? kAllPass : kMismatch;
    } else if (search->parsed()) {
      const Family f = parse_family_or_throw(search_family);
      if (!d_min || !d_max) throw UsageError("search needs both --d-min and --d-max");
      if (*d_max < *d_min) throw UsageError("--d-max is smaller than --d-min");
      if (*d_max - *d_min > 200) throw UsageError("degree range wider than 200");
      if (f == Family::scroll_q && !search_c1.empty() && search_c1.size() != 2) {
        throw UsageError("--c1 takes e11,e12 for scroll-q");
      }
      if (f == Family::scroll_p2 && search_c1.size() > 1) throw UsageError("--c1 takes e1 for scroll-p2");
      rep = search_report(f, *d_min, *d_max, search_c1, command);
      code = kAllPass;
    }

    write_report(out, rep, format, global.quiet);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace hilbdim::cli

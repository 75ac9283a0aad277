#include "hilbdim/families.hpp"

#include <algorithm>

namespace hilbdim {

std::string to_string(Family f) {
  switch (f) {
    case Family::scroll_p2:
      return "scroll-p2";
    case Family::scroll_q:
      return "scroll-q";
    case Family::hqf:
      return "hqf";
    case Family::del_pezzo3:
      return "dp3";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "scroll-p2") return Family::scroll_p2;
  if (name == "scroll-q") return Family::scroll_q;
  if (name == "hqf") return Family::hqf;
  if (name == "dp3" || name == "del-pezzo3") return Family::del_pezzo3;
  return std::nullopt;
}

int fibre_degree(Family f) {
  if (f == Family::hqf) return 2;
  if (f == Family::del_pezzo3) return 3;
  return 0;
}

bool is_fibration(Family f) { return fibre_degree(f) != 0; }

namespace {

std::string num(long long v) { return std::to_string(v); }

// KL^2 predicted by the family's closed form.
Integer closed_form_KL2(const FamilyDescriptor& f) {
  const Integer d = f.d;
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    const Integer e1 = p->e1;
    return -2 * d + e1 * e1 - 3 * e1;
  }
  if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    const Integer e11 = q->e11, e12 = q->e12;
    return -2 * d + 2 * (e11 * e12 - e11 - e12);
  }
  return Integer(2 * f.g - 2 - 2 * f.d);
}

bool params_match(const FamilyDescriptor& f) {
  switch (f.family) {
    case Family::scroll_p2:
      return std::holds_alternative<ScrollP2Preset>(f.params);
    case Family::scroll_q:
      return std::holds_alternative<ScrollQPreset>(f.params);
    default:
      return std::holds_alternative<FibrationParams>(f.params);
  }
}

}  // namespace

std::vector<std::string> descriptor_violations(const FamilyDescriptor& f) {
  std::vector<std::string> v;
  if (f.d < 1) v.push_back("degree d must be >= 1 (got " + num(f.d) + ")");
  if (f.g < 0) v.push_back("sectional genus g must be >= 0 (got " + num(f.g) + ")");
  if (f.n < 6) v.push_back("ambient dimension n must be >= 6 (got " + num(f.n) + ")");
  if (f.pg_S < 0) v.push_back("p_g(S) must be >= 0");
  if (f.pg_S != 0 && f.family != Family::del_pezzo3) {
    v.push_back("p_g(S) is only meaningful for Del Pezzo fibrations");
  }
  if (!params_match(f)) {
    v.push_back("parameters do not match family " + to_string(f.family));
    return v;
  }
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    if (f.d != p->e1 * p->e1 - p->e2) {
      v.push_back("degree identity d = e1^2 - e2 fails (" + num(f.d) +
                  " != " + num(p->e1 * p->e1 - p->e2) + ")");
    }
  } else if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    if (f.d != 2 * q->e11 * q->e12 - q->e2) {
      v.push_back("degree identity d = 2 e11 e12 - e2 fails (" + num(f.d) +
                  " != " + num(2 * q->e11 * q->e12 - q->e2) + ")");
    }
  } else {
    const auto& fp = std::get<FibrationParams>(f.params);
    try {
      const FibrationDegrees eb = derive_eb(f.d, f.g, fibre_degree(f.family));
      if (fp.declared_b && *fp.declared_b != eb.b) {
        v.push_back("declared b = " + num(*fp.declared_b) + " differs from derived b = " + num(eb.b));
      }
      if (fp.splitting) {
        long long sum = 0;
        for (long long a : *fp.splitting) sum += a;
        if (sum != eb.e) {
          v.push_back("splitting degrees sum to " + num(sum) + " but e = " + num(eb.e));
        }
      }
    } catch (const NonIntegral& ex) {
      v.push_back(std::string("no integral bundle model: ") + ex.what());
    }
  }
  if (!is_fibration(f.family) && Integer(2 * f.g - 2) != closed_form_KL2(f) + 2 * f.d) {
    v.push_back("genus identity 2g - 2 = KL^2 + 2d fails");
  }
  return v;
}

void require_valid(const FamilyDescriptor& f) {
  const auto v = descriptor_violations(f);
  if (!v.empty()) throw InvalidFamily(to_string(f.family) + ": " + v.front());
}

FibrationDegrees fibration_degrees(const FamilyDescriptor& f) {
  if (!is_fibration(f.family)) throw InvalidFamily("not a fibration family");
  return derive_eb(f.d, f.g, fibre_degree(f.family));
}

Integer chi_OS(const FamilyDescriptor& f) {
  return f.family == Family::del_pezzo3 ? Integer(1 + f.pg_S) : Integer(1);
}

Integer h1L(const FamilyDescriptor& f) {
  if (is_fibration(f.family)) return Integer(f.n - 1 - f.d + f.g) - chi_OS(f);
  return Integer(f.n - 2 - f.d + f.g);
}

InvariantSet closed_form_invariants(const FamilyDescriptor& f) {
  InvariantSet inv;
  const Integer d = f.d, g = f.g;
  inv.L3 = d;
  inv.KL2 = closed_form_KL2(f);
  inv.Kc2 = -24;
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    const Integer e1 = p->e1;
    inv.K2L = 4 * d - 3 * e1 * e1 + 6 * e1 + 9;
    inv.c2L = 3 * e1 + 3;
    inv.K3 = -8 * d + 6 * e1 * e1 - 54;
    inv.c3 = 6;
  } else if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    const Integer e11 = q->e11, e12 = q->e12;
    inv.K2L = 4 * d + 4 * (e11 + e12) - 6 * e11 * e12 + 8;
    inv.c2L = 2 * (e11 + e12) + 4;
    inv.K3 = -8 * d + 12 * e11 * e12 - 48;
    inv.c3 = 8;
  } else {
    const Integer a = fibre_degree(f.family);
    inv.K2L = a * d * (4 - a) + 4 * g * (a - 4) - 4 * a + 16;
    inv.c2L = a * d * (2 - a) + 2 * g * (2 * a - 3) + 2 * a * a - 2 * a + 6;
    inv.K3 = 2 * d * (16 - 24 * a + 9 * a * a - a * a * a) + 6 * g * (16 - 8 * a + a * a) -
             6 * a * a + 48 * a - 96;
    inv.c3 = 2 * d * (a * a * a - 3 * a * a + 3 * a - 1) - 6 * g * (a * a - 2 * a + 1) -
             4 * a * a * a + 10 * a * a - 6 * a + 6;
  }
  inv.chi_OX = 1;
  inv.chi_OS = chi_OS(f);
  inv.h1L = h1L(f);
  return inv;
}

InvariantSet invariant_set(const FamilyDescriptor& f) {
  require_valid(f);
  return closed_form_invariants(f);
}

AmbientPreset ambient_preset(const FamilyDescriptor& f) {
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) return *p;
  if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) return *q;
  const auto& fp = std::get<FibrationParams>(f.params);
  const FibrationDegrees eb = fibration_degrees(f);
  BundleP1Preset preset;
  preset.alpha = fibre_degree(f.family);
  preset.b = eb.b;
  if (fp.splitting) {
    preset.a.assign(fp.splitting->begin(), fp.splitting->end());
  } else {
    // Balanced: floor(e/4) repeated, the remainder spread over the top summands.
    const long long base = eb.e >= 0 ? eb.e / 4 : -ceil_div(-eb.e, 4);
    const long long extra = eb.e - 4 * base;
    for (int i = 0; i < 4; ++i) preset.a.push_back(base + (i >= 4 - extra ? 1 : 0));
  }
  return preset;
}

RationalPolynomial hilbert_polynomial_of(const InvariantSet& inv) {
  return RationalPolynomial({Rational(inv.chi_OX), Rational(inv.K2L + inv.c2L, Integer(12)),
                             Rational(-inv.KL2, Integer(4)), Rational(inv.L3, Integer(6))});
}

bool ConsistencyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const ConsistencyCheck* ConsistencyReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ConsistencyReport consistency_report(const FamilyDescriptor& f) {
  ConsistencyReport r;
  if (!params_match(f)) {
    r.checks.push_back({"parameters", false, "parameters do not match family"});
    return r;
  }
  std::optional<FibrationDegrees> eb;
  if (is_fibration(f.family)) {
    try {
      eb = fibration_degrees(f);
      r.checks.push_back({"eb-integral", true, "e = " + num(eb->e) + ", b = " + num(eb->b)});
    } catch (const NonIntegral& ex) {
      r.checks.push_back({"eb-integral", false, ex.what()});
    }
  }

  // Degree identity.
  if (const auto* p = std::get_if<ScrollP2Preset>(&f.params)) {
    const long long expect = p->e1 * p->e1 - p->e2;
    r.checks.push_back({"degree", f.d == expect, "e1^2 - e2 = " + num(expect)});
  } else if (const auto* q = std::get_if<ScrollQPreset>(&f.params)) {
    const long long expect = 2 * q->e11 * q->e12 - q->e2;
    r.checks.push_back({"degree", f.d == expect, "2 e11 e12 - e2 = " + num(expect)});
  } else if (eb) {
    const long long expect = fibre_degree(f.family) * eb->e + eb->b;
    r.checks.push_back({"degree", f.d == expect, "alpha e + b = " + num(expect)});
  } else {
    r.checks.push_back({"degree", false, "no integral (e, b)"});
  }

  // Genus identity.
  if (eb) {
    const long long a = fibre_degree(f.family);
    const long long rhs = a * (eb->e + eb->b - 2) + (a - 2) * f.d;
    r.checks.push_back({"genus", 2 * f.g - 2 == rhs,
                        "alpha (e + b - 2) + (alpha - 2) d = " + num(rhs)});
  } else if (!is_fibration(f.family)) {
    const Integer rhs = closed_form_KL2(f) + 2 * f.d;
    r.checks.push_back({"genus", Integer(2 * f.g - 2) == rhs, "KL^2 + 2d = " + rhs.str()});
  } else {
    r.checks.push_back({"genus", false, "no integral (e, b)"});
  }

  const InvariantSet inv = closed_form_invariants(f);
  r.checks.push_back({"kc2", inv.Kc2 == -24 * inv.chi_OX, "Kc2 = " + inv.Kc2.str()});

  const Integer h1 = h1L(f);
  std::string h1_detail = "h1(L) = " + h1.str();
  if (h1 < 0) h1_detail += " (negative: n too small for (d, g))";
  r.checks.push_back({"h1L", h1 == 0, h1_detail});

  if (eb) {
    const auto& fp = std::get<FibrationParams>(f.params);
    if (fp.declared_b) {
      r.checks.push_back({"declared-b", *fp.declared_b == eb->b,
                          "declared " + num(*fp.declared_b) + ", derived " + num(eb->b)});
    }
    Integer h0E = eb->e + 4;
    std::string how = "chi(E) = e + 4";
    if (fp.splitting) {
      const SplitBundle E({fp.splitting->begin(), fp.splitting->end()});
      h0E = cohomology(E).h0;
      how = "h0 of " + E.str();
    }
    r.checks.push_back({"h0E", h0E == f.n + 1, how + " = " + h0E.str() + ", n + 1 = " + num(f.n + 1)});
  }
  return r;
}

}  // namespace hilbdim

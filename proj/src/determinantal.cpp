#include "hilbdim/determinantal.hpp"

#include "hilbdim/hilbert_dim.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace hilbdim {

DegreeMatrix DegreeMatrix::from_twists(std::vector<long long> b, std::vector<long long> a, long long N) {
  DegreeMatrix m;
  m.c = static_cast<long long>(a.size()) - static_cast<long long>(b.size()) + 1;
  m.b = std::move(b);
  m.a = std::move(a);
  m.N = N;
  return m;
}

void validate(const DegreeMatrix& m) {
  if (m.b.empty()) throw InvalidShape("matrix needs at least one row (t >= 1)");
  if (m.c < 1) throw InvalidShape("codimension c must be >= 1");
  if (static_cast<long long>(m.a.size()) - m.t() != m.c - 1) {
    throw InvalidShape("a needs t + c - 1 = " + std::to_string(m.t() + m.c - 1) + " entries, got " +
                       std::to_string(m.a.size()));
  }
  if (m.N < m.c) throw InvalidShape("ambient dimension N must be at least c");
  const long long max_b = *std::max_element(m.b.begin(), m.b.end());
  const long long min_a = *std::min_element(m.a.begin(), m.a.end());
  if (min_a <= max_b) {
    throw InvalidShape("every entry degree a_j - b_i must be positive (min a = " +
                       std::to_string(min_a) + ", max b = " + std::to_string(max_b) + ")");
  }
}

namespace {

// Calls visit(sum) for every size-k multiset of `values` (by index).
void for_each_multiset_sum(const std::vector<long long>& values, std::size_t start, long long k,
                           long long partial, const std::function<void(long long)>& visit) {
  if (k == 0) {
    visit(partial);
    return;
  }
  for (std::size_t i = start; i < values.size(); ++i)
    for_each_multiset_sum(values, i, k - 1, partial + values[i], visit);
}

// Calls visit(sum) for every size-k subset of `values` (by index).
void for_each_subset_sum(const std::vector<long long>& values, std::size_t start, long long k,
                         long long partial, const std::function<void(long long)>& visit) {
  if (k == 0) {
    visit(partial);
    return;
  }
  for (std::size_t i = start; i + k <= values.size(); ++i)
    for_each_subset_sum(values, i + 1, k - 1, partial + values[i], visit);
}

}  // namespace

std::vector<ResolutionTerm> en_resolution(const DegreeMatrix& m) {
  validate(m);
  const long long sum_b = std::accumulate(m.b.begin(), m.b.end(), 0LL);
  std::vector<ResolutionTerm> terms;
  for (long long k = 0; k < m.c; ++k) {
    std::map<long long, Integer, std::greater<>> twists;
    for_each_multiset_sum(m.b, 0, k, 0, [&](long long sm) {
      for_each_subset_sum(m.a, 0, m.t() + k, 0, [&](long long sj) { twists[sm + sum_b - sj] += 1; });
    });
    ResolutionTerm term;
    term.index = static_cast<int>(k + 1);
    for (const auto& [twist, mult] : twists) term.summands.push_back({twist, mult});
    terms.push_back(std::move(term));
  }
  return terms;
}

RationalPolynomial hilbert_polynomial(const DegreeMatrix& m) {
  const auto terms = en_resolution(m);
  RationalPolynomial p = RationalPolynomial::binomial(m.N, m.N);
  for (const auto& term : terms) {
    const Rational sign = term.index % 2 == 1 ? -1 : 1;
    for (const auto& s : term.summands) {
      p += RationalPolynomial::binomial(s.twist + m.N, m.N) * (sign * Rational(s.multiplicity));
    }
  }
  return p;
}

Integer hilbert_function(const DegreeMatrix& m, long long s) {
  if (s < 0) throw InvalidArgument("hilbert_function needs s >= 0");
  const auto terms = en_resolution(m);
  Integer value = binomial(s + m.N, m.N);
  for (const auto& term : terms) {
    for (const auto& sm : term.summands) {
      const Integer v = sm.multiplicity * binomial(s + sm.twist + m.N, m.N);
      if (term.index % 2 == 1) {
        value -= v;
      } else {
        value += v;
      }
    }
  }
  return value;
}

DegreeGenus degree_genus(const RationalPolynomial& p) {
  if (p.degree() != 3) throw InvalidArgument("degree_genus needs a cubic Hilbert polynomial");
  const Integer d = require_integral(6 * p.leading(), "degree 6 * leading coefficient");
  const Integer g = require_integral(Rational(d + 1) - 2 * p.coefficient(2), "sectional genus");
  return {d.convert_to<long long>(), g.convert_to<long long>()};
}

namespace {

std::vector<DeterminantalExample> make_examples() {
  std::vector<DeterminantalExample> ex;
  // O^3 -> O(1)^5: scroll over P^2.
  ex.push_back({"X1",
                DegreeMatrix::from_twists({0, 0, 0}, {1, 1, 1, 1, 1}, 6),
                {Family::scroll_p2, 10, 6, 6, ScrollP2Preset{5, 15}, 0},
                RationalPolynomial({Rational(1), Rational(10, 3), Rational(4), Rational(5, 3)}),
                {10, 6},
                72,
                72});
  // O^2 -> O(1)^3 + O(3): cubic Del Pezzo fibration.
  ex.push_back({"X2",
                DegreeMatrix::from_twists({0, 0}, {1, 1, 1, 3}, 6),
                {Family::del_pezzo3, 10, 9, 6, FibrationParams{1, std::nullopt}, 3},
                RationalPolynomial({Rational(1), Rational(10, 3), Rational(1), Rational(5, 3)}),
                {10, 9},
                114,
                64});
  // O^2 -> O(1)^3 + O(2): hyperquadric fibration.
  ex.push_back({"X3",
                DegreeMatrix::from_twists({0, 0}, {1, 1, 1, 2}, 6),
                {Family::hqf, 7, 3, 6, FibrationParams{1, std::nullopt}, 0},
                RationalPolynomial({Rational(1), Rational(7, 3), Rational(5, 2), Rational(7, 6)}),
                {7, 3},
                64,
                114});
  return ex;
}

bool same_matrix(const DegreeMatrix& x, const DegreeMatrix& y) {
  auto sorted = [](std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return x.N == y.N && x.c == y.c && sorted(x.b) == sorted(y.b) && sorted(x.a) == sorted(y.a);
}

bool same_family(const FamilyDescriptor& x, const FamilyDescriptor& y) {
  return x.family == y.family && x.d == y.d && x.g == y.g && x.n == y.n && x.pg_S == y.pg_S;
}

}  // namespace

std::span<const DeterminantalExample> builtin_determinantal_examples() {
  static const std::vector<DeterminantalExample> examples = make_examples();
  return examples;
}

MatchReport match_family(const DegreeMatrix& m, const FamilyDescriptor& f) {
  MatchReport r;
  r.derived = hilbert_polynomial(m);
  r.expected = hilbert_polynomial_of(invariant_set(f));
  r.polynomial_match = r.derived == r.expected;
  if (!r.polynomial_match) {
    r.notes.push_back("resolution gives p(t) = " + r.derived.str() + " but chi(tL) = " +
                      r.expected.str());
  }
  try {
    r.derived_degree_genus = degree_genus(r.derived);
    r.degree_genus_match = r.derived_degree_genus == DegreeGenus{f.d, f.g};
  } catch (const Error& e) {
    r.degree_genus_match = false;
    r.notes.push_back(e.what());
  }
  r.dim = dim_closed_form(f);

  for (const auto& ex : builtin_determinantal_examples()) {
    if (!same_matrix(ex.matrix, m) || !same_family(ex.family, f)) continue;
    r.printed_dim = ex.paired_dim;
    r.dim_match = r.dim == ex.paired_dim;
    if (ex.printed_polynomial != r.derived) {
      r.notes.push_back("printed p(t) = " + ex.printed_polynomial.str() +
                        " disagrees with the resolution and with chi(tL); derived value kept");
    }
    if (ex.listed_dim_w != ex.paired_dim) {
      r.notes.push_back("index-order anomaly: the dim W_i list gives " +
                        std::to_string(ex.listed_dim_w) + " at " + ex.label + ", but " +
                        to_string(f.family) + " pairs with " + std::to_string(ex.paired_dim));
    }
  }
  if (!r.printed_dim) r.notes.push_back("no printed dimension for this matrix and family");
  return r;
}

}  // namespace hilbdim

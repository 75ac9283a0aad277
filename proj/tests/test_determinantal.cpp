#include "hilbdim/determinantal.hpp"
#include "hilbdim/hilbert_dim.hpp"
#include "support/descriptors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace hilbdim;
using namespace fixture;

namespace {

/// Resolution terms by brute force: all size-k multisets of b indices and
/// (t+k)-subsets of a, tallied per twist, twists in decreasing order.
std::vector<std::vector<std::pair<long long, long long>>> brute_force_terms(const DegreeMatrix& m) {
  const int t = static_cast<int>(m.b.size());
  const int na = static_cast<int>(m.a.size());
  long long sum_b = 0;
  for (auto x : m.b) sum_b += x;
  std::vector<std::vector<std::pair<long long, long long>>> out;
  for (int k = 0; k < m.c; ++k) {
    std::map<long long, long long, std::greater<>> tally;
    // Multisets of size k from t items via nondecreasing tuples.
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == k) {
        multisets.push_back(cur);
        return;
      }
      for (int i = start; i < t; ++i) {
        cur.push_back(i);
        self(self, i);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& ms : multisets) {
      long long sm = 0;
      for (int i : ms) sm += m.b[i];
      for (unsigned mask = 0; mask < (1u << na); ++mask) {
        if (__builtin_popcount(mask) != t + k) continue;
        long long sj = 0;
        for (int j = 0; j < na; ++j)
          if (mask & (1u << j)) sj += m.a[j];
        tally[sm + sum_b - sj] += 1;
      }
    }
    out.emplace_back(tally.begin(), tally.end());
  }
  return out;
}

RationalPolynomial poly(std::vector<Rational> ascending) {
  RationalPolynomial p;
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    RationalPolynomial mono = RationalPolynomial::constant(ascending[k]);
    for (std::size_t i = 0; i < k; ++i) mono = mono * RationalPolynomial::linear(0);
    p += mono;
  }
  return p;
}

const DegreeMatrix kP1 = DegreeMatrix::from_twists({0, 0, 0}, {1, 1, 1, 1, 1}, 6);
const DegreeMatrix kP2 = DegreeMatrix::from_twists({0, 0}, {1, 1, 1, 3}, 6);
const DegreeMatrix kP3 = DegreeMatrix::from_twists({0, 0}, {1, 1, 1, 2}, 6);

}  // namespace

TEST_CASE("degree matrix shape") {
  CHECK(kP1.c == 3);
  CHECK(kP1.t() == 3);
  CHECK(kP3.c == 3);
  CHECK_NOTHROW(validate(kP1));
  CHECK_THROWS_AS(validate(DegreeMatrix::from_twists({1}, {0}, 6)), InvalidShape);
  CHECK_THROWS_AS(validate(DegreeMatrix::from_twists({0, 0, 0}, {1, 1}, 6)), InvalidShape);
  CHECK_THROWS_AS(validate(DegreeMatrix::from_twists({0, 0}, {1, 1, 1, 1, 1, 1, 1}, 4)), InvalidShape);
  CHECK_THROWS_AS(validate(DegreeMatrix{{0, 0}, {1, 1, 1}, 6, 3}), InvalidShape);
  CHECK_THROWS_AS(validate(DegreeMatrix::from_twists({}, {1}, 6)), InvalidShape);
}

TEST_CASE("Eagon-Northcott examples") {
  auto flat = [](const std::vector<ResolutionTerm>& terms) {
    std::vector<std::vector<std::pair<long long, long long>>> out;
    for (const auto& t : terms) {
      std::vector<std::pair<long long, long long>> row;
      for (const auto& s : t.summands) row.emplace_back(s.twist, s.multiplicity.convert_to<long long>());
      out.push_back(row);
    }
    return out;
  };
  using V = std::vector<std::vector<std::pair<long long, long long>>>;
  CHECK(flat(en_resolution(kP1)) == V{{{-3, 10}}, {{-4, 15}}, {{-5, 6}}});
  CHECK(flat(en_resolution(kP3)) == V{{{-2, 3}, {-3, 3}}, {{-3, 2}, {-4, 6}}, {{-5, 3}}});
  for (long long k = 1; k <= 5; ++k) {
    CHECK(flat(en_resolution(DegreeMatrix::from_twists({0}, {k}, 6))) == V{{{-k, 1}}});
  }
  const auto terms = en_resolution(kP1);
  for (std::size_t i = 0; i < terms.size(); ++i) CHECK(terms[i].index == static_cast<int>(i + 1));
}

TEST_CASE("Hilbert polynomials of the three examples") {
  CHECK(hilbert_polynomial(kP3) == poly({1, Rational(7, 3), Rational(5, 2), Rational(7, 6)}));
  CHECK(hilbert_polynomial(kP2) == poly({1, Rational(10, 3), 1, Rational(5, 3)}));
  const RationalPolynomial p1 = hilbert_polynomial(kP1);
  CHECK(p1 == poly({1, Rational(11, 6), Rational(5, 2), Rational(5, 3)}));
  CHECK(p1(1) == 7);
  CHECK(p1(2) == 28);
  CHECK(p1(3) == 74);
  // Riemann-Roch on the matching families.
  CHECK(p1 == hilbert_polynomial_of(invariant_set(p2(10, 6, 6, 5, 15))));
  CHECK(hilbert_polynomial(kP2) == hilbert_polynomial_of(invariant_set(dp3(10, 9, 6, 3))));
  CHECK(hilbert_polynomial(kP3) == hilbert_polynomial_of(invariant_set(hqf(7, 3, 6))));
  CHECK(hilbert_polynomial(kP3).str() == "7/6 t^3 + 5/2 t^2 + 7/3 t + 1");
}

TEST_CASE("Hilbert function values") {
  CHECK(hilbert_function(kP3, 1) == 7);
  CHECK(hilbert_function(kP1, 0) == 1);
  CHECK(hilbert_function(kP2, 2) == 25);
  CHECK(hilbert_polynomial(kP2)(2) == 25);
  CHECK_THROWS_AS(hilbert_function(kP1, -1), InvalidArgument);
}

TEST_CASE("degree and genus") {
  CHECK(degree_genus(hilbert_polynomial(kP3)) == DegreeGenus{7, 3});
  CHECK(degree_genus(hilbert_polynomial(kP2)) == DegreeGenus{10, 9});
  CHECK(degree_genus(hilbert_polynomial(kP1)) == DegreeGenus{10, 6});
  CHECK_THROWS_AS(degree_genus(RationalPolynomial::linear(0)), InvalidArgument);
  CHECK_THROWS_AS(degree_genus(poly({1, 0, 0, Rational(1, 5)})), NonIntegral);
}

TEST_CASE("resolution, degree and eventual agreement over a sweep") {
  int checked = 0;
  for (int t = 1; t <= 3; ++t) {
    for (int c = 1; c <= 3; ++c) {
      const int na = t + c - 1;
      // Every a in [1, 3]^na up to order, b = 0, and the same shifted by one source twist.
      std::vector<long long> a(na, 1);
      while (true) {
        for (int shift_b : {0, 1}) {
          std::vector<long long> b(t, 0);
          if (shift_b && t > 1 && *std::min_element(a.begin(), a.end()) >= 2) b[0] = 1;
          for (long long N : {static_cast<long long>(c) + 1, static_cast<long long>(c) + 3}) {
            const DegreeMatrix m = DegreeMatrix::from_twists(b, a, N);
            REQUIRE_NOTHROW(validate(m));
            const auto terms = en_resolution(m);
            const auto brute = brute_force_terms(m);
            REQUIRE(terms.size() == brute.size());
            long long max_twist = 0;
            for (std::size_t k = 0; k < terms.size(); ++k) {
              std::vector<std::pair<long long, long long>> row;
              for (const auto& s : terms[k].summands) {
                row.emplace_back(s.twist, s.multiplicity.convert_to<long long>());
                max_twist = std::max(max_twist, -s.twist);
              }
              REQUIRE(row == brute[k]);
            }
            const RationalPolynomial p = hilbert_polynomial(m);
            REQUIRE(p.degree() == N - c);
            REQUIRE(p.leading() > 0);
            for (long long s = max_twist; s <= max_twist + 4; ++s) {
              REQUIRE(Rational(hilbert_function(m, s)) == p(s));
            }
            ++checked;
          }
        }
        int pos = na - 1;
        while (pos >= 0 && a[pos] == 3) --pos;
        if (pos < 0) break;
        ++a[pos];
        for (int j = pos + 1; j < na; ++j) a[j] = a[pos];
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("family matching") {
  const auto examples = builtin_determinantal_examples();
  REQUIRE(examples.size() == 3);
  std::map<Family, long long> paired;
  for (const auto& ex : examples) {
    const MatchReport r = match_family(ex.matrix, ex.family);
    CHECK(r.polynomial_match);
    CHECK(r.degree_genus_match);
    CHECK(r.dim_match);
    CHECK(r.pass());
    CHECK(r.derived(1) == ex.family.n + 1);
    CHECK(r.derived_degree_genus == DegreeGenus{ex.family.d, ex.family.g});
    paired[ex.family.family] = r.dim.convert_to<long long>();
  }
  CHECK(paired[Family::hqf] == 64);
  CHECK(paired[Family::scroll_p2] == 72);
  CHECK(paired[Family::del_pezzo3] == 114);

  const MatchReport x1 = match_family(kP1, p2(10, 6, 6, 5, 15));
  bool flagged = false;
  for (const auto& n : x1.notes) flagged |= n.find("printed p(t)") != std::string::npos;
  CHECK(flagged);
  const MatchReport x2 = match_family(kP2, dp3(10, 9, 6, 3));
  bool order = false;
  for (const auto& n : x2.notes) order |= n.find("index-order") != std::string::npos;
  CHECK(order);

  const MatchReport wrong = match_family(kP3, hqf(8, 3, 7));
  CHECK_FALSE(wrong.polynomial_match);
  CHECK_FALSE(wrong.pass());
}

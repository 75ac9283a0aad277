#include "hilbdim/p1_bundles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hilbdim;

namespace {

SplitBundle B(std::vector<long long> d) { return SplitBundle(std::move(d)); }

/// Sums over k-element multisets, enumerated by nondecreasing index tuples.
std::vector<long long> multicombination_sums(const std::vector<long long>& deg, int k) {
  std::vector<long long> out;
  std::vector<std::size_t> idx(k, 0);
  if (k == 0) return {0};
  while (true) {
    long long s = 0;
    for (auto i : idx) s += deg[i];
    out.push_back(s);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == deg.size() - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sym examples") {
  CHECK(sym(B({0, 1, 1, 1}), 2).degrees() == std::vector<long long>{0, 1, 1, 1, 2, 2, 2, 2, 2, 2});
  CHECK(sym(B({3, -2, 7}), 0).degrees() == std::vector<long long>{0});
  for (long long e1 = 0; e1 <= 9; ++e1) {
    for (long long a = 0; a <= e1; ++a) {
      std::vector<long long> expected{2 * a, e1, 2 * (e1 - a)};
      std::sort(expected.begin(), expected.end());
      CHECK(sym(B({a, e1 - a}), 2).degrees() == expected);
    }
  }
  CHECK_THROWS_AS(sym(B({0, 1}), -1), InvalidArgument);
  CHECK_THROWS_AS(B({}), InvalidArgument);
}

TEST_CASE("sym rank and degree on random bundles") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = std::uniform_int_distribution<int>(1, 5)(rng);
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<long long> deg(rank);
    for (auto& x : deg) x = std::uniform_int_distribution<int>(-4, 6)(rng);
    std::sort(deg.begin(), deg.end());
    const SplitBundle S = sym(B(deg), k);
    CHECK(S.degrees() == multicombination_sums(deg, k));
    CHECK(Integer(S.rank()) == binomial(rank + k - 1, k));
    const long long e = B(deg).degree();
    // deg S^k E = C(r+k-1, k) k e / r.
    CHECK(Integer(S.degree()) * rank == binomial(rank + k - 1, k) * k * e);
  }
}

TEST_CASE("twist, tensor, dual") {
  CHECK(twist(B({2, 3}), -1) == B({1, 2}));
  CHECK(tensor(B({4}), B({-7})) == B({-3}));
  CHECK(dual(B({0, 1, 1, 1})) == B({-1, -1, -1, 0}));
  CHECK(B({1, 0, 1, 1}).str() == "{0,1,1,1}");
}

TEST_CASE("cohomology") {
  CHECK(cohomology(B({-2})) == Cohomology{0, 1});
  CHECK(cohomology(B({0, 1, 1, 1})) == Cohomology{7, 0});
  CHECK(cohomology(B({-1})) == Cohomology{0, 0});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> deg(std::uniform_int_distribution<int>(1, 4)(rng));
    for (auto& x : deg) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    const SplitBundle E = B(deg);
    const Cohomology c = cohomology(E);
    CHECK(c.h0 - c.h1 == E.degree() + static_cast<long long>(E.rank()));
    // End(E) has no H^1 exactly when the degree gap is at most 1.
    CHECK((cohomology(tensor(E, dual(E))).h1 == 0) == (E.max_degree() - E.min_degree() <= 1));
  }
}

TEST_CASE("derive_eb") {
  CHECK(derive_eb(7, 3, 2) == FibrationDegrees{3, 1});
  CHECK(derive_eb(9, 7, 3) == FibrationDegrees{3, 0});
  CHECK_THROWS_AS(derive_eb(8, 3, 3), NonIntegral);
  CHECK_THROWS_AS(derive_eb(8, 3, 4), InvalidArgument);
  for (int alpha : {2, 3}) {
    for (long long d = 1; d <= 40; ++d) {
      for (long long g = 0; g <= 40; ++g) {
        FibrationDegrees eb;
        try {
          eb = derive_eb(d, g, alpha);
        } catch (const NonIntegral&) {
          continue;
        }
        CHECK(alpha * eb.e + eb.b == d);
        CHECK(2 * g - 2 == alpha * (eb.e + eb.b - 2) + (alpha - 2) * d);
      }
    }
  }
}

TEST_CASE("splitting predicates") {
  CHECK(check_scroll_p2_splitting(4, 2));
  CHECK(check_scroll_p2_splitting(5, 3));
  CHECK_FALSE(check_scroll_p2_splitting(5, 4));
  CHECK(check_scroll_q_splitting(3, 3, 2, 2));
  CHECK_FALSE(check_scroll_q_splitting(3, 3, 3, 2));
  CHECK(check_scroll_q_splitting(4, 4, 2, 2));
  CHECK(check_fibration_bound(2, 1, 0));
  CHECK(check_fibration_bound(2, -2, 1));
  CHECK(check_fibration_bound(2, 3, -1));
  CHECK_FALSE(check_fibration_bound(2, -2, 0));
}

TEST_CASE("a1 rule table") {
  CHECK(infer_a1_lower(2, 0) == A1Bound{0, A1Rule::small_twist});
  CHECK(infer_a1_lower(2, -2, A1Hint::cited_a1_equals_one) == A1Bound{1, A1Rule::cited_value});
  CHECK(infer_a1_lower(2, 2) == A1Bound{-1, A1Rule::h1_vanishing});
  CHECK(infer_a1_lower(3, 2) == A1Bound{0, A1Rule::small_twist});
  CHECK(infer_a1_lower(3, 3) == A1Bound{-1, A1Rule::h1_vanishing});
  CHECK(to_string(A1Rule::cited_value) == "cited-value");
}

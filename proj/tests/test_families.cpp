#include "hilbdim/families.hpp"
#include "hilbdim/hilbert_dim.hpp"
#include "support/descriptors.hpp"

#include <doctest.h>

using namespace hilbdim;
using namespace fixture;

TEST_CASE("invariant_set examples") {
  const InvariantSet p = invariant_set(p2(7, 3, 6, 4, 9));
  CHECK(p.KL2 == -10);
  CHECK(p.c2L == 15);
  CHECK(p.K3 == -14);
  CHECK(p.c3 == 6);
  const InvariantSet h = invariant_set(hqf(7, 3, 6));
  CHECK(h.KL2 == -10);
  CHECK(h.c2L == 16);
  CHECK(h.K2L == 12);
  for (auto f : {Family::scroll_p2, Family::scroll_q, Family::hqf, Family::del_pezzo3}) {
    for (const auto& desc : sweep(f)) REQUIRE(invariant_set(desc).Kc2 == -24);
  }
  CHECK(invariant_set(dp3(10, 9, 6, 3)).chi_OS == 4);
  CHECK(invariant_set(hqf(7, 3, 6)).chi_OS == 1);
}

TEST_CASE("invalid descriptors") {
  CHECK_THROWS_AS(invariant_set(p2(7, 4, 6, 4, 9)), InvalidFamily);
  CHECK_THROWS_AS(invariant_set(p2(8, 3, 6, 4, 9)), InvalidFamily);
  CHECK_THROWS_AS(invariant_set(p2(7, 3, 5, 4, 9)), InvalidFamily);
  CHECK_THROWS_AS(invariant_set(hqf(7, -1, 6)), InvalidFamily);
  CHECK_THROWS_AS(invariant_set(dp3(8, 3, 6, 0)), InvalidFamily);
  CHECK_THROWS_AS(invariant_set(FamilyDescriptor{Family::hqf, 7, 3, 6, ScrollP2Preset{4, 9}, 0}),
                  InvalidFamily);
  CHECK_THROWS_AS(invariant_set(FamilyDescriptor{Family::hqf, 7, 3, 6, FibrationParams{}, 2}), InvalidFamily);
  CHECK_THROWS_AS(invariant_set(FamilyDescriptor{Family::hqf, 7, 3, 6, FibrationParams{2, std::nullopt}, 0}),
                  InvalidFamily);
  CHECK_THROWS_AS(
      invariant_set(FamilyDescriptor{Family::hqf, 7, 3, 6, FibrationParams{1, std::array<long long, 4>{0, 0, 1, 1}}, 0}),
      InvalidFamily);
  const auto v = descriptor_violations(p2(7, 4, 6, 4, 9));
  REQUIRE(v.size() == 1);
  CHECK(v.front().find("genus") != std::string::npos);
  CHECK(descriptor_violations(p2(7, 3, 6, 4, 9)).empty());
}

TEST_CASE("h1L") {
  CHECK(h1L(p2(7, 3, 6, 4, 9)) == 0);
  CHECK(h1L(dp3(9, 7, 6, 2)) == 0);
  CHECK(h1L(p2(7, 3, 7, 4, 9)) == 1);
  CHECK(h1L(hqf(7, 3, 6)) == 0);
  CHECK(h1L(hqf(7, 2, 6)) == -1);
}

TEST_CASE("consistency reports") {
  const FamilyDescriptor with_split{Family::hqf, 7, 3, 6, FibrationParams{1, std::array<long long, 4>{0, 1, 1, 1}}, 0};
  CHECK(consistency_report(with_split).all_pass());
  REQUIRE(consistency_report(with_split).find("h0E") != nullptr);
  CHECK(consistency_report(with_split).find("h0E")->pass);
  CHECK(consistency_report(p2(7, 3, 6, 4, 9)).all_pass());
  const ConsistencyReport bad = consistency_report(p2(7, 4, 6, 4, 9));
  CHECK_FALSE(bad.all_pass());
  REQUIRE(bad.find("genus") != nullptr);
  CHECK_FALSE(bad.find("genus")->pass);
  CHECK(bad.find("no-such-check") == nullptr);
  for (const auto& row : builtin_table_rows()) {
    CHECK_MESSAGE(consistency_report(row.descriptor).all_pass(), row.label);
  }
}

TEST_CASE("closed forms agree with the ring oracle on valid descriptors") {
  for (auto f : {Family::scroll_p2, Family::scroll_q, Family::hqf, Family::del_pezzo3}) {
    for (const auto& desc : sweep(f)) {
      if (desc.n != 6) continue;
      REQUIRE(same_intersection_numbers(invariant_set(desc), invariants_from_ring(ambient_preset(desc))));
    }
  }
}

TEST_CASE("Hilbert polynomial t^2 coefficient encodes the genus") {
  for (auto f : {Family::hqf, Family::del_pezzo3, Family::scroll_p2, Family::scroll_q}) {
    for (const auto& desc : sweep(f)) {
      const RationalPolynomial p = hilbert_polynomial_of(invariant_set(desc));
      REQUIRE(p.coefficient(3) * 6 == desc.d);
      // -KL^2/4 with KL^2 = 2g - 2 - 2d.
      REQUIRE(p.coefficient(2) == Rational(2 * desc.d + 2 - 2 * desc.g, 4));
    }
  }
}

TEST_CASE("family names") {
  CHECK(to_string(Family::del_pezzo3) == "dp3");
  CHECK(parse_family("del-pezzo3") == Family::del_pezzo3);
  CHECK(parse_family("scroll-q") == Family::scroll_q);
  CHECK_FALSE(parse_family("cubic").has_value());
  CHECK(fibre_degree(Family::hqf) == 2);
  CHECK(is_fibration(Family::del_pezzo3));
  CHECK_FALSE(is_fibration(Family::scroll_q));
}

#include <gtest/gtest.h>

#include "support.hpp"
#include "syzlab/borel.hpp"
#include "syzlab/error.hpp"

using namespace syzlab;
using namespace syzlab::test;

TEST(Borel, RestrictionImages) {
  auto p = build_borel_pair(1, 1);
  EXPECT_EQ(p.restriction.image(0), P(p.rh, "t1^2+t1*w1"));
  EXPECT_EQ(p.restriction.image(1), P(p.rh, "w1"));
  auto q = build_borel_pair(1, 2);
  EXPECT_EQ(q.restriction.image(0), P(q.rh, "t1^2+t1*(w1+w2)"));
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      auto pair = build_borel_pair(n, m);
      for (int j = 0; j < m; ++j) {
        EXPECT_EQ(pair.restriction.image(static_cast<std::size_t>(n + j)),
                  Polynomial::variable(pair.rh, static_cast<std::size_t>(n + j)));
      }
    }
  }
  EXPECT_THROW(build_borel_pair(0, 1), InvalidArgument);
  EXPECT_THROW(build_borel_pair(5, 4), InvalidArgument);
}

TEST(Borel, BasisForSmallCases) {
  auto one = verify_basis_freeness(build_borel_pair(1, 1), 8);
  EXPECT_TRUE(one.passed);
  ASSERT_EQ(one.freeness.basis.size(), 2U);
  auto two = verify_basis_freeness(build_borel_pair(2, 1), 8);
  EXPECT_TRUE(two.passed);
  EXPECT_EQ(two.freeness.basis.size(), 4U);
}

TEST(Borel, BasisGrid) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      auto cert = verify_basis_freeness(build_borel_pair(n, m), 8);
      EXPECT_TRUE(cert.passed) << n << "," << m << " " << cert.to_json().dump();
      EXPECT_EQ(cert.freeness.basis.size(), static_cast<std::size_t>(1U << n));
    }
  }
}

TEST(Borel, SeriesOfTheFreeExtension) {
  // (1+s)/((1-s^2)(1-s)) = 1/(1-s)^2
  EXPECT_TRUE(free_extension_series_check(
      {series("1", {1, 1}), series("1", {1, 2}), series("1 + s", {})}));
}

TEST(Weyl, SmallDegreeInvariants) {
  auto cert = weyl_invariants_check(build_borel_pair(1, 1), 8);
  EXPECT_TRUE(cert.passed);
  EXPECT_EQ(cert.dimensions.at(1), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(cert.dimensions.at(2), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_TRUE(cert.generators_fixed);
  EXPECT_TRUE(cert.involutions);
}

TEST(Weyl, TwoGenerators) {
  auto cert = weyl_invariants_check(build_borel_pair(2, 1), 8);
  EXPECT_TRUE(cert.passed);
  EXPECT_TRUE(cert.commuting);
  EXPECT_EQ(cert.degree_bound, 8);
  EXPECT_EQ(weyl_invariants_check(build_borel_pair(2, 1)).degree_bound, 8);
}

TEST(Weyl, OnlyForOneW) { EXPECT_THROW(weyl_action(build_borel_pair(1, 2)), InvalidArgument); }

TEST(SeriesCatalog, ParsesAndChecks) {
  auto catalog = nlohmann::json::parse(R"({"pairs": [
    {"name": "ok", "bk": {"num": "1", "den": [1]}, "bg": {"num": "1", "den": [2]},
     "fibers": [{"num": "1 + s", "den": []}]},
    {"name": "bad", "bk": {"num": "1", "den": [1]}, "bg": {"num": "1", "den": [2]},
     "fibers": [{"num": "1 + s^2", "den": []}], "expected": false}]})");
  auto entries = parse_series_catalog(catalog);
  ASSERT_EQ(entries.size(), 2U);
  EXPECT_TRUE(free_extension_series_check(entries[0].chain));
  EXPECT_FALSE(free_extension_series_check(entries[1].chain));
  EXPECT_FALSE(entries[1].expected);
  EXPECT_THROW(parse_series_catalog(nlohmann::json::parse("{}")), ParseError);
}

TEST(Euler, RestrictionTable) {
  auto cert = euler_class_restriction_table();
  EXPECT_TRUE(cert.passed);
  ASSERT_EQ(cert.rows.size(), 3U);
  EXPECT_EQ(cert.rows[0].image.to_string(), "t^2");
  EXPECT_TRUE(cert.rows[1].image.is_zero());
  EXPECT_TRUE(cert.rows[2].image.is_zero());
  EXPECT_EQ(cert.consistent_classes, std::vector<std::string>{"x^2+x*w"});
  EXPECT_EQ(cert.to_json()["class"], "x^2+x*w");
}

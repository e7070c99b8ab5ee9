#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "syzlab/error.hpp"

using namespace syzlab;
using namespace syzlab::test;

TEST(IntPolynomial, ArithmeticAndText) {
  auto a = parse_int_polynomial("1 + 2s - s^3");
  EXPECT_EQ(a.coefficient(0), 1);
  EXPECT_EQ(a.coefficient(1), 2);
  EXPECT_EQ(a.coefficient(3), -1);
  EXPECT_EQ(a.to_string(), "1 + 2s - s^3");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_EQ((IntPolynomial::one_minus(1) * IntPolynomial::monomial(0) + IntPolynomial::monomial(1)).to_string(),
            "1");
  EXPECT_EQ(IntPolynomial::monomial(-2).to_string(), "s^-2");
  EXPECT_EQ(parse_int_polynomial(IntPolynomial::monomial(-2, -3).to_string()), IntPolynomial::monomial(-2, -3));
}

TEST(IntPolynomial, ExactDivision) {
  auto p = parse_int_polynomial("1 - s^2");
  IntPolynomial q;
  ASSERT_TRUE(p.divide_exact(IntPolynomial::one_minus(1), q));
  EXPECT_EQ(q, parse_int_polynomial("1 + s"));
  EXPECT_FALSE(parse_int_polynomial("1 + s^2").divide_exact(IntPolynomial::one_minus(1), q));
}

TEST(RationalSeries, RingSeries) {
  auto r = tw();
  EXPECT_EQ(RationalSeries::of_ring(*r), series("1", {1, 1}));
  EXPECT_EQ(RationalSeries::of_ring(*r).expand(0, 4), (std::vector<long long>{1, 2, 3, 4, 5}));
}

TEST(RationalSeries, QuotientByNonzerodivisor) {
  auto r = tw();
  auto hs = hilbert_series(quotient(r, {"t^2+t*w"}));
  EXPECT_EQ(hs, series("1 + s", {1}));
  EXPECT_EQ(hs, series("1 - s^2", {1, 1}));
  EXPECT_EQ(hs.expand(0, 5), (std::vector<long long>{1, 2, 2, 2, 2, 2}));
}

TEST(RationalSeries, FreeExtensionIdentity) {
  // (1+s)^n / ((1-s^2)^n (1-s)^m) = 1/(1-s)^{n+m}
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      IntPolynomial fiber = IntPolynomial::constant(1);
      std::vector<int> den;
      for (int i = 0; i < n; ++i) {
        fiber = fiber * parse_int_polynomial("1 + s");
        den.push_back(2);
      }
      for (int j = 0; j < m; ++j) den.push_back(1);
      EXPECT_EQ(RationalSeries(fiber, den), RationalSeries(IntPolynomial::constant(1), std::vector<int>(n + m, 1)));
    }
  }
}

TEST(RationalSeries, PoleOrderIsDimension) {
  EXPECT_EQ(series("1", {1, 1}).pole_order(), 2);
  EXPECT_EQ(series("1 + s", {1}).pole_order(), 1);
  EXPECT_EQ(series("1 - s^2", {1, 1}).pole_order(), 1);
  EXPECT_EQ(series("1 + 2s + s^2", {}).pole_order(), 0);
  EXPECT_EQ(series("0", {1}).pole_order(), -1);
}

TEST(RationalSeries, JsonRoundTrip) {
  auto s = series("s^-3 + 2 - s^4", {1, 2, 2});
  EXPECT_EQ(RationalSeries::from_json(s.to_json()), s);
  EXPECT_EQ(RationalSeries::from_json(nlohmann::json{{"num", 1}, {"den", {1}}}), series("1", {1}));
}

TEST(RationalSeries, Additivity) {
  auto r = tw();
  auto R = free_module(r, 1);
  std::vector<std::pair<PresentedModule, int>> parts{{R, 1}, {R, 0}};
  EXPECT_EQ(hilbert_series(module_assemble(parts)), series("s + 1", {1, 1}));
  EXPECT_EQ(series("s", {1, 1}) + series("1", {1, 1}), series("1 + s", {1, 1}));
}

TEST(RationalSeries, MonomialNumeratorMatchesCounting) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = make_standard_ring({"a", "b", "c", "d"});
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
      std::vector<int> e(4);
      for (auto& x : e) x = static_cast<int>(rng() % 3);
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.push_back(Monomial::from_exponents(*r, e));
    }
    RationalSeries hs(monomial_hilbert_numerator(*r, gens), {1, 1, 1, 1});
    FreeModule F = FreeModule::of_rank(r, 1);
    std::vector<ModuleElement> rels;
    for (const auto& g : gens) rels.push_back(ModuleElement{{Polynomial::monomial(r, g)}});
    for (int d = 0; d <= 7; ++d) {
      EXPECT_EQ(hs.coefficient(d), static_cast<long long>(oracle::quotient_dimension(F, rels, d)));
    }
  }
}

TEST(RationalSeries, EngineSeriesMatchesOracle) {
  int k = 0;
  for (const auto& M : random_modules(55, 25)) {
    SCOPED_TRACE("sample " + std::to_string(k++));
    const int lo = lowest_twist(M.ambient());
    auto hs = hilbert_series(M);
    auto dims = oracle_dimensions(M, lo, 7);
    EXPECT_EQ(hs.expand(lo, lo + 7), dims);
  }
}

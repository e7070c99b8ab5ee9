#include <gtest/gtest.h>

#include "support.hpp"
#include "syzlab/borel.hpp"
#include "syzlab/error.hpp"
#include "syzlab/syzygy.hpp"

using namespace syzlab;
using namespace syzlab::test;

TEST(Syzygy, FreeModulesHaveInfiniteOrder) {
  auto report = syzygy_report(free_module(tw(), 2));
  EXPECT_TRUE(report.order.is_infinite());
  EXPECT_TRUE(report.free_verified);
  EXPECT_TRUE(report.is_jth_syzygy(1));
  EXPECT_TRUE(report.is_jth_syzygy(7));
  EXPECT_EQ(report.to_json()["syzygy_order"], "infinite");
}

TEST(Syzygy, MaximalIdeal) {
  auto M = maximal_ideal(tw());
  EXPECT_TRUE(is_jth_syzygy(M, 1));
  EXPECT_FALSE(is_jth_syzygy(M, 2));
  EXPECT_EQ(syzygy_order(M), SyzygyOrder::finite(1));
  auto report = syzygy_report(M);
  EXPECT_EQ(report.ext_codims.at(1), 2);
  EXPECT_EQ(report.ext_codims.at(2), std::nullopt);
}

TEST(Syzygy, TorsionModules) {
  auto r = tw();
  EXPECT_FALSE(is_jth_syzygy(quotient(r, {"t", "w"}), 1));
  EXPECT_EQ(syzygy_order(quotient(r, {"t", "w"})), SyzygyOrder::finite(0));
  EXPECT_EQ(syzygy_order(quotient(r, {"t^2+t*w"})), SyzygyOrder::finite(0));
}

TEST(Syzygy, ZeroModuleIsFree) {
  auto report = syzygy_report(quotient(tw(), {"1"}));
  EXPECT_TRUE(report.order.is_infinite());
  EXPECT_FALSE(report.depth.has_value());
}

TEST(Syzygy, DepthExamples) {
  auto r = tw();
  EXPECT_EQ(depth(free_module(r, 1)), 2);
  EXPECT_EQ(depth(quotient(r, {"t", "w"})), 0);
  EXPECT_EQ(depth(quotient(r, {"t^2+t*w"})), 1);
}

TEST(Syzygy, JMustBePositive) { EXPECT_THROW(is_jth_syzygy(free_module(tw(), 1), 0), InvalidArgument); }

TEST(Syzygy, KernelsAreFirstSyzygies) {
  // Any submodule of a free module is torsion-free, i.e. at least a first syzygy.
  int k = 0;
  for (const auto& M : random_modules(4242, 20)) {
    SCOPED_TRACE("sample " + std::to_string(k++));
    auto K = kernel_module(M.relations());
    auto order = syzygy_order(K);
    EXPECT_TRUE(order.is_infinite() || order.value() >= 1);
  }
}

TEST(Syzygy, SecondSyzygyOfResidueField) {
  // In three variables the second syzygy module of k is a second syzygy but not a third.
  auto r = make_standard_ring({"a", "b", "c"});
  auto res = minimal_free_resolution(quotient(r, {"a", "b", "c"}));
  auto image = PresentedModule(res.complex.maps[1]);  // coker d_2 = im d_1
  auto syz2 = kernel_module(res.complex.maps[0]);
  EXPECT_EQ(syzygy_order(syz2), SyzygyOrder::finite(2));
  EXPECT_EQ(syzygy_order(image), SyzygyOrder::finite(1));
}

TEST(FreeExtension, IdentityIsFreeOfRankOne) {
  auto r = tw();
  auto cert = verify_free_extension(RingMap::identity(r), 6);
  EXPECT_TRUE(cert.passed);
  EXPECT_EQ(cert.basis.size(), 1U);
}

TEST(FreeExtension, NonFiniteMapFails) {
  auto g = make_ring({"c"}, {2});
  auto h = tw();
  RingMap phi(g, h, {P(h, "t^2+t*w")});
  auto cert = verify_free_extension(phi, 6);
  EXPECT_FALSE(cert.passed);
  EXPECT_FALSE(cert.generates);
}

TEST(FreeExtension, SquaringMap) {
  auto g = make_ring({"c"}, {2});
  auto h = make_standard_ring({"t"});
  RingMap phi(g, h, {P(h, "t^2")});
  auto cert = verify_free_extension(phi, 8);
  EXPECT_TRUE(cert.passed);
  EXPECT_EQ(cert.basis.size(), 2U);
}

TEST(Transfer, BorelRestrictionPreservesOrder) {
  auto pair = build_borel_pair(1, 1);
  auto g = pair.rg;
  auto F = FreeModule::of_rank(g, 1);
  auto free_report = syzygy_transfer_check(PresentedModule::free(FreeModule::of_rank(g, 2)), pair.restriction);
  EXPECT_TRUE(free_report.agree);
  EXPECT_TRUE(free_report.target.order.is_infinite());

  PresentedModule torsion(F, {ModuleElement{{Polynomial::variable(g, "c1")}}});
  auto t = syzygy_transfer_check(torsion, pair.restriction);
  EXPECT_TRUE(t.agree);
  EXPECT_EQ(t.source.order, SyzygyOrder::finite(0));

  ModuleMap f(FreeModule(g, {2, 1}), F,
              {ModuleElement{{Polynomial::variable(g, "c1")}}, ModuleElement{{Polynomial::variable(g, "w1")}}});
  auto k = syzygy_transfer_check(kernel_module(f), pair.restriction);
  EXPECT_TRUE(k.agree);
}

TEST(Transfer, RejectsNonFreeMaps) {
  auto g = make_ring({"c"}, {2});
  auto h = tw();
  RingMap phi(g, h, {P(h, "t^2+t*w")});
  EXPECT_THROW(syzygy_transfer_check(free_module(g, 1), phi), InvalidArgument);
}

#include <map>

#include <gtest/gtest.h>

#include "support.hpp"
#include "syzlab/bigpolygon.hpp"
#include "syzlab/error.hpp"
#include "syzlab/syzygy.hpp"

using namespace syzlab;
using namespace syzlab::test;

namespace {

PresentedModule polygon_quotient(int n) {
  auto ring = polygon_ring(n);
  FreeModule F = FreeModule::of_rank(ring, 1);
  std::vector<ModuleElement> rels;
  for (const auto& y : polygon_elements(ring, n, 1)) rels.push_back(ModuleElement{{y}});
  return PresentedModule(F, rels);
}

}  // namespace

TEST(Kernel, KoszulRelation) {
  auto r = tw();
  ModuleMap f(FreeModule(r, {1, 1}), FreeModule::of_rank(r, 1),
              {ModuleElement{{P(r, "t")}}, ModuleElement{{P(r, "w")}}});
  auto k = kernel(f);
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0], (ModuleElement{{P(r, "w"), P(r, "t")}}));
}

TEST(Kernel, IdentityHasNoKernel) {
  auto r = tw();
  EXPECT_TRUE(kernel(ModuleMap::identity(FreeModule::of_rank(r, 3))).empty());
}

TEST(Kernel, PolygonKernelContainsWEmpty) {
  auto iota = build_iota(PolygonConfig::equilateral(3, 1, 1));
  const auto& f = iota.map;
  auto ys = polygon_elements(f.ring(), 3, 1);
  // W_∅ + y1 V1 + y2 V2 + y3 V3 (signs vanish in characteristic two).
  ModuleElement v = ModuleElement::zero(f.source());
  const std::size_t shorts = iota.short_subsets.size();
  v[shorts] = Polynomial::one(f.ring());
  for (std::size_t j = 0; j < 3; ++j) v[1 + j] = ys[j];
  EXPECT_TRUE(f.apply(v).is_zero());
  EXPECT_TRUE(oracle::contains(f.source(), kernel(f), v));
}

TEST(Kernel, RandomMapsAgreeWithOracle) {
  int k = 0;
  for (const auto& M : random_modules(1234, 25)) {
    SCOPED_TRACE("sample " + std::to_string(k++));
    const ModuleMap& f = M.relations();
    auto ker = kernel(f);
    for (const auto& v : ker) EXPECT_TRUE(f.apply(v).is_zero());
    const int lo = lowest_twist(f.source());
    for (int d = lo; d <= lo + 6; ++d) {
      const auto dim = DegreePiece(f.source(), d).size();
      const auto rank = oracle::map_rank(f.source(), f.target(), f.columns(), d);
      EXPECT_EQ(oracle::submodule_dimension(f.source(), ker, d), dim - rank) << "degree " << d;
    }
  }
}

TEST(Cokernel, Examples) {
  auto r = tw();
  auto zero = cokernel_presentation(ModuleMap::zero(FreeModule(r, {}), FreeModule::of_rank(r, 1)));
  EXPECT_EQ(zero.num_relations(), 0U);
  EXPECT_EQ(hilbert_series(zero), series("1", {1, 1}));
  ModuleMap y(FreeModule(r, {2}), FreeModule::of_rank(r, 1), {ModuleElement{{P(r, "t^2+t*w")}}});
  EXPECT_EQ(hilbert_series(cokernel_presentation(y)), series("1 + s", {1}));
  EXPECT_EQ(dimension(quotient(r, {"t", "w"})), 0);
}

TEST(Dimension, Examples) {
  auto r = tw();
  EXPECT_EQ(dimension(quotient(r, {"t", "w"})), 0);
  EXPECT_EQ(dimension(quotient(r, {"t^2+t*w"})), 1);
  EXPECT_EQ(dimension(free_module(make_standard_ring({"a", "b", "c", "d"}), 1)), 4);
  EXPECT_EQ(dimension(quotient(r, {"1"})), -1);
  EXPECT_TRUE(is_zero_module(quotient(r, {"1"})));
}

TEST(Resolution, ResidueField) {
  auto res = minimal_free_resolution(quotient(tw(), {"t", "w"}));
  EXPECT_EQ(res.betti.total(0), 1U);
  EXPECT_EQ(res.betti.total(1), 2U);
  EXPECT_EQ(res.betti.total(2), 1U);
  EXPECT_EQ(res.betti.at(2, 2), 1U);
  EXPECT_EQ(res.projective_dimension(), 2);
}

TEST(Resolution, FreeModule) {
  auto res = minimal_free_resolution(free_module(tw(), 3));
  EXPECT_EQ(res.projective_dimension(), 0);
  EXPECT_EQ(res.betti.total(0), 3U);
}

TEST(Resolution, RegularSequenceGivesBinomials) {
  for (int n : {2, 3}) {
    auto M = polygon_quotient(n);
    auto res = minimal_free_resolution(M);
    long long binom = 1;
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(res.betti.total(i), static_cast<std::size_t>(binom));
      EXPECT_EQ(res.betti.at(i, 2 * i), static_cast<std::size_t>(binom));
      binom = binom * (n - i) / (i + 1);
    }
    // Koszul homology agrees in every degree that carries a Betti number.
    for (int d = 0; d <= 2 * n; ++d) {
      auto tor = oracle::koszul_betti(M.ambient(), M.relations().columns(), d);
      for (int i = 0; i <= n; ++i) EXPECT_EQ(tor[static_cast<std::size_t>(i)], res.betti.at(i, d));
    }
  }
}

TEST(Resolution, RandomModulesExactAndMinimal) {
  int k = 0;
  for (const auto& M : random_modules(2024, 24)) {
    SCOPED_TRACE("sample " + std::to_string(k++) + "\n" + M.serialize());
    auto res = minimal_free_resolution(M);
    EXPECT_TRUE(res.complex.is_complex());
    auto exact = check_resolution_exactness(res, M, 8);
    EXPECT_TRUE(exact.passed) << exact.witness;
    const int lo = lowest_twist(M.ambient());
    const std::size_t n = M.ring()->num_variables();
    for (int d = lo; d <= lo + 6; ++d) {
      auto tor = oracle::koszul_betti(M.ambient(), M.relations().columns(), d);
      for (std::size_t i = 0; i <= n; ++i) {
        EXPECT_EQ(tor[i], res.betti.at(static_cast<int>(i), d)) << "Tor_" << i << " degree " << d;
      }
    }
  }
}

TEST(Resolution, AuslanderBuchsbaum) {
  for (const auto& M : random_modules(77, 24)) {
    if (is_zero_module(M)) continue;
    auto res = minimal_free_resolution(M);
    EXPECT_EQ(depth(M) + res.projective_dimension(), static_cast<int>(M.ring()->num_variables()));
  }
  auto r = tw();
  EXPECT_EQ(depth(free_module(r, 1)), 2);
  EXPECT_EQ(depth(quotient(r, {"t", "w"})), 0);
  EXPECT_EQ(depth(quotient(r, {"t^2+t*w"})), 1);
  EXPECT_THROW(depth(quotient(r, {"1"})), InvalidArgument);
}

TEST(Resolution, EulerCharacteristicGivesSeries) {
  for (const auto& M : random_modules(88, 20)) {
    auto res = minimal_free_resolution(M);
    RationalSeries alternating;
    for (std::size_t i = 0; i < res.complex.modules.size(); ++i) {
      auto s = free_series(res.complex.modules[i]);
      alternating = i % 2 == 0 ? alternating + s : alternating - s;
    }
    EXPECT_EQ(alternating, hilbert_series(M));
  }
}

TEST(Resolution, ThreadCountDoesNotMatter) {
  for (const auto& M : random_modules(99, 12)) {
    EngineOptions many;
    many.threads = 4;
    EXPECT_EQ(serialize_complex(minimal_free_resolution(M).complex),
              serialize_complex(minimal_free_resolution(M, many).complex));
  }
}

TEST(Resolution, ComplexTextRoundTrip) {
  for (const auto& M : random_modules(111, 8)) {
    auto cx = minimal_free_resolution(M).complex;
    auto text = serialize_complex(cx);
    EXPECT_EQ(serialize_complex(parse_complex(M.ring(), text)), text);
  }
}

TEST(Series, AdditivityOnExactSequences) {
  // 0 → ker f → F → G → coker f → 0
  for (const auto& M : random_modules(321, 20)) {
    const ModuleMap& f = M.relations();
    auto lhs = free_series(f.source()) + hilbert_series(cokernel_presentation(f));
    auto rhs = hilbert_series(kernel_module(f)) + free_series(f.target());
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(MinimalPresentation, DropsUnitRelations) {
  auto r = tw();
  FreeModule F(r, {0, 1});
  PresentedModule M(F, {ModuleElement{{P(r, "t"), P(r, "1")}}, ModuleElement{{P(r, "w^2"), P(r, "0")}}});
  auto minimal = minimal_presentation(M);
  EXPECT_EQ(minimal.num_generators(), 1U);
  EXPECT_EQ(hilbert_series(minimal), hilbert_series(M));
}

TEST(Ext, ResidueField) {
  auto ext = ext_modules(quotient(tw(), {"t", "w"}), 2);
  ASSERT_EQ(ext.modules.size(), 2U);
  EXPECT_TRUE(is_zero_module(ext.modules[0]));
  EXPECT_FALSE(is_zero_module(ext.modules[1]));
  EXPECT_EQ(dimension(ext.modules[1]), 0);
}

TEST(Ext, MaximalIdeal) {
  auto ext = ext_modules(maximal_ideal(tw()), 2);
  EXPECT_FALSE(is_zero_module(ext.modules[0]));
  EXPECT_EQ(dimension(ext.modules[0]), 0);
  EXPECT_TRUE(is_zero_module(ext.modules[1]));
}

TEST(Ext, FreeModuleHasNone) {
  auto ext = ext_modules(free_module(tw(), 2), 2);
  for (const auto& e : ext.modules) EXPECT_TRUE(is_zero_module(e));
}

TEST(Ext, BeyondTheVariablesIsTruncated) {
  auto ext = ext_modules(quotient(tw(), {"t"}), 5);
  EXPECT_TRUE(ext.truncated);
  EXPECT_EQ(ext.modules.size(), 2U);
}

TEST(Homology, KoszulComplexIsAcyclic) {
  auto ring = polygon_ring(3);
  auto kos = koszul_complex(ring, polygon_elements(ring, 3, 1));
  ASSERT_TRUE(kos.complex.is_complex());
  for (std::size_t i = 1; i < kos.complex.maps.size(); ++i) {
    auto h = homology(kos.complex.maps[i], kos.complex.maps[i - 1]);
    EXPECT_TRUE(is_zero_module(h)) << "H_" << i;
  }
}

TEST(BaseChange, Examples) {
  auto g = make_ring({"c", "w"}, {2, 1});
  auto h = tw();
  RingMap phi(g, h, {P(h, "t^2+t*w"), P(h, "w")});
  auto F = FreeModule::of_rank(g, 2);
  auto free_image = base_change(PresentedModule::free(F), phi);
  EXPECT_EQ(free_image.num_generators(), 2U);
  EXPECT_EQ(free_image.num_relations(), 0U);
  PresentedModule M(FreeModule::of_rank(g, 1), {ModuleElement{{P(g, "c")}}});
  auto N = base_change(M, phi);
  EXPECT_EQ(hilbert_series(N), hilbert_series(quotient(h, {"t^2+t*w"})));
  auto zero = base_change(PresentedModule::free(FreeModule(g, {})), phi);
  EXPECT_TRUE(is_zero_module(zero));
}

TEST(Assemble, DirectSums) {
  auto r = tw();
  auto R = free_module(r, 1);
  std::vector<std::pair<PresentedModule, int>> two{{R, 0}, {R, 0}};
  auto sum = module_assemble(two);
  EXPECT_EQ(sum.num_generators(), 2U);
  EXPECT_TRUE(syzygy_order(sum).is_infinite());
}

TEST(Assemble, PolygonPartsMatchOracle) {
  auto pm = bigpolygon_module(PolygonConfig::equilateral(3, 1, 1));
  const auto& M = pm.module;
  const int lo = lowest_twist(M.ambient());
  EXPECT_EQ(hilbert_series(M).expand(lo, lo + 8), oracle_dimensions(M, lo, 8));
  EXPECT_EQ(hilbert_series(M), hilbert_series(pm.kernel) + hilbert_series(pm.cokernel));
}

#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "syzlab/bigpolygon.hpp"
#include "syzlab/error.hpp"

using namespace syzlab;
using namespace syzlab::test;

namespace {

class MemoryCache : public ComputationCache {
 public:
  std::optional<std::string> load(std::string_view kind, const std::string& key) override {
    auto it = entries_.find(std::string(kind) + "\n" + key);
    if (it == entries_.end()) return std::nullopt;
    ++hits;
    return it->second;
  }
  void store(std::string_view kind, const std::string& key, const std::string& payload) override {
    entries_[std::string(kind) + "\n" + key] = payload;
  }
  int hits = 0;

 private:
  std::map<std::string, std::string> entries_;
};

std::vector<ModuleElement> ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<ModuleElement> out;
  for (const char* g : gens) out.push_back(ModuleElement{{P(r, g)}});
  return out;
}

// Reduced: no term of any element is divisible by the leading term of
// another element in the same component.
bool is_reduced(const GroebnerBasis& gb) {
  const auto leads = gb.leading_terms();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (const auto& t : gb.vectors()[i]) {
      for (std::size_t j = 0; j < leads.size(); ++j) {
        if (i == j) continue;
        if (leads[j].comp == t.comp && leads[j].mono.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

void expect_oracle_agrees(const FreeModule& F, const std::vector<ModuleElement>& gens,
                          const GroebnerBasis& gb, int bound) {
  auto basis = gb.generators();
  std::vector<ModuleElement> initial;
  for (const auto& t : gb.leading_terms()) {
    ModuleElement e = ModuleElement::zero(F);
    e[t.comp] = Polynomial::monomial(F.ring(), t.mono);
    initial.push_back(e);
  }
  const int lo = lowest_twist(F);
  for (int d = lo; d <= lo + bound; ++d) {
    const auto want = oracle::submodule_dimension(F, gens, d);
    EXPECT_EQ(oracle::submodule_dimension(F, basis, d), want) << "degree " << d;
    // Leading terms span the initial module in every degree.
    EXPECT_EQ(oracle::submodule_dimension(F, initial, d), want) << "initial, degree " << d;
  }
  for (const auto& b : basis) EXPECT_TRUE(oracle::contains(F, gens, b));
}

}  // namespace

TEST(Groebner, OneBuchbergerStep) {
  auto r = tw();
  auto gens = ideal(r, {"t^2+t*w", "w"});
  auto gb = reduced_groebner_basis(FreeModule::of_rank(r, 1), gens);
  ASSERT_EQ(gb.size(), 2U);
  auto g = gb.generators();
  std::vector<std::string> got{g[0][0].to_string(), g[1][0].to_string()};
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"t^2", "w"}));
}

TEST(Groebner, ZeroIdealHasEmptyBasis) {
  auto r = tw();
  std::vector<Polynomial> gens{Polynomial::zero(r)};
  EXPECT_TRUE(ideal_groebner_basis(r, gens).empty());
  EXPECT_TRUE(ideal_groebner_basis(r, std::vector<Polynomial>{}).empty());
}

TEST(Groebner, NormalForms) {
  auto r = tw();
  std::vector<Polynomial> gens{P(r, "w"), P(r, "t^2")};
  auto gb = ideal_groebner_basis(r, gens);
  EXPECT_TRUE(normal_form(P(r, "t^3"), gb).is_zero());
  EXPECT_EQ(normal_form(P(r, "t"), gb), P(r, "t"));
  auto empty = ideal_groebner_basis(r, std::vector<Polynomial>{});
  EXPECT_EQ(normal_form(P(r, "t^2+w"), empty), P(r, "t^2+w"));
}

TEST(Groebner, InitialIdeal) {
  auto r = tw();
  auto mono = ideal_groebner_basis(r, std::vector<Polynomial>{P(r, "w"), P(r, "t^2")});
  EXPECT_EQ(initial_module(mono).size(), 2U);
  auto single = ideal_groebner_basis(r, std::vector<Polynomial>{P(r, "t^2+t*w")});
  auto init = initial_module(single);
  ASSERT_EQ(init.size(), 1U);
  EXPECT_EQ(to_string(*r, init[0].mono), "t^2");
}

TEST(Groebner, PolygonElementsReduceToZero) {
  for (int n : {2, 3, 4}) {
    auto ring = polygon_ring(n);
    auto ys = polygon_elements(ring, n, 1);
    auto gb = ideal_groebner_basis(ring, ys);
    for (const auto& y : ys) EXPECT_TRUE(normal_form(y, gb).is_zero());
    std::vector<ModuleElement> gens;
    for (const auto& y : ys) gens.push_back(ModuleElement{{y}});
    expect_oracle_agrees(FreeModule::of_rank(ring, 1), gens, gb, 8);
  }
}

TEST(Groebner, InhomogeneousInputRejected) {
  auto r = tw();
  EXPECT_THROW(ideal_groebner_basis(r, std::vector<Polynomial>{P(r, "t+w^2")}), InvalidArgument);
}

TEST(Groebner, WeightedDegrees) {
  auto r = make_ring({"c", "w"}, {2, 1});
  std::vector<Polynomial> gens{P(r, "c+w^2"), P(r, "c*w")};
  auto gb = ideal_groebner_basis(r, gens);
  std::vector<ModuleElement> es{ModuleElement{{gens[0]}}, ModuleElement{{gens[1]}}};
  expect_oracle_agrees(FreeModule::of_rank(r, 1), es, gb, 8);
}

TEST(Groebner, RandomModulesAgreeWithOracle) {
  int k = 0;
  for (const auto& M : random_modules(101, 30)) {
    SCOPED_TRACE("sample " + std::to_string(k++));
    auto gens = M.relations().columns();
    auto gb = reduced_groebner_basis(M.ambient(), gens);
    EXPECT_TRUE(is_reduced(gb));
    expect_oracle_agrees(M.ambient(), gens, gb, 6);
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
  }
}

TEST(Groebner, InvariantUnderPermutationAndThreads) {
  std::mt19937_64 rng(7);
  for (const auto& M : random_modules(202, 25)) {
    auto gens = M.relations().columns();
    const auto reference = reduced_groebner_basis(M.ambient(), gens).serialize();
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      EngineOptions options;
      options.threads = 1 + static_cast<unsigned>(trial) * 3;
      EXPECT_EQ(reduced_groebner_basis(M.ambient(), gens, options).serialize(), reference);
    }
  }
}

TEST(Groebner, RedundantGeneratorsDoNotChangeTheBasis) {
  for (const auto& M : random_modules(303, 20)) {
    auto gens = M.relations().columns();
    const auto reference = reduced_groebner_basis(M.ambient(), gens).serialize();
    auto doubled = gens;
    doubled.push_back(gens.front().scaled(Polynomial::variable(M.ring(), 0)));
    doubled.push_back(gens.front());
    EXPECT_EQ(reduced_groebner_basis(M.ambient(), doubled).serialize(), reference);
  }
}

TEST(Groebner, CachedBasisIsIdentical) {
  MemoryCache cache;
  EngineOptions options;
  options.cache = &cache;
  for (const auto& M : random_modules(404, 10)) {
    auto gens = M.relations().columns();
    auto fresh = reduced_groebner_basis(M.ambient(), gens).serialize();
    auto first = reduced_groebner_basis(M.ambient(), gens, options).serialize();
    auto second = reduced_groebner_basis(M.ambient(), gens, options).serialize();
    EXPECT_EQ(first, fresh);
    EXPECT_EQ(second, fresh);
  }
  EXPECT_GE(cache.hits, 10);
}

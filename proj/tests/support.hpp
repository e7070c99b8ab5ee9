#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "random_modules.hpp"
#include "syzlab/homalg.hpp"
#include "syzlab/oracle.hpp"

namespace syzlab::test {

inline RingPtr tw() { return make_standard_ring({"t", "w"}); }

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline PresentedModule quotient(const RingPtr& r, std::initializer_list<const char*> gens) {
  FreeModule F = FreeModule::of_rank(r, 1);
  std::vector<ModuleElement> rels;
  for (const char* g : gens) rels.push_back(ModuleElement{{P(r, g)}});
  return PresentedModule(F, std::move(rels));
}

inline PresentedModule free_module(const RingPtr& r, std::size_t rank) {
  return PresentedModule::free(FreeModule::of_rank(r, rank));
}

/// (t, w) with generators in degree 1 and the Koszul relation.
inline PresentedModule maximal_ideal(const RingPtr& r) {
  FreeModule F(r, {1, 1});
  return PresentedModule(F, {ModuleElement{{P(r, "w"), P(r, "t")}}});
}

inline RationalSeries series(const std::string& num, std::vector<int> den) {
  return RationalSeries(parse_int_polynomial(num), std::move(den));
}

inline int lowest_twist(const FreeModule& F) {
  int lo = 0;
  for (std::size_t i = 0; i < F.rank(); ++i) lo = i == 0 ? F.twist(i) : std::min(lo, F.twist(i));
  return lo;
}

inline RationalSeries free_series(const FreeModule& F) {
  RationalSeries out;
  const auto unit = RationalSeries::of_ring(*F.ring());
  for (int t : F.twists()) out = out + unit.shifted(t);
  return out;
}

/// dim M_d for d = lo .. lo + bound, straight from linear algebra.
inline std::vector<long long> oracle_dimensions(const PresentedModule& M, int lo, int bound) {
  std::vector<long long> out;
  for (int d = lo; d <= lo + bound; ++d) {
    out.push_back(static_cast<long long>(
        oracle::quotient_dimension(M.ambient(), M.relations().columns(), d)));
  }
  return out;
}

inline std::vector<PresentedModule> random_modules(std::uint64_t seed, int count,
                                                   const cli::RandomModuleShape& shape = {}) {
  std::mt19937_64 rng(seed);
  std::vector<PresentedModule> out;
  for (int k = 0; k < count; ++k) out.push_back(cli::random_module(rng, shape));
  return out;
}

}  // namespace syzlab::test

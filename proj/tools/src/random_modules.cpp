#include "random_modules.hpp"

namespace syzlab::cli {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int degree) {
  std::vector<Monomial> terms;
  if (degree < 0) return Polynomial::zero(ring);
  for (const auto& m : monomials_of_degree(*ring, degree)) {
    if (rng() % 3 == 0) terms.push_back(m);
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

PresentedModule random_module(std::mt19937_64& rng, const RandomModuleShape& shape) {
  const int nvars = uniform(rng, shape.min_vars, shape.max_vars);
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  RingPtr ring = make_standard_ring(std::move(names));

  const int rank = uniform(rng, 1, shape.max_rank);
  std::vector<int> twists;
  for (int i = 0; i < rank; ++i) twists.push_back(-uniform(rng, 0, 1));
  FreeModule F(ring, twists);

  const int count = uniform(rng, 1, shape.max_relations);
  std::vector<ModuleElement> rels;
  while (static_cast<int>(rels.size()) < count) {
    const int degree = uniform(rng, 1, shape.max_degree);
    ModuleElement e = ModuleElement::zero(F);
    for (int i = 0; i < rank; ++i) {
      e[static_cast<std::size_t>(i)] = random_polynomial(rng, ring, degree - twists[static_cast<std::size_t>(i)]);
    }
    if (!e.is_zero()) rels.push_back(std::move(e));
  }
  return PresentedModule(F, std::move(rels));
}

}  // namespace syzlab::cli

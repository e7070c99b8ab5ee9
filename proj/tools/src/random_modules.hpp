#pragma once

#include <random>

#include "syzlab/homalg.hpp"

namespace syzlab::cli {

struct RandomModuleShape {
  int min_vars = 2;
  int max_vars = 4;
  int max_rank = 2;
  int max_relations = 3;
  /// Relation degree is twist + 1 .. twist + max_degree.
  int max_degree = 3;
};

/// Random homogeneous polynomial of the given degree; may be zero.
Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int degree);

/// Small graded module over F2[x1..xk] with random homogeneous relations.
PresentedModule random_module(std::mt19937_64& rng, const RandomModuleShape& shape = {});

}  // namespace syzlab::cli

#pragma once

#include <span>
#include <vector>

#include "syzlab/cache.hpp"
#include "syzlab/module.hpp"

namespace syzlab {

/// Knobs shared by every expensive computation.
struct EngineOptions {
  /// Worker threads for S-pair reduction. Results never depend on it.
  unsigned threads = 1;
  /// Optional store for reduced bases and resolutions; never changes results.
  ComputationCache* cache = nullptr;
};

/// Reduced Gröbner basis of a submodule of a graded free module.
class GroebnerBasis {
 public:
  GroebnerBasis(FreeModule ambient, ModuleOrder order, std::vector<TermVec> basis);

  const FreeModule& ambient() const noexcept { return ambient_; }
  const ModuleOrder& order() const noexcept { return order_; }
  const std::vector<TermVec>& vectors() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool empty() const noexcept { return basis_.empty(); }

  std::vector<ModuleElement> generators() const;
  std::vector<Term> leading_terms() const;

  /// One generator per line; modules prefix each line with the component of
  /// the leading term, e.g. `2: t^2;0;w`.
  std::string serialize() const;

 private:
  FreeModule ambient_;
  ModuleOrder order_;
  std::vector<TermVec> basis_;
};

/// Unique reduced basis of the submodule generated by `gens` under the
/// term-over-position degrevlex order. Generators must be homogeneous.
GroebnerBasis reduced_groebner_basis(const FreeModule& F, std::span<const ModuleElement> gens,
                                     const EngineOptions& options = {});
GroebnerBasis reduced_groebner_basis(const FreeModule& F, const ModuleOrder& order,
                                     std::vector<TermVec> gens, const EngineOptions& options = {});
/// Ideal convenience wrapper (rank-one free module, twist zero).
GroebnerBasis ideal_groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                                   const EngineOptions& options = {});

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Leading terms of the basis, minimalized under divisibility.
std::vector<Term> initial_module(const GroebnerBasis& gb);

/// Lower-level entry points shared with the homological layer.
namespace engine {

struct BuchbergerResult {
  std::vector<TermVec> basis;
  /// Representation of each basis element in terms of the inputs, when tracked.
  std::vector<TermVec> representations;
  /// Inputs that are needed to generate the submodule (graded-minimal subset).
  std::vector<std::size_t> minimal_inputs;
};

/// Homogeneous Buchberger algorithm, normal selection strategy, Gebauer–Möller
/// pair pruning. When `rep_order` is non-null, representations in the free
/// module with one basis element per input are tracked and ordered by it.
BuchbergerResult buchberger(const GradedRing& ring, const ModuleOrder& order,
                            std::vector<TermVec> inputs, const ModuleOrder* rep_order,
                            const EngineOptions& options);

struct Division {
  TermVec remainder;
  /// Terms m·e_k meaning "m times basis element k was subtracted".
  TermVec quotient;
};

/// Full reduction of v by `basis` (each element led by its first term).
TermVec reduce(const ModuleOrder& order, TermVec v, const std::vector<TermVec>& basis);
/// Full reduction recording the quotient, ordered by `quotient_order`.
Division divide(const ModuleOrder& order, TermVec v, const std::vector<TermVec>& basis,
                const ModuleOrder& quotient_order);

struct SchreyerSyzygies {
  ModuleOrder order;
  std::vector<TermVec> syzygies;
};

/// Syzygies of a Gröbner basis via reduced S-pairs. The result is a Gröbner
/// basis of the syzygy module for the induced Schreyer order.
SchreyerSyzygies schreyer_syzygies(const GradedRing& ring, const ModuleOrder& order,
                                   const std::vector<TermVec>& gb, const EngineOptions& options);

}  // namespace engine

}  // namespace syzlab

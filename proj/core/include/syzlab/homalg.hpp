#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzlab/groebner.hpp"
#include "syzlab/series.hpp"

namespace syzlab {

/// Degree-preserving map between graded free modules, stored by columns:
/// column j is the image of basis element j of the source and must be zero
/// or homogeneous of degree source.twist(j).
class ModuleMap {
 public:
  ModuleMap(FreeModule source, FreeModule target, std::vector<ModuleElement> columns);
  static ModuleMap zero(FreeModule source, FreeModule target);
  static ModuleMap identity(const FreeModule& F);
  /// Source twists are read off the (nonzero, homogeneous) columns.
  static ModuleMap from_columns(const FreeModule& target, std::vector<ModuleElement> columns);

  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  const RingPtr& ring() const noexcept { return target_.ring(); }
  const std::vector<ModuleElement>& columns() const noexcept { return columns_; }
  const ModuleElement& column(std::size_t j) const { return columns_.at(j); }
  const Polynomial& entry(std::size_t row, std::size_t col) const { return columns_.at(col)[row]; }

  ModuleElement apply(const ModuleElement& v) const;
  /// this ∘ inner
  ModuleMap compose(const ModuleMap& inner) const;
  /// Hom(-, R): target* → source*.
  ModuleMap dual() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<ModuleElement> columns_;
};

/// Cokernel of `relations` (a map into `ambient`).
class PresentedModule {
 public:
  PresentedModule(FreeModule ambient, std::vector<ModuleElement> relations);
  explicit PresentedModule(const ModuleMap& relations);
  static PresentedModule free(FreeModule F) { return PresentedModule(std::move(F), {}); }

  const FreeModule& ambient() const noexcept { return ambient_; }
  const RingPtr& ring() const noexcept { return ambient_.ring(); }
  const ModuleMap& relations() const noexcept { return relations_; }
  std::size_t num_generators() const noexcept { return ambient_.rank(); }
  std::size_t num_relations() const noexcept { return relations_.source().rank(); }

  /// Same module with every generator degree raised by k.
  PresentedModule shifted(int k) const;

  /// Line format used by module files and cache keys.
  std::string serialize() const;

 private:
  FreeModule ambient_;
  ModuleMap relations_;
};

/// maps[i] : modules[i+1] → modules[i]
struct ChainComplex {
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> maps;

  std::size_t length() const noexcept { return maps.size(); }
  /// Every consecutive composite is exactly zero.
  bool is_complex() const;
};

/// (homological index, internal degree) → rank
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const ChainComplex& resolution);

  std::size_t at(int i, int degree) const;
  /// Total rank of F_i.
  std::size_t total(int i) const;
  const std::map<std::pair<int, int>, std::size_t>& entries() const noexcept { return entries_; }
  int length() const;

  nlohmann::json to_json() const;
  std::string to_string() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::size_t> entries_;
};

struct Resolution {
  ChainComplex complex;
  BettiTable betti;
  /// Projective dimension; 0 for free and for zero modules.
  int projective_dimension() const { return static_cast<int>(complex.length()); }
};

/// Minimal generators of ker f (a submodule of f.source()).
std::vector<ModuleElement> kernel(const ModuleMap& f, const EngineOptions& options = {});

/// ker f presented by its minimal generators and their relations.
PresentedModule kernel_module(const ModuleMap& f, const EngineOptions& options = {});

PresentedModule cokernel_presentation(const ModuleMap& f);

/// Generators that are not needed (unit entries) are removed and the
/// remaining relations thinned to a minimal generating set.
PresentedModule minimal_presentation(const PresentedModule& M, const EngineOptions& options = {});

/// Minimal graded free resolution F_0 ← F_1 ← ... of M. Throws InternalError
/// if it would exceed max_length (default: number of variables).
Resolution minimal_free_resolution(const PresentedModule& M, const EngineOptions& options = {},
                                   std::optional<int> max_length = std::nullopt);

/// Splits off every unit entry of a complex of free modules.
ChainComplex prune(ChainComplex complex);

/// Reduced Gröbner basis of the relations under term-over-position order.
GroebnerBasis relation_basis(const PresentedModule& M, const EngineOptions& options = {});

RationalSeries hilbert_series(const PresentedModule& M, const EngineOptions& options = {});
/// Same, from an already computed relation basis.
RationalSeries hilbert_series(const GroebnerBasis& gb);

/// Krull dimension; −1 for the zero module.
int dimension(const PresentedModule& M, const EngineOptions& options = {});
int dimension(const GroebnerBasis& gb);

bool is_zero_module(const PresentedModule& M, const EngineOptions& options = {});

struct ExtModules {
  /// modules[k] = Ext^{k+1}(M, R)
  std::vector<PresentedModule> modules;
  /// Requested indices beyond the number of variables were dropped.
  bool truncated = false;
};

/// Ext^i(M, R) for 1 ≤ i ≤ i_max, as homology of the dual of the minimal
/// resolution.
ExtModules ext_modules(const PresentedModule& M, int i_max, const EngineOptions& options = {});
ExtModules ext_modules(const Resolution& resolution, int i_max, const EngineOptions& options = {});

/// ker(outgoing) / im(incoming) for composable maps
/// incoming: A → B, outgoing: B → C.
PresentedModule homology(const ModuleMap& incoming, const ModuleMap& outgoing,
                         const EngineOptions& options = {});

PresentedModule base_change(const PresentedModule& M, const RingMap& phi);
ModuleMap base_change(const ModuleMap& f, const RingMap& phi);
FreeModule base_change(const FreeModule& F, const RingPtr& target);

/// Direct sum of the parts, each shifted by its twist (see PresentedModule::shifted).
PresentedModule module_assemble(std::span<const std::pair<PresentedModule, int>> parts);

/// {"betti": [[i, degree, value]...], "hilbert": {"num": ..., "den": [...]}}
nlohmann::json resolution_certificate(const Resolution& resolution, const RationalSeries& series);

/// Degreewise check of a resolution of M by exact GF(2) linear algebra, in
/// the D + 1 degrees starting at the lowest generator degree.
struct ExactnessReport {
  bool passed = true;
  int degree_bound = 0;
  std::size_t pieces_checked = 0;
  std::string witness;
  nlohmann::json to_json() const;
};

ExactnessReport check_resolution_exactness(const Resolution& resolution, const PresentedModule& M,
                                           int degree_bound);

/// Versioned text form of a complex, and its inverse.
std::string serialize_complex(const ChainComplex& complex);
ChainComplex parse_complex(const RingPtr& ring, const std::string& text);

}  // namespace syzlab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "syzlab/homalg.hpp"
#include "syzlab/syzygy.hpp"

namespace syzlab {

using Length = boost::rational<long long>;

/// Edge lengths and sphere parameters of a big polygon space. Subsets of
/// [n] are bit masks (bit j ↔ edge j+1).
struct PolygonConfig {
  int n = 0;
  int a = 1;
  int b = 1;
  std::vector<Length> lengths;

  static PolygonConfig equilateral(int n, int a, int b);

  int d() const noexcept { return 2 * a + 2 * b - 1; }
  int dbar() const noexcept { return 2 * a - 1; }
  /// (n − 1)/2 for equilateral odd n.
  std::optional<int> m() const;
  bool is_equilateral() const;

  Length length_of(std::uint32_t subset) const;
  bool is_short(std::uint32_t subset) const;
  /// No subset has the same length as its complement.
  bool is_generic() const;
  /// Some edge is longer than all others together: the space is empty.
  bool is_empty_space() const;
  /// Throws InvalidArgument on bad sizes, non-positive lengths or non-generic ℓ.
  void validate() const;
};

PolygonConfig parse_polygon_config(int n, int a, int b, const std::string& lengths_csv);

/// Subsets of [n] ordered by size, then lexicographically.
std::vector<std::uint32_t> ordered_subsets(int n);

/// F2[t_1..t_n, w], all of degree one.
RingPtr polygon_ring(int n);

/// Koszul complex of a sequence of homogeneous elements: F_i has basis e_J,
/// |J| = i (ordered as in ordered_subsets), twist Σ_{j∈J} deg a_j, and
/// d(e_J) = Σ_{j∈J} a_j e_{J∖j}.
struct KoszulData {
  RingPtr ring;
  std::vector<Polynomial> elements;
  std::vector<std::vector<std::uint32_t>> bases;
  ChainComplex complex;
  /// Krull dimension of R/(elements); equals #vars − #elements for a
  /// regular sequence.
  int quotient_dimension = 0;
  bool regular = false;
};

KoszulData koszul_complex(const RingPtr& ring, std::vector<Polynomial> elements,
                          const EngineOptions& options = {});

/// K_i = image of d_{i+1} ⊆ F_i, presented with its generators in degree 0.
PresentedModule koszul_syzygy(const KoszulData& data, int i, const EngineOptions& options = {});

/// y_j^b with y_j = t_j (t_j + w).
std::vector<Polynomial> polygon_elements(const RingPtr& ring, int n, int b);

/// ι_*: ⊕_{J short} R·V_J ⊕ R·W_J → ⊕_{J} R·V_J with V_J ↦ V_J and
/// W_J ↦ Σ_{j∉J} y_j^b V_{J∪j}. Twists: V_J at −|J|d, W_J at −(|J|d + d̄).
struct IotaMap {
  ModuleMap map;
  std::vector<std::uint32_t> short_subsets;
  std::vector<std::uint32_t> all_subsets;
};

IotaMap build_iota(const PolygonConfig& cfg);

struct PolygonModule {
  PresentedModule module;
  PresentedModule cokernel;
  PresentedModule kernel;
  bool empty_space = false;
};

/// coker ι shifted by nd ⊕ (ker ι) shifted by nd − 1. The zero module when
/// the space is empty.
PolygonModule bigpolygon_module(const PolygonConfig& cfg, const EngineOptions& options = {});

struct TheoremCertificate {
  int m = 0;
  int a = 1;
  int b = 1;
  SyzygyReport report;
  SyzygyOrder kernel_order;
  SyzygyOrder cokernel_order;
  bool is_mth = false;
  bool is_next = false;
  bool koszul_regular = false;
  bool passed = false;
  int degree_bound = 8;
  nlohmann::json to_json() const;
};

TheoremCertificate verify_syzygy_theorem(int m, int b, int a, const EngineOptions& options = {});

struct DecompositionPart {
  RationalSeries computed;
  RationalSeries free_part;
  /// Index i of the Koszul syzygy K_i = im d_{i+1}.
  int koszul_index = 0;
  RationalSeries koszul;
  std::optional<int> fitted_offset;
  int stated_offset = 0;
  int derived_offset = 0;
  std::size_t free_generators = 0;
  bool matches = false;
  nlohmann::json to_json() const;
};

struct DecompositionCertificate {
  int n = 0;
  int a = 1;
  int b = 1;
  DecompositionPart kernel;
  DecompositionPart cokernel;
  std::vector<std::string> findings;
  bool passed = false;
  nlohmann::json to_json() const;
};

/// Matches the series of ker ι and coker ι with free ⊕ shifted Koszul
/// syzygy decompositions, fitting the shift of the Koszul summand.
DecompositionCertificate structural_decomposition_check(const PolygonConfig& cfg,
                                                        const EngineOptions& options = {});

}  // namespace syzlab

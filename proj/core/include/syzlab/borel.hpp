#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzlab/polynomial.hpp"
#include "syzlab/series.hpp"
#include "syzlab/syzygy.hpp"

namespace syzlab {

/// Cohomology rings of the classifying spaces of a torus-times-2-torus G and
/// of its maximal 2-torus H, with the restriction map between them.
///   R_G = F2[c_1..c_n, w_1..w_m], deg c = 2, deg w = 1
///   R_H = F2[t_1..t_n, w_1..w_m], all of degree 1
///   c_i ↦ t_i² + t_i(w_1 + ... + w_m), w_j ↦ w_j
struct BorelPair {
  int n = 0;
  int m = 0;
  RingPtr rg;
  RingPtr rh;
  RingMap restriction;
};

BorelPair build_borel_pair(int n, int m);

struct BasisCertificate {
  FreenessCertificate freeness;
  /// Basis equals {t^ε : ε ∈ {0,1}^n}.
  bool basis_matches = false;
  /// Number of basis elements in degree k equals binomial(n, k).
  bool degrees_binomial = false;
  bool passed = false;
  nlohmann::json to_json() const;
};

BasisCertificate verify_basis_freeness(const BorelPair& pair, int degree_bound = 8,
                                       const EngineOptions& options = {});

/// φ_i : t_i ↦ t_i + w, fixing every other variable. Only for m = 1.
struct WeylAction {
  std::vector<RingMap> generators;
};

WeylAction weyl_action(const BorelPair& pair);

struct InvariantsCertificate {
  int degree_bound = 0;
  /// degree → (dim of invariants, dim of image of restriction)
  std::map<int, std::pair<std::size_t, std::size_t>> dimensions;
  bool generators_fixed = false;
  bool involutions = false;
  bool commuting = false;
  bool passed = false;
  std::string witness;
  nlohmann::json to_json() const;
};

/// Degreewise comparison of R_H^W with the image of R_G, plus structural
/// checks on the generators. Default bound 2(n + 2).
InvariantsCertificate weyl_invariants_check(const BorelPair& pair, std::optional<int> degree_bound = {});

/// P_BK = P_BG · ∏ fibers, as rational functions. chain = {P_BK, P_BG, fibers...}.
bool free_extension_series_check(const std::vector<RationalSeries>& chain);

struct CatalogEntry {
  std::string name;
  std::vector<RationalSeries> chain;
  /// Outcome the entry is expected to produce (corrupted entries expect false).
  bool expected = true;
};

/// {"pairs": [{"name", "bk", "bg", "fibers": [...], "expected"?}]}
std::vector<CatalogEntry> parse_series_catalog(const nlohmann::json& catalog);

struct EulerRow {
  std::string name;
  Polynomial image;
  Polynomial expected;
};

struct EulerCertificate {
  std::string euler_class;
  std::vector<EulerRow> rows;
  /// Quadratic forms αx² + βxw + γw² consistent with all three rows.
  std::vector<std::string> consistent_classes;
  bool passed = false;
  nlohmann::json to_json() const;
};

/// Restrictions of x(x+w) ∈ F2[x, w] to F2[t] along x↦t,w↦0; x↦0,w↦t;
/// x↦t,w↦t. Also solves for the unique quadratic class with those images.
EulerCertificate euler_class_restriction_table();

}  // namespace syzlab

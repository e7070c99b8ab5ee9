#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzlab/homalg.hpp"

namespace syzlab {

/// Largest j such that M is a j-th syzygy; empty means infinite (free).
class SyzygyOrder {
 public:
  SyzygyOrder() = default;
  static SyzygyOrder finite(int j) { return SyzygyOrder(j); }
  static SyzygyOrder infinite() { return SyzygyOrder(); }

  bool is_infinite() const noexcept { return !value_; }
  int value() const;
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const SyzygyOrder&, const SyzygyOrder&) = default;

 private:
  explicit SyzygyOrder(int j) : value_(j) {}
  std::optional<int> value_;
};

/// Everything the Ext criterion looks at, computed once.
struct SyzygyReport {
  SyzygyOrder order;
  int num_variables = 0;
  int projective_dimension = 0;
  /// nullopt for the zero module.
  std::optional<int> depth;
  /// Ext index → codimension of Ext^i(M, R); nullopt means Ext^i = 0.
  std::map<int, std::optional<int>> ext_codims;
  /// Set when the order is infinite and a minimal presentation without
  /// relations confirmed freeness.
  bool free_verified = false;

  bool is_jth_syzygy(int j) const;
  /// {"syzygy_order", "ext_codims", "depth", "pd"}
  nlohmann::json to_json() const;
};

SyzygyReport syzygy_report(const PresentedModule& M, const EngineOptions& options = {});
SyzygyOrder syzygy_order(const PresentedModule& M, const EngineOptions& options = {});
/// codim Ext^i(M, R) ≥ i + j for every i ≥ 1.
bool is_jth_syzygy(const PresentedModule& M, int j, const EngineOptions& options = {});
/// Number of variables minus projective dimension; throws for the zero module.
int depth(const PresentedModule& M, const EngineOptions& options = {});

/// Evidence that the target of φ is a free module over the source, with
/// basis given by the standard monomials of the extended ideal.
struct FreenessCertificate {
  bool passed = false;
  int degree_bound = 0;
  std::vector<Polynomial> basis;
  /// degree → number of basis elements
  std::map<int, std::size_t> basis_degrees;
  bool generates = false;
  bool independent_to_bound = false;
  bool series_identity = false;
  std::string witness;

  nlohmann::json to_json() const;
};

/// Checks (a) the standard monomials of ⟨φ(x_i)⟩ are finite, hence generate
/// the target over the source; (b) no relation among them in degrees up to
/// the bound, by exact linear algebra; (c) HS(target) = HS(source)·Σ s^{deg b}.
/// (a) and (c) together already force freeness in every degree.
FreenessCertificate verify_free_extension(const RingMap& phi, int degree_bound,
                                          const EngineOptions& options = {});

struct TransferReport {
  SyzygyReport source;
  SyzygyReport target;
  bool agree = false;
  nlohmann::json to_json() const;
};

/// Compares the syzygy order of M with that of its base change along φ.
/// Throws InvalidArgument when φ does not make its target free.
TransferReport syzygy_transfer_check(const PresentedModule& M, const RingMap& phi,
                                     int degree_bound = 8, const EngineOptions& options = {});

}  // namespace syzlab

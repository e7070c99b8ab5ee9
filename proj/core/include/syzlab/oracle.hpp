#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "syzlab/module.hpp"

namespace syzlab {

/// Dense GF(2) row space kept in reduced echelon form. Rows are bitsets of
/// a fixed width.
class Gf2RowSpace {
 public:
  explicit Gf2RowSpace(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t dimension() const noexcept { return rows_.size(); }

  /// Adds a row; returns true when it enlarged the space.
  bool insert(std::vector<std::uint64_t> row);
  /// Reduces `row` modulo the space in place (fully reduced form).
  void reduce(std::vector<std::uint64_t>& row) const;
  bool contains(std::vector<std::uint64_t> row) const;
  /// Columns that are not pivots, ascending.
  std::vector<std::size_t> free_columns() const;

  static bool test(const std::vector<std::uint64_t>& row, std::size_t col) {
    return (row[col / 64] >> (col % 64)) & 1U;
  }
  static void flip(std::vector<std::uint64_t>& row, std::size_t col) {
    row[col / 64] ^= 1ULL << (col % 64);
  }
  std::vector<std::uint64_t> zero_row() const {
    return std::vector<std::uint64_t>((width_ + 63) / 64, 0);
  }

 private:
  std::size_t width_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_of_column_;
};

/// Rank of a list of GF(2) rows.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t width);

/// Monomial basis of one graded piece of a free module: all terms m·e_i with
/// deg m + twist_i = degree.
class DegreePiece {
 public:
  DegreePiece(const FreeModule& F, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::optional<std::size_t> index_of(const Term& t) const;

  /// Bit vector of the homogeneous part of `e` that lies in this degree.
  std::vector<std::uint64_t> bits(const ModuleElement& e) const;
  /// Bit vector of m·e restricted to this degree.
  std::vector<std::uint64_t> bits(const ModuleElement& e, const Monomial& m) const;

 private:
  int degree_;
  std::vector<Term> terms_;
  struct TermHash {
    std::size_t operator()(const Term& t) const noexcept {
      return static_cast<std::size_t>(t.mono.packed() * 0x9E3779B97F4A7C15ULL) ^ t.comp;
    }
  };
  std::unordered_map<Term, std::size_t, TermHash> index_;
};

/// Exact linear-algebra oracle over GF(2), working one graded piece at a time.
/// It shares no code with the Gröbner engine.
namespace oracle {

/// Row space of the degree-`degree` piece of the submodule generated by gens.
Gf2RowSpace submodule_piece(const FreeModule& F, std::span<const ModuleElement> gens, int degree);

std::size_t submodule_dimension(const FreeModule& F, std::span<const ModuleElement> gens,
                                int degree);

/// Membership of a homogeneous element (zero is always a member).
bool contains(const FreeModule& F, std::span<const ModuleElement> gens, const ModuleElement& v);

/// dim_F2 (F / <gens>)_degree
std::size_t quotient_dimension(const FreeModule& F, std::span<const ModuleElement> gens,
                               int degree);

/// Rank of the degree piece of the map with the given columns (column j is
/// the image of basis element j of `source`).
std::size_t map_rank(const FreeModule& source, const FreeModule& target,
                     std::span<const ModuleElement> columns, int degree);

/// Graded Betti numbers of F/<relations> from Koszul homology:
/// dim Tor_i(k, M)_degree for i = 0..num_variables, computed from the graded
/// pieces of M and multiplication by the variables.
std::vector<std::size_t> koszul_betti(const FreeModule& F, std::span<const ModuleElement> relations,
                                      int degree);

}  // namespace oracle

}  // namespace syzlab

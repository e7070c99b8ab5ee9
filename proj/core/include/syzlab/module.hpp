#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syzlab/polynomial.hpp"

namespace syzlab {

/// Graded free module ⊕ R·e_i with deg(e_i) = twist_i.
///
/// Internal degrees follow the cohomological convention: multiplying by a
/// ring element of degree k raises the degree by k.
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> twists);
  static FreeModule of_rank(RingPtr ring, std::size_t rank) {
    return FreeModule(std::move(ring), std::vector<int>(rank, 0));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return twists_.size(); }
  int twist(std::size_t i) const { return twists_.at(i); }
  const std::vector<int>& twists() const noexcept { return twists_; }

  FreeModule shifted(int by) const;
  FreeModule direct_sum(const FreeModule& other) const;
  FreeModule dual() const;

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return same_ring(a.ring_, b.ring_) && a.twists_ == b.twists_;
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
};

void require_same_module(const FreeModule& a, const FreeModule& b, const char* where);

/// Element of a free module, one polynomial per basis position.
struct ModuleElement {
  std::vector<Polynomial> coordinates;

  static ModuleElement zero(const FreeModule& F);
  static ModuleElement basis(const FreeModule& F, std::size_t i);

  std::size_t size() const noexcept { return coordinates.size(); }
  const Polynomial& operator[](std::size_t i) const { return coordinates.at(i); }
  Polynomial& operator[](std::size_t i) { return coordinates.at(i); }
  bool is_zero() const;
  /// Twisted degree if all nonzero coordinates agree; nullopt if
  /// inhomogeneous; throws for the zero element.
  std::optional<int> degree(const FreeModule& F) const;
  /// Throws unless the element has F's rank and ring.
  void check_in(const FreeModule& F, const char* where) const;

  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement scaled(const Polynomial& p) const;

  std::string to_string() const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// Inverse of ModuleElement::to_string: `;`-separated coordinates.
ModuleElement parse_element(const FreeModule& F, std::string_view text);

/// Module term m·e_comp.
struct Term {
  Monomial mono;
  std::uint32_t comp = 0;

  friend bool operator==(const Term& a, const Term& b) {
    return a.comp == b.comp && a.mono == b.mono;
  }
};

/// Sparse module vector: terms strictly descending in some ModuleOrder.
using TermVec = std::vector<Term>;

/// Monomial order on a free module.
///
/// Every order used by the engine has the shape
///   m·e_i  ↦  (deg m + twist_i,  m·shift_i under degrevlex,  tie_i)
/// compared lexicographically, where a smaller tie index means a larger
/// term. The plain term-over-position order has shift 1 and tie i. The
/// Schreyer order induced by a Gröbner basis g_1..g_r has
/// shift_i = (lead monomial of g_i)·shift_{c_i} and ties sorted by
/// (tie_{c_i}, i), which is the flattened form of "compare images of leading
/// terms, then break ties by index".
class ModuleOrder {
 public:
  struct Slot {
    Monomial shift;
    int twist = 0;
    std::uint32_t tie = 0;
  };

  ModuleOrder() = default;
  static ModuleOrder term_over_position(const FreeModule& F);
  /// Schreyer order on the free module with one basis element per leading term.
  static ModuleOrder schreyer(const GradedRing& ring, const ModuleOrder& previous,
                              std::span<const Term> leading_terms);

  std::size_t rank() const noexcept { return slots_.size(); }
  const Slot& slot(std::size_t i) const { return slots_.at(i); }
  bool is_schreyer() const noexcept { return schreyer_; }

  int degree(const Term& t) const noexcept { return t.mono.degree() + slots_[t.comp].twist; }

  std::strong_ordering compare(const Term& a, const Term& b) const noexcept {
    const Slot& sa = slots_[a.comp];
    const Slot& sb = slots_[b.comp];
    int da = a.mono.degree() + sa.twist;
    int db = b.mono.degree() + sb.twist;
    if (da != db) return da <=> db;
    auto c = degrevlex_compare(a.mono.degree() + sa.shift.degree(),
                               a.mono.packed() + sa.shift.packed(),
                               b.mono.degree() + sb.shift.degree(),
                               b.mono.packed() + sb.shift.packed());
    if (c != 0) return c;
    return sb.tie <=> sa.tie;
  }

  bool greater(const Term& a, const Term& b) const noexcept { return compare(a, b) > 0; }

 private:
  std::vector<Slot> slots_;
  bool schreyer_ = false;
};

/// Arithmetic on sparse vectors sorted under a fixed order.
namespace vec {

TermVec add(const ModuleOrder& order, const TermVec& a, const TermVec& b);
/// a + m·b
TermVec add_multiple(const ModuleOrder& order, const TermVec& a, const Monomial& m,
                     const TermVec& b);
TermVec multiply(const TermVec& v, const Monomial& m);
void sort(const ModuleOrder& order, TermVec& v);
/// Sorts and cancels repeated terms in pairs.
void canonicalize(const ModuleOrder& order, TermVec& v);
bool is_homogeneous(const ModuleOrder& order, const TermVec& v);

TermVec from_element(const ModuleOrder& order, const ModuleElement& e);
ModuleElement to_element(const FreeModule& F, const TermVec& v);

}  // namespace vec

}  // namespace syzlab

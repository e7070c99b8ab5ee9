#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzlab/ring.hpp"

namespace syzlab {

/// Polynomial over GF(2): a set of monomials kept in strictly descending
/// degrevlex order. Every coefficient is one, so addition is symmetric
/// difference and the representation of a value is unique.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial one(RingPtr ring);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m);
  /// Canonicalizes an arbitrary list: sorted, repeated monomials cancel in pairs.
  static Polynomial from_terms(RingPtr ring, std::vector<Monomial> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].is_one(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Requires a nonzero polynomial.
  const Monomial& leading() const;

  /// Common weighted degree of all terms, std::nullopt when inhomogeneous.
  /// Throws InvalidArgument for the zero polynomial.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  int max_degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator*(const Polynomial& other) const;
  Polynomial times(const Monomial& m) const;
  Polynomial pow(unsigned exponent) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Monomial> sorted_terms, int /*tag*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Monomial> terms_;
};

/// Parses `t1^2+t1*w`, `0`, `1`, `x*(x+w)` style expressions; only `1` is
/// accepted as an explicit coefficient. Parentheses and integer powers of
/// sub-expressions are allowed.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Ring homomorphism given by the images of the source variables.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  static RingMap identity(const RingPtr& ring);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t variable) const { return images_.at(variable); }

  Polynomial apply(const Polynomial& f) const;
  Polynomial apply(const Monomial& m) const;
  /// this ∘ inner
  RingMap compose(const RingMap& inner) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

inline Polynomial apply_ring_map(const RingMap& map, const Polynomial& f) { return map.apply(f); }

}  // namespace syzlab

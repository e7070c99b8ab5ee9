#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syzlab {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr int kMaxExponent = 127;

/// Polynomial ring over GF(2) with positive integer variable weights.
///
/// Variables are ordered; the order is the one used by every monomial order
/// in the engine (first variable is the largest for lex, last variable is the
/// "reverse" variable of degrevlex).
class GradedRing {
 public:
  GradedRing(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t num_variables() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Weighted degree of a packed exponent vector.
  int weighted_degree(std::uint64_t packed) const noexcept;

  std::string describe() const;

  friend bool operator==(const GradedRing&, const GradedRing&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees);

/// Ring with every variable of degree one.
RingPtr make_standard_ring(std::vector<std::string> names);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

/// Monomial with at most eight exponents packed one per byte.
///
/// Exponents are bounded by kMaxExponent so that byte-wise comparisons of
/// two exponent vectors can be done on the whole word at once. The weighted
/// degree is carried alongside so that graded comparisons are O(1).
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(const GradedRing& ring, std::span<const int> exponents);
  static Monomial variable(const GradedRing& ring, std::size_t index, int power = 1);
  static Monomial from_packed(const GradedRing& ring, std::uint64_t packed);

  int exponent(std::size_t i) const noexcept {
    return static_cast<int>((packed_ >> (8 * i)) & 0xffU);
  }
  std::vector<int> exponents(std::size_t num_variables) const;
  int degree() const noexcept { return degree_; }
  std::uint64_t packed() const noexcept { return packed_; }
  bool is_one() const noexcept { return packed_ == 0; }
  std::uint64_t support_mask(std::size_t num_variables) const noexcept;

  bool divides(const Monomial& other) const noexcept {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((other.packed_ | kHigh) - packed_) & kHigh) == kHigh;
  }

  /// Product; throws InvalidArgument when an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  /// Quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const noexcept {
    Monomial q;
    q.packed_ = packed_ - other.packed_;
    q.degree_ = degree_ - other.degree_;
    return q;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.packed_ == b.packed_;
  }

 private:
  std::uint64_t packed_ = 0;
  std::int32_t degree_ = 0;
};

Monomial lcm(const GradedRing& ring, const Monomial& a, const Monomial& b);
Monomial gcd(const GradedRing& ring, const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b) noexcept;

/// Compares packed exponent words under graded reverse lexicographic order
/// given their weighted degrees.
inline std::strong_ordering degrevlex_compare(int degree_a, std::uint64_t a, int degree_b,
                                              std::uint64_t b) noexcept {
  if (degree_a != degree_b) return degree_a <=> degree_b;
  std::uint64_t diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  int byte = (63 - __builtin_clzll(diff)) / 8;
  unsigned ea = (a >> (8 * byte)) & 0xffU;
  unsigned eb = (b >> (8 * byte)) & 0xffU;
  // Smaller exponent in the last differing variable wins.
  return eb <=> ea;
}

inline std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) noexcept {
  return degrevlex_compare(a.degree(), a.packed(), b.degree(), b.packed());
}

/// Pure lexicographic order, first variable largest.
inline std::strong_ordering lex(const Monomial& a, const Monomial& b) noexcept {
  std::uint64_t diff = a.packed() ^ b.packed();
  if (diff == 0) return std::strong_ordering::equal;
  int byte = __builtin_ctzll(diff) / 8;
  unsigned ea = (a.packed() >> (8 * byte)) & 0xffU;
  unsigned eb = (b.packed() >> (8 * byte)) & 0xffU;
  return ea <=> eb;
}

/// All monomials of the given weighted degree, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(const GradedRing& ring, int degree);

std::string to_string(const GradedRing& ring, const Monomial& m);

}  // namespace syzlab

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzlab/ring.hpp"

namespace syzlab {

/// Laurent polynomial in s with integer coefficients. Zero coefficients are
/// never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial constant(long long c);
  /// c·s^e
  static IntPolynomial monomial(int exponent, long long coefficient = 1);
  /// 1 − s^d
  static IntPolynomial one_minus(int d);

  const std::map<int, long long>& coefficients() const noexcept { return coeffs_; }
  long long coefficient(int exponent) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_degree() const;
  int high_degree() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial shifted(int by) const;
  IntPolynomial negated() const;

  /// Exact division by a polynomial whose lowest coefficient is ±1;
  /// returns false (and leaves `quotient` unspecified) when not divisible.
  bool divide_exact(const IntPolynomial& divisor, IntPolynomial& quotient) const;

  /// `1 + 2s - s^3`, `s^-2`, `0`.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void add_term(int e, long long c);
  std::map<int, long long> coeffs_;
};

IntPolynomial parse_int_polynomial(std::string_view text);

/// numerator / ∏ (1 − s^d)
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(IntPolynomial numerator, std::vector<int> denominator);

  /// 1 / ∏ (1 − s^{deg x}) over the ring variables.
  static RationalSeries of_ring(const GradedRing& ring);

  const IntPolynomial& numerator() const noexcept { return num_; }
  /// Sorted ascending.
  const std::vector<int>& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator-(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries shifted(int by) const;

  /// Coefficients of s^from .. s^to of the power series expansion.
  std::vector<long long> expand(int from, int to) const;
  long long coefficient(int degree) const;

  /// Order of the pole at s = 1, i.e. the Krull dimension for a Hilbert
  /// series. The zero series has dimension −1.
  int pole_order() const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static RationalSeries from_json(const nlohmann::json& j);

  /// Equality as rational functions.
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  void canonicalize();
  IntPolynomial num_;
  std::vector<int> den_;
};

/// Hilbert numerator of R/I for a monomial ideal I, relative to the
/// denominator ∏ (1 − s^{deg x}). An empty generator list gives 1; a list
/// containing 1 gives 0.
IntPolynomial monomial_hilbert_numerator(const GradedRing& ring,
                                         std::vector<Monomial> generators);

}  // namespace syzlab

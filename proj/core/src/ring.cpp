#include "syzlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

GradedRing::GradedRing(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) {
    throw InvalidArgument("ring: variable names and degrees differ in length");
  }
  if (names_.empty()) throw InvalidArgument("ring: at least one variable is required");
  if (names_.size() > kMaxVariables) {
    throw InvalidArgument("ring: at most " + std::to_string(kMaxVariables) +
                          " variables are supported");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw InvalidArgument("ring: invalid variable name '" + n + "'");
    }
    for (char ch : n) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
        throw InvalidArgument("ring: invalid variable name '" + n + "'");
      }
    }
    if (!seen.insert(n).second) throw InvalidArgument("ring: duplicate variable '" + n + "'");
    if (degrees_[i] < 1) throw InvalidArgument("ring: variable degrees must be positive");
  }
}

std::optional<std::size_t> GradedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

int GradedRing::weighted_degree(std::uint64_t packed) const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    d += static_cast<int>((packed >> (8 * i)) & 0xffU) * degrees_[i];
  }
  return d;
}

std::string GradedRing::describe() const {
  std::ostringstream out;
  out << "F2[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out << ',';
    out << names_[i];
  }
  out << "] deg";
  for (int d : degrees_) out << ' ' << d;
  return out.str();
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GradedRing>(std::move(names), std::move(degrees));
}

RingPtr make_standard_ring(std::vector<std::string> names) {
  std::vector<int> degrees(names.size(), 1);
  return make_ring(std::move(names), std::move(degrees));
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) {
    throw RingMismatch(std::string(where) + ": operands belong to different rings (" +
                       (a ? a->describe() : "null") + " vs " + (b ? b->describe() : "null") +
                       ")");
  }
}

Monomial Monomial::from_exponents(const GradedRing& ring, std::span<const int> exponents) {
  if (exponents.size() != ring.num_variables()) {
    throw InvalidArgument("monomial: exponent vector length does not match the ring");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) {
      throw InvalidArgument("monomial: exponent out of range [0, " +
                            std::to_string(kMaxExponent) + "]");
    }
    m.packed_ |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
    m.degree_ += exponents[i] * ring.degree(i);
  }
  return m;
}

Monomial Monomial::variable(const GradedRing& ring, std::size_t index, int power) {
  std::vector<int> e(ring.num_variables(), 0);
  e.at(index) = power;
  return from_exponents(ring, e);
}

Monomial Monomial::from_packed(const GradedRing& ring, std::uint64_t packed) {
  Monomial m;
  m.packed_ = packed;
  m.degree_ = ring.weighted_degree(packed);
  return m;
}

std::vector<int> Monomial::exponents(std::size_t num_variables) const {
  std::vector<int> e(num_variables);
  for (std::size_t i = 0; i < num_variables; ++i) e[i] = exponent(i);
  return e;
}

std::uint64_t Monomial::support_mask(std::size_t num_variables) const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < num_variables; ++i) {
    if (exponent(i) != 0) mask |= 1ULL << i;
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  Monomial p;
  p.packed_ = packed_ + other.packed_;
  if (p.packed_ & kHigh) {
    throw InvalidArgument("monomial: exponent exceeds " + std::to_string(kMaxExponent));
  }
  p.degree_ = degree_ + other.degree_;
  return p;
}

namespace {

template <typename Pick>
std::uint64_t bytewise(std::uint64_t a, std::uint64_t b, Pick pick) {
  std::uint64_t r = 0;
  for (int i = 0; i < 8; ++i) {
    std::uint64_t ea = (a >> (8 * i)) & 0xffU;
    std::uint64_t eb = (b >> (8 * i)) & 0xffU;
    r |= pick(ea, eb) << (8 * i);
  }
  return r;
}

}  // namespace

Monomial lcm(const GradedRing& ring, const Monomial& a, const Monomial& b) {
  return Monomial::from_packed(
      ring, bytewise(a.packed(), b.packed(), [](auto x, auto y) { return std::max(x, y); }));
}

Monomial gcd(const GradedRing& ring, const Monomial& a, const Monomial& b) {
  return Monomial::from_packed(
      ring, bytewise(a.packed(), b.packed(), [](auto x, auto y) { return std::min(x, y); }));
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (int i = 0; i < 8; ++i) {
    if (((a.packed() >> (8 * i)) & 0xffU) && ((b.packed() >> (8 * i)) & 0xffU)) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_degree(const GradedRing& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = ring.num_variables();
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
    if (var + 1 == n) {
      if (remaining % ring.degree(var) == 0 && remaining / ring.degree(var) <= kMaxExponent) {
        e[var] = remaining / ring.degree(var);
        out.push_back(Monomial::from_exponents(ring, e));
      }
      return;
    }
    for (int k = 0; k * ring.degree(var) <= remaining && k <= kMaxExponent; ++k) {
      e[var] = k;
      rec(var + 1, remaining - k * ring.degree(var));
    }
    e[var] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; });
  return out;
}

std::string to_string(const GradedRing& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < ring.num_variables(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace syzlab

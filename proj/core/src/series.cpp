#include "syzlab/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("series: coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("series: coefficient overflow");
  return r;
}

}  // namespace

IntPolynomial IntPolynomial::constant(long long c) { return monomial(0, c); }

IntPolynomial IntPolynomial::monomial(int exponent, long long coefficient) {
  IntPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

IntPolynomial IntPolynomial::one_minus(int d) {
  IntPolynomial p = constant(1);
  p.add_term(d, -1);
  return p;
}

void IntPolynomial::add_term(int e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

long long IntPolynomial::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int IntPolynomial::low_degree() const {
  if (coeffs_.empty()) throw InvalidArgument("low_degree of the zero polynomial");
  return coeffs_.begin()->first;
}

int IntPolynomial::high_degree() const {
  if (coeffs_.empty()) throw InvalidArgument("high_degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r -= o;
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) r.add_term(ea + eb, checked_mul(ca, cb));
  }
  return r;
}

IntPolynomial IntPolynomial::shifted(int by) const {
  IntPolynomial r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + by, c);
  return r;
}

IntPolynomial IntPolynomial::negated() const {
  IntPolynomial r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

bool IntPolynomial::divide_exact(const IntPolynomial& divisor, IntPolynomial& quotient) const {
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  quotient = IntPolynomial();
  if (is_zero()) return true;
  const int dlow = divisor.low_degree();
  const long long lead = divisor.coefficient(dlow);
  if (lead != 1 && lead != -1) throw InvalidArgument("divisor must have a unit lowest coefficient");
  const int dspan = divisor.high_degree() - dlow;
  IntPolynomial rest = *this;
  while (!rest.is_zero()) {
    const int e = rest.low_degree();
    if (rest.high_degree() - e < dspan) return false;
    const long long c = rest.coefficient(e) * lead;
    IntPolynomial step = monomial(e - dlow, c);
    quotient += step;
    rest -= divisor * step;
  }
  return true;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 's';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

IntPolynomial parse_int_polynomial(std::string_view text) {
  IntPolynomial result;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* what) {
    throw ParseError(std::string("series numerator: ") + what, 1, static_cast<int>(pos) + 1);
  };
  auto read_int = [&](long long& value) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t digits = pos;
    value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = checked_add(checked_mul(value, 10), text[pos] - '0');
      ++pos;
    }
    if (pos == digits) {
      pos = start;
      return false;
    }
    if (negative) value = -value;
    return true;
  };

  skip();
  if (pos == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    long long coefficient = 1;
    bool have_coefficient = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      read_int(coefficient);
      have_coefficient = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    int exponent = 0;
    if (pos < text.size() && text[pos] == 's') {
      ++pos;
      exponent = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        long long e;
        if (!read_int(e)) fail("expected exponent");
        exponent = static_cast<int>(e);
      }
    } else if (!have_coefficient) {
      fail("expected a term");
    }
    result += IntPolynomial::monomial(exponent, sign * coefficient);
  }
  return result;
}

RationalSeries::RationalSeries(IntPolynomial numerator, std::vector<int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (int d : den_) {
    if (d <= 0) throw InvalidArgument("series denominator exponents must be positive");
  }
  canonicalize();
}

RationalSeries RationalSeries::of_ring(const GradedRing& ring) {
  return RationalSeries(IntPolynomial::constant(1), ring.degrees());
}

void RationalSeries::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::sort(den_.begin(), den_.end(), std::greater<>());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < den_.size() && !changed; ++k) {
      const int d = den_[k];
      IntPolynomial q;
      if (num_.divide_exact(IntPolynomial::one_minus(d), q)) {
        num_ = std::move(q);
        den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
      // (1 − s^d) = (1 − s^e)(1 + s^e + ... ) for e | d
      for (int e = 1; e < d && !changed; ++e) {
        if (d % e != 0) continue;
        IntPolynomial cyclic;
        for (int j = 0; j < d; j += e) cyclic += IntPolynomial::monomial(j);
        if (num_.divide_exact(cyclic, q)) {
          num_ = std::move(q);
          den_[k] = e;
          changed = true;
        }
      }
    }
  }
  std::sort(den_.begin(), den_.end());
}

namespace {

// Multiset of denominators as a count map.
std::map<int, int> counts(const std::vector<int>& den) {
  std::map<int, int> c;
  for (int d : den) ++c[d];
  return c;
}

IntPolynomial product_of(const std::map<int, int>& factors) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& [d, k] : factors) {
    for (int i = 0; i < k; ++i) p = p * IntPolynomial::one_minus(d);
  }
  return p;
}

}  // namespace

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  auto a = counts(den_);
  auto b = counts(o.den_);
  std::map<int, int> extra_a;
  std::map<int, int> extra_b;
  std::map<int, int> joint = a;
  for (const auto& [d, k] : b) joint[d] = std::max(joint[d], k);
  std::vector<int> common;
  for (const auto& [d, k] : joint) {
    if (k > a[d]) extra_a[d] = k - a[d];
    if (k > b[d]) extra_b[d] = k - b[d];
    common.insert(common.end(), static_cast<std::size_t>(k), d);
  }
  IntPolynomial num = num_ * product_of(extra_a) + o.num_ * product_of(extra_b);
  return RationalSeries(std::move(num), std::move(common));
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
  RationalSeries neg = o;
  neg.num_ = neg.num_.negated();
  return *this + neg;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  std::vector<int> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return RationalSeries(num_ * o.num_, std::move(den));
}

RationalSeries RationalSeries::shifted(int by) const {
  RationalSeries r = *this;
  r.num_ = r.num_.shifted(by);
  return r;
}

std::vector<long long> RationalSeries::expand(int from, int to) const {
  if (to < from) return {};
  if (num_.is_zero()) return std::vector<long long>(static_cast<std::size_t>(to - from + 1), 0);
  const int low = std::min(from, num_.low_degree());
  const std::size_t len = static_cast<std::size_t>(to - low + 1);
  std::vector<long long> c(len, 0);
  for (const auto& [e, v] : num_.coefficients()) {
    if (e <= to) c[static_cast<std::size_t>(e - low)] = v;
  }
  for (int d : den_) {
    for (std::size_t k = static_cast<std::size_t>(d); k < len; ++k) {
      c[k] = checked_add(c[k], c[k - static_cast<std::size_t>(d)]);
    }
  }
  return std::vector<long long>(c.begin() + (from - low), c.end());
}

long long RationalSeries::coefficient(int degree) const { return expand(degree, degree).front(); }

int RationalSeries::pole_order() const {
  if (num_.is_zero()) return -1;
  int mult = 0;
  IntPolynomial p = num_;
  IntPolynomial q;
  while (p.divide_exact(IntPolynomial::one_minus(1), q)) {
    p = std::move(q);
    ++mult;
  }
  return static_cast<int>(den_.size()) - mult;
}

std::string RationalSeries::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (den_.empty()) return out;
  out += " / (";
  auto c = counts(den_);
  bool first = true;
  for (const auto& [d, k] : c) {
    if (!first) out += " ";
    first = false;
    out += d == 1 ? "(1 - s)" : "(1 - s^" + std::to_string(d) + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out + ")";
}

nlohmann::json RationalSeries::to_json() const {
  return nlohmann::json{{"num", num_.to_string()}, {"den", den_}};
}

RationalSeries RationalSeries::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("series: expected an object with \"num\" and \"den\"");
  }
  IntPolynomial num;
  if (j["num"].is_string()) {
    num = parse_int_polynomial(j["num"].get<std::string>());
  } else if (j["num"].is_number_integer()) {
    num = IntPolynomial::constant(j["num"].get<long long>());
  } else {
    throw ParseError("series: \"num\" must be a string or an integer");
  }
  if (!j["den"].is_array()) throw ParseError("series: \"den\" must be an array");
  std::vector<int> den;
  for (const auto& d : j["den"]) {
    if (!d.is_number_integer() || d.get<int>() <= 0) {
      throw ParseError("series: denominator entries must be positive integers");
    }
    den.push_back(d.get<int>());
  }
  return RationalSeries(std::move(num), std::move(den));
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  auto ca = counts(a.den_);
  auto cb = counts(b.den_);
  std::map<int, int> only_a;
  std::map<int, int> only_b;
  for (const auto& [d, k] : ca) {
    int kb = cb.count(d) ? cb[d] : 0;
    if (k > kb) only_a[d] = k - kb;
  }
  for (const auto& [d, k] : cb) {
    int ka = ca.count(d) ? ca[d] : 0;
    if (k > ka) only_b[d] = k - ka;
  }
  return a.num_ * product_of(only_b) == b.num_ * product_of(only_a);
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.packed() < b.packed();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

IntPolynomial numerator(const GradedRing& ring, std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return IntPolynomial::constant(1);
  if (gens.front().is_one()) return {};

  const std::size_t n = ring.num_variables();
  bool pairwise_coprime = true;
  for (std::size_t a = 0; a < gens.size() && pairwise_coprime; ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!coprime(gens[a], gens[b])) {
        pairwise_coprime = false;
        break;
      }
    }
  }
  if (pairwise_coprime) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (const auto& g : gens) p = p * IntPolynomial::one_minus(g.degree());
    return p;
  }

  // Pivot on the variable occurring in the most generators, at its smallest
  // positive exponent: every generator containing it is divisible by the pivot.
  std::size_t best = n;
  std::size_t best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens) count += g.exponent(v) > 0;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  int power = kMaxExponent + 1;
  for (const auto& g : gens) {
    if (g.exponent(best) > 0) power = std::min(power, g.exponent(best));
  }
  const Monomial pivot = Monomial::variable(ring, best, power);

  std::vector<Monomial> without;
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g.exponent(best) == 0) {
      without.push_back(g);
      colon.push_back(g);
    } else {
      colon.push_back(g / pivot);
    }
  }
  IntPolynomial sum = IntPolynomial::one_minus(pivot.degree()) * numerator(ring, std::move(without));
  sum += numerator(ring, std::move(colon)).shifted(pivot.degree());
  return sum;
}

}  // namespace

IntPolynomial monomial_hilbert_numerator(const GradedRing& ring,
                                         std::vector<Monomial> generators) {
  return numerator(ring, std::move(generators));
}

}  // namespace syzlab

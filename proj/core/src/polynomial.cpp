#include "syzlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "syzlab/error.hpp"

namespace syzlab {

namespace {

bool term_greater(const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; }

// Sorts descending and cancels equal monomials in pairs.
void canonicalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[out++] = terms[i];
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("polynomial: null ring");
}

Polynomial Polynomial::one(RingPtr ring) { return monomial(std::move(ring), Monomial{}); }

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto m = Monomial::variable(*ring, index);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InvalidArgument("polynomial: unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m) {
  return Polynomial(std::move(ring), std::vector<Monomial>{m}, 0);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Monomial> terms) {
  canonicalize(terms);
  return Polynomial(std::move(ring), std::move(terms), 0);
}

const Monomial& Polynomial::leading() const {
  if (terms_.empty()) throw InvalidArgument("polynomial: zero has no leading term");
  return terms_.front();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw InvalidArgument("polynomial: degree of zero is undefined");
  // Terms are sorted by degree first, so first and last bound the range.
  if (terms_.front().degree() != terms_.back().degree()) return std::nullopt;
  return terms_.front().degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

int Polynomial::max_degree() const { return leading().degree(); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "poly_add");
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto c = degrevlex(*a, *b);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, other.terms_.end());
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = *this + other; }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "poly_mul");
  std::vector<Monomial> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.push_back(a * b);
  }
  canonicalize(out);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::times(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& a : terms_) out.push_back(a * m);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = one(ring_);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : terms_) {
    if (!s.empty()) s += '+';
    s += syzlab::to_string(*ring_, m);
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_),
                     0, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = product();
    while (accept('+')) acc += product();
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > static_cast<unsigned long>(kMaxExponent)) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto digits = text_.substr(start, pos_ - start);
      if (digits == "1") return Polynomial::one(ring_);
      if (digits == "0") return Polynomial::zero(ring_);
      pos_ = start;
      fail("coefficient '" + std::string(digits) + "' is not allowed over GF(2)");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->num_variables()) {
    throw InvalidArgument("ring map: need one image per source variable");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_ring(images_[i].ring(), target_, "ring map");
    if (images_[i].is_zero()) continue;
    auto d = images_[i].homogeneous_degree();
    if (!d || *d != source_->degree(i)) {
      throw InvalidArgument("ring map: image of '" + source_->name(i) +
                            "' must be homogeneous of degree " +
                            std::to_string(source_->degree(i)));
    }
  }
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    images.push_back(Polynomial::variable(ring, i));
  }
  return RingMap(ring, ring, std::move(images));
}

Polynomial RingMap::apply(const Monomial& m) const {
  Polynomial result = Polynomial::one(target_);
  for (std::size_t i = 0; i < source_->num_variables(); ++i) {
    int e = m.exponent(i);
    if (e) result = result * images_[i].pow(static_cast<unsigned>(e));
  }
  return result;
}

Polynomial RingMap::apply(const Polynomial& f) const {
  require_same_ring(f.ring(), source_, "apply_ring_map");
  // Powers of the images are shared between terms.
  std::map<std::pair<std::size_t, int>, Polynomial> powers;
  auto power = [&](std::size_t var, int e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, images_[var].pow(static_cast<unsigned>(e))).first;
    }
    return it->second;
  };
  std::vector<Monomial> acc;
  for (const auto& m : f.terms()) {
    Polynomial term = Polynomial::one(target_);
    for (std::size_t i = 0; i < source_->num_variables() && !term.is_zero(); ++i) {
      int e = m.exponent(i);
      if (e) term = term * power(i, e);
    }
    acc.insert(acc.end(), term.terms().begin(), term.terms().end());
  }
  return Polynomial::from_terms(target_, std::move(acc));
}

RingMap RingMap::compose(const RingMap& inner) const {
  require_same_ring(inner.target_, source_, "ring map composition");
  std::vector<Polynomial> images;
  for (const auto& p : inner.images_) images.push_back(apply(p));
  return RingMap(inner.source_, target_, std::move(images));
}

}  // namespace syzlab

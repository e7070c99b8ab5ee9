#include "syzlab/module.hpp"

#include <algorithm>
#include <numeric>

#include "syzlab/error.hpp"

namespace syzlab {

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists)
    : ring_(std::move(ring)), twists_(std::move(twists)) {
  if (!ring_) throw InvalidArgument("free module: null ring");
}

FreeModule FreeModule::shifted(int by) const {
  auto t = twists_;
  for (int& x : t) x += by;
  return FreeModule(ring_, std::move(t));
}

FreeModule FreeModule::direct_sum(const FreeModule& other) const {
  require_same_ring(ring_, other.ring_, "direct sum");
  auto t = twists_;
  t.insert(t.end(), other.twists_.begin(), other.twists_.end());
  return FreeModule(ring_, std::move(t));
}

FreeModule FreeModule::dual() const {
  auto t = twists_;
  for (int& x : t) x = -x;
  return FreeModule(ring_, std::move(t));
}

void require_same_module(const FreeModule& a, const FreeModule& b, const char* where) {
  require_same_ring(a.ring(), b.ring(), where);
  if (a.twists() != b.twists()) {
    throw RingMismatch(std::string(where) + ": free modules differ in rank or twists");
  }
}

ModuleElement ModuleElement::zero(const FreeModule& F) {
  return ModuleElement{std::vector<Polynomial>(F.rank(), Polynomial::zero(F.ring()))};
}

ModuleElement ModuleElement::basis(const FreeModule& F, std::size_t i) {
  auto e = zero(F);
  e.coordinates.at(i) = Polynomial::one(F.ring());
  return e;
}

bool ModuleElement::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> ModuleElement::degree(const FreeModule& F) const {
  check_in(F, "module element degree");
  std::optional<int> deg;
  bool any = false;
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    const auto& p = coordinates[i];
    if (p.is_zero()) continue;
    auto d = p.homogeneous_degree();
    if (!d) return std::nullopt;
    int twisted = *d + F.twist(i);
    if (any && *deg != twisted) return std::nullopt;
    deg = twisted;
    any = true;
  }
  if (!any) throw InvalidArgument("module element: degree of zero is undefined");
  return deg;
}

void ModuleElement::check_in(const FreeModule& F, const char* where) const {
  if (coordinates.size() != F.rank()) {
    throw RingMismatch(std::string(where) + ": element has " +
                       std::to_string(coordinates.size()) + " coordinates, module rank is " +
                       std::to_string(F.rank()));
  }
  for (const auto& p : coordinates) require_same_ring(p.ring(), F.ring(), where);
}

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  if (other.size() != size()) throw RingMismatch("module element sum: rank mismatch");
  ModuleElement r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coordinates[i] += other.coordinates[i];
  return r;
}

ModuleElement ModuleElement::scaled(const Polynomial& p) const {
  ModuleElement r = *this;
  for (auto& c : r.coordinates) c = c * p;
  return r;
}

std::string ModuleElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (i) s += ';';
    s += coordinates[i].to_string();
  }
  return s;
}

ModuleElement parse_element(const FreeModule& F, std::string_view text) {
  ModuleElement e;
  if (F.rank() == 0 && text.find_first_not_of(" \t") == std::string_view::npos) return e;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    std::string_view part = text.substr(start, end == std::string_view::npos ? end : end - start);
    try {
      e.coordinates.push_back(parse_polynomial(F.ring(), part));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), 0, err.column() + static_cast<int>(start));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (e.size() != F.rank()) {
    throw ParseError("element has " + std::to_string(e.size()) + " coordinates, expected " +
                     std::to_string(F.rank()));
  }
  return e;
}

ModuleOrder ModuleOrder::term_over_position(const FreeModule& F) {
  ModuleOrder o;
  o.slots_.resize(F.rank());
  for (std::size_t i = 0; i < F.rank(); ++i) {
    o.slots_[i].twist = F.twist(i);
    o.slots_[i].tie = static_cast<std::uint32_t>(i);
  }
  return o;
}

ModuleOrder ModuleOrder::schreyer(const GradedRing& /*ring*/, const ModuleOrder& previous,
                                  std::span<const Term> leading_terms) {
  ModuleOrder o;
  o.schreyer_ = true;
  o.slots_.resize(leading_terms.size());
  for (std::size_t i = 0; i < leading_terms.size(); ++i) {
    const Term& t = leading_terms[i];
    const Slot& base = previous.slot(t.comp);
    o.slots_[i].shift = t.mono * base.shift;
    o.slots_[i].twist = t.mono.degree() + base.twist;
  }
  std::vector<std::uint32_t> idx(leading_terms.size());
  std::iota(idx.begin(), idx.end(), 0U);
  std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return previous.slot(leading_terms[a].comp).tie < previous.slot(leading_terms[b].comp).tie;
  });
  for (std::uint32_t r = 0; r < idx.size(); ++r) o.slots_[idx[r]].tie = r;
  return o;
}

namespace vec {

TermVec add(const ModuleOrder& order, const TermVec& a, const TermVec& b) {
  TermVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto c = order.compare(*i, *j);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

TermVec add_multiple(const ModuleOrder& order, const TermVec& a, const Monomial& m,
                     const TermVec& b) {
  TermVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  Term tj;
  bool have_j = false;
  while (i != a.end()) {
    if (!have_j) {
      if (j == b.end()) break;
      tj = Term{j->mono * m, j->comp};
      ++j;
      have_j = true;
    }
    auto c = order.compare(*i, tj);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(tj);
      have_j = false;
    } else {
      ++i;
      have_j = false;
    }
  }
  out.insert(out.end(), i, a.end());
  if (have_j) out.push_back(tj);
  for (; j != b.end(); ++j) out.push_back(Term{j->mono * m, j->comp});
  return out;
}

TermVec multiply(const TermVec& v, const Monomial& m) {
  TermVec out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(Term{t.mono * m, t.comp});
  return out;
}

void sort(const ModuleOrder& order, TermVec& v) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.greater(a, b); });
}

void canonicalize(const ModuleOrder& order, TermVec& v) {
  sort(order, v);
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

bool is_homogeneous(const ModuleOrder& order, const TermVec& v) {
  if (v.empty()) return true;
  // Degree is the primary key, so the extremes bound the range.
  return order.degree(v.front()) == order.degree(v.back());
}

TermVec from_element(const ModuleOrder& order, const ModuleElement& e) {
  if (e.size() != order.rank()) throw RingMismatch("module element does not match order rank");
  TermVec v;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (const auto& m : e[i].terms()) v.push_back(Term{m, static_cast<std::uint32_t>(i)});
  }
  sort(order, v);
  return v;
}

ModuleElement to_element(const FreeModule& F, const TermVec& v) {
  std::vector<std::vector<Monomial>> parts(F.rank());
  for (const auto& t : v) parts.at(t.comp).push_back(t.mono);
  ModuleElement e;
  e.coordinates.reserve(F.rank());
  for (std::size_t i = 0; i < F.rank(); ++i) {
    e.coordinates.push_back(Polynomial::from_terms(F.ring(), std::move(parts[i])));
  }
  return e;
}

}  // namespace vec

}  // namespace syzlab

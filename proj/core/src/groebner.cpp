#include "syzlab/groebner.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "syzlab/error.hpp"
#include "syzlab/parallel.hpp"

namespace syzlab {

GroebnerBasis::GroebnerBasis(FreeModule ambient, ModuleOrder order, std::vector<TermVec> basis)
    : ambient_(std::move(ambient)), order_(std::move(order)), basis_(std::move(basis)) {}

std::vector<ModuleElement> GroebnerBasis::generators() const {
  std::vector<ModuleElement> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(vec::to_element(ambient_, v));
  return out;
}

std::vector<Term> GroebnerBasis::leading_terms() const {
  std::vector<Term> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(v.front());
  return out;
}

std::string GroebnerBasis::serialize() const {
  std::ostringstream out;
  for (const auto& v : basis_) {
    auto e = vec::to_element(ambient_, v);
    if (ambient_.rank() == 1) {
      out << e[0].to_string() << '\n';
    } else {
      out << v.front().comp << ": " << e.to_string() << '\n';
    }
  }
  return out.str();
}

namespace engine {

namespace {

// Index of the first basis element (below `limit`) whose leading term divides t.
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t rank) : by_comp_(rank) {}

  void add(std::uint32_t index, const Term& lead) {
    by_comp_.at(lead.comp).push_back({lead.mono, index});
  }

  template <typename Skip>
  std::optional<std::uint32_t> find(const Term& t, std::size_t limit, Skip skip) const {
    for (const auto& [mono, idx] : by_comp_[t.comp]) {
      if (idx >= limit || skip(idx)) continue;
      if (mono.divides(t.mono)) return idx;
    }
    return std::nullopt;
  }

  std::optional<std::uint32_t> find(const Term& t, std::size_t limit) const {
    return find(t, limit, [](std::uint32_t) { return false; });
  }

 private:
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> by_comp_;
};

struct Tracked {
  TermVec value;
  TermVec rep;
};

// Full normal form of `e` with respect to basis[0, limit), optionally
// updating the representation.
template <typename Skip>
void reduce_tracked(const ModuleOrder& order, const ModuleOrder* rep_order,
                    const std::vector<Tracked>& basis, const DivisorIndex& index,
                    std::size_t limit, Tracked& e, Skip skip) {
  TermVec done;
  TermVec cur = std::move(e.value);
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term t = cur[pos];
    auto hit = index.find(t, limit, skip);
    if (!hit) {
      done.push_back(t);
      ++pos;
      continue;
    }
    const Tracked& g = basis[*hit];
    Monomial m = t.mono / g.value.front().mono;
    TermVec tail(cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end());
    cur = vec::add_multiple(order, tail, m, g.value);
    pos = 0;
    if (rep_order) e.rep = vec::add_multiple(*rep_order, e.rep, m, g.rep);
  }
  e.value = std::move(done);
}

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  Monomial lcm;
  int degree;
};

class Buchberger {
 public:
  Buchberger(const GradedRing& ring, const ModuleOrder& order, const ModuleOrder* rep_order,
             const EngineOptions& options)
      : ring_(ring),
        order_(order),
        rep_order_(rep_order),
        options_(options),
        index_(order.rank()),
        ideal_case_(order.rank() == 1 && !order.is_schreyer()) {}

  BuchbergerResult run(std::vector<TermVec> inputs) {
    struct Input {
      std::size_t index;
      int degree;
      Tracked value;
    };
    std::vector<Input> pending;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      TermVec& v = inputs[k];
      if (v.empty()) continue;
      if (!vec::is_homogeneous(order_, v)) {
        throw InvalidArgument("groebner: generator " + std::to_string(k) + " is not homogeneous");
      }
      Tracked t{std::move(v), {}};
      if (rep_order_) t.rep = TermVec{Term{Monomial{}, static_cast<std::uint32_t>(k)}};
      int d = order_.degree(t.value.front());
      pending.push_back(Input{k, d, std::move(t)});
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Input& a, const Input& b) { return a.degree < b.degree; });

    BuchbergerResult result;
    std::size_t next_input = 0;
    while (!pairs_.empty() || next_input < pending.size()) {
      int degree = std::numeric_limits<int>::max();
      for (const auto& p : pairs_) degree = std::min(degree, p.degree);
      if (next_input < pending.size()) degree = std::min(degree, pending[next_input].degree);

      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (const auto& p : pairs_) (p.degree == degree ? batch : rest).push_back(p);
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });

      std::vector<Tracked> work(batch.size());
      const std::size_t snapshot = basis_.size();
      parallel_for(batch.size(), options_.threads, [&](std::size_t k) {
        work[k] = s_vector(batch[k]);
        reduce_tracked(order_, rep_order_, basis_, index_, snapshot, work[k], no_skip);
      });
      for (auto& w : work) {
        reduce_tracked(order_, rep_order_, basis_, index_, basis_.size(), w, no_skip);
        if (!w.value.empty()) insert(std::move(w));
      }

      std::size_t first = next_input;
      while (next_input < pending.size() && pending[next_input].degree == degree) ++next_input;
      const std::size_t snapshot2 = basis_.size();
      parallel_for(next_input - first, options_.threads, [&](std::size_t k) {
        reduce_tracked(order_, rep_order_, basis_, index_, snapshot2, pending[first + k].value,
                       no_skip);
      });
      for (std::size_t k = first; k < next_input; ++k) {
        Tracked& w = pending[k].value;
        reduce_tracked(order_, rep_order_, basis_, index_, basis_.size(), w, no_skip);
        if (!w.value.empty()) {
          result.minimal_inputs.push_back(pending[k].index);
          insert(std::move(w));
        }
      }
    }
    std::sort(result.minimal_inputs.begin(), result.minimal_inputs.end());

    interreduce();

    std::vector<std::size_t> perm(basis_.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return order_.greater(basis_[a].value.front(), basis_[b].value.front());
    });
    for (std::size_t k : perm) {
      result.basis.push_back(std::move(basis_[k].value));
      if (rep_order_) result.representations.push_back(std::move(basis_[k].rep));
    }
    return result;
  }

 private:
  static constexpr auto no_skip = [](std::uint32_t) { return false; };

  Tracked s_vector(const Pair& p) const {
    const Tracked& a = basis_[p.i];
    const Tracked& b = basis_[p.j];
    Monomial ma = p.lcm / a.value.front().mono;
    Monomial mb = p.lcm / b.value.front().mono;
    Tracked s;
    s.value = vec::add_multiple(order_, vec::multiply(a.value, ma), mb, b.value);
    if (rep_order_) s.rep = vec::add_multiple(*rep_order_, vec::multiply(a.rep, ma), mb, b.rep);
    return s;
  }

  Monomial pair_lcm(std::uint32_t i, std::uint32_t j) const {
    return lcm(ring_, basis_[i].value.front().mono, basis_[j].value.front().mono);
  }

  void insert(Tracked h) {
    const auto k = static_cast<std::uint32_t>(basis_.size());
    const Term lead = h.value.front();
    basis_.push_back(std::move(h));
    index_.add(k, lead);

    // Gebauer–Möller update.
    std::deque<Pair> candidates;
    for (std::uint32_t i = 0; i < k; ++i) {
      const Term& li = basis_[i].value.front();
      if (li.comp != lead.comp) continue;
      Monomial l = pair_lcm(i, k);
      candidates.push_back(Pair{i, k, l, l.degree() + order_.slot(lead.comp).twist});
    }
    std::vector<Pair> kept;
    auto is_coprime = [&](const Pair& p) {
      return ideal_case_ && coprime(basis_[p.i].value.front().mono, lead.mono);
    };
    while (!candidates.empty()) {
      Pair p = candidates.front();
      candidates.pop_front();
      bool keep = is_coprime(p);
      if (!keep) {
        keep = true;
        for (const auto& q : candidates) {
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        }
        if (keep) {
          for (const auto& q : kept) {
            if (q.lcm.divides(p.lcm)) {
              keep = false;
              break;
            }
          }
        }
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> updated;
    updated.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      const Term& li = basis_[p.i].value.front();
      if (li.comp == lead.comp && lead.mono.divides(p.lcm) && !(pair_lcm(p.i, k) == p.lcm) &&
          !(pair_lcm(p.j, k) == p.lcm)) {
        continue;
      }
      updated.push_back(p);
    }
    for (const auto& p : kept) {
      if (!is_coprime(p)) updated.push_back(p);
    }
    pairs_ = std::move(updated);
  }

  void interreduce() {
    // Leading terms are already pairwise non-divisible (every insertion was
    // fully reduced and degrees never decrease), so only tails change.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Tracked& g = basis_[i];
      Term lead = g.value.front();
      Tracked tail{TermVec(g.value.begin() + 1, g.value.end()), std::move(g.rep)};
      auto skip = [i](std::uint32_t idx) { return idx == i; };
      reduce_tracked(order_, rep_order_, basis_, index_, basis_.size(), tail, skip);
      g.value.clear();
      g.value.push_back(lead);
      g.value.insert(g.value.end(), tail.value.begin(), tail.value.end());
      g.rep = std::move(tail.rep);
    }
  }

  const GradedRing& ring_;
  const ModuleOrder& order_;
  const ModuleOrder* rep_order_;
  EngineOptions options_;
  std::vector<Tracked> basis_;
  DivisorIndex index_;
  std::vector<Pair> pairs_;
  bool ideal_case_;
};

}  // namespace

BuchbergerResult buchberger(const GradedRing& ring, const ModuleOrder& order,
                            std::vector<TermVec> inputs, const ModuleOrder* rep_order,
                            const EngineOptions& options) {
  return Buchberger(ring, order, rep_order, options).run(std::move(inputs));
}

TermVec reduce(const ModuleOrder& order, TermVec v, const std::vector<TermVec>& basis) {
  DivisorIndex index(order.rank());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.add(static_cast<std::uint32_t>(k), basis[k].front());
  }
  TermVec done;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Term t = v[pos];
    auto hit = index.find(t, basis.size());
    if (!hit) {
      done.push_back(t);
      ++pos;
      continue;
    }
    const TermVec& g = basis[*hit];
    TermVec tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
    v = vec::add_multiple(order, tail, t.mono / g.front().mono, g);
    pos = 0;
  }
  return done;
}

namespace {

Division divide_with_index(const ModuleOrder& order, TermVec v, const std::vector<TermVec>& basis,
                           const DivisorIndex& index, const ModuleOrder& quotient_order) {
  Division out;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Term t = v[pos];
    auto hit = index.find(t, basis.size());
    if (!hit) {
      out.remainder.push_back(t);
      ++pos;
      continue;
    }
    const TermVec& g = basis[*hit];
    Monomial m = t.mono / g.front().mono;
    out.quotient.push_back(Term{m, *hit});
    TermVec tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
    v = vec::add_multiple(order, tail, m, g);
    pos = 0;
  }
  vec::canonicalize(quotient_order, out.quotient);
  return out;
}

}  // namespace

Division divide(const ModuleOrder& order, TermVec v, const std::vector<TermVec>& basis,
                const ModuleOrder& quotient_order) {
  DivisorIndex index(order.rank());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.add(static_cast<std::uint32_t>(k), basis[k].front());
  }
  return divide_with_index(order, std::move(v), basis, index, quotient_order);
}

SchreyerSyzygies schreyer_syzygies(const GradedRing& ring, const ModuleOrder& order,
                                   const std::vector<TermVec>& gb, const EngineOptions& options) {
  std::vector<Term> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) {
    if (g.empty()) throw InternalError("schreyer: zero element in Gröbner basis");
    leads.push_back(g.front());
  }
  SchreyerSyzygies out{ModuleOrder::schreyer(ring, order, leads), {}};

  DivisorIndex index(order.rank());
  for (std::size_t k = 0; k < gb.size(); ++k) index.add(static_cast<std::uint32_t>(k), leads[k]);

  // For each i, the syzygy leading terms are (lcm_ij / lt_i)·e_i over j > i;
  // keeping only the divisibility-minimal ones still gives a Gröbner basis.
  struct Job {
    std::uint32_t i;
    std::uint32_t j;
    Monomial lcm;
  };
  std::vector<Job> jobs;
  for (std::uint32_t i = 0; i < gb.size(); ++i) {
    std::vector<Job> mine;
    for (std::uint32_t j = i + 1; j < gb.size(); ++j) {
      if (leads[j].comp != leads[i].comp) continue;
      mine.push_back(Job{i, j, lcm(ring, leads[i].mono, leads[j].mono)});
    }
    for (std::size_t a = 0; a < mine.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < mine.size() && minimal; ++b) {
        if (a == b) continue;
        bool divides = mine[b].lcm.divides(mine[a].lcm);
        bool equal = mine[b].lcm == mine[a].lcm;
        if (divides && (!equal || b < a)) minimal = false;
      }
      if (minimal) jobs.push_back(mine[a]);
    }
  }

  out.syzygies.resize(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t k) {
    const Job& job = jobs[k];
    Monomial mi = job.lcm / leads[job.i].mono;
    Monomial mj = job.lcm / leads[job.j].mono;
    TermVec s = vec::add_multiple(order, vec::multiply(gb[job.i], mi), mj, gb[job.j]);
    Division div = divide_with_index(order, std::move(s), gb, index, out.order);
    if (!div.remainder.empty()) {
      throw InternalError("schreyer: S-pair does not reduce to zero; input is not a Gröbner basis");
    }
    TermVec syz = div.quotient;
    syz.push_back(Term{mi, job.i});
    syz.push_back(Term{mj, job.j});
    vec::canonicalize(out.order, syz);
    out.syzygies[k] = std::move(syz);
  });
  return out;
}

}  // namespace engine

GroebnerBasis reduced_groebner_basis(const FreeModule& F, const ModuleOrder& order,
                                     std::vector<TermVec> gens, const EngineOptions& options) {
  if (order.rank() != F.rank()) throw RingMismatch("groebner: order does not match module rank");
  auto result = engine::buchberger(*F.ring(), order, std::move(gens), nullptr, options);
  return GroebnerBasis(F, order, std::move(result.basis));
}

namespace {

std::string groebner_key(const FreeModule& F, std::span<const ModuleElement> gens) {
  std::ostringstream out;
  out << kEngineVersion << "\ngroebner\nring:";
  for (const auto& name : F.ring()->names()) out << ' ' << name;
  out << " deg";
  for (int d : F.ring()->degrees()) out << ' ' << d;
  out << "\ntwists";
  for (int t : F.twists()) out << ' ' << t;
  out << '\n';
  for (const auto& g : gens) out << g.to_string() << '\n';
  return out.str();
}

}  // namespace

GroebnerBasis reduced_groebner_basis(const FreeModule& F, std::span<const ModuleElement> gens,
                                     const EngineOptions& options) {
  auto order = ModuleOrder::term_over_position(F);
  std::vector<TermVec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    g.check_in(F, "reduced_groebner_basis");
    vs.push_back(vec::from_element(order, g));
  }
  std::string key;
  if (options.cache && F.rank() > 0) {
    key = groebner_key(F, gens);
    if (auto hit = options.cache->load("groebner", key)) {
      std::vector<TermVec> basis;
      std::istringstream in(*hit);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) basis.push_back(vec::from_element(order, parse_element(F, line)));
      }
      return GroebnerBasis(F, order, std::move(basis));
    }
  }
  GroebnerBasis gb = reduced_groebner_basis(F, order, std::move(vs), options);
  if (!key.empty()) {
    std::ostringstream payload;
    for (const auto& v : gb.vectors()) payload << vec::to_element(F, v).to_string() << '\n';
    options.cache->store("groebner", key, payload.str());
  }
  return gb;
}

GroebnerBasis ideal_groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                                   const EngineOptions& options) {
  FreeModule F = FreeModule::of_rank(ring, 1);
  std::vector<ModuleElement> es;
  for (const auto& g : gens) es.push_back(ModuleElement{{g}});
  return reduced_groebner_basis(F, es, options);
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
  v.check_in(gb.ambient(), "normal_form");
  TermVec r = engine::reduce(gb.order(), vec::from_element(gb.order(), v), gb.vectors());
  return vec::to_element(gb.ambient(), r);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.ambient().rank() != 1) throw RingMismatch("normal_form: basis is not an ideal basis");
  return normal_form(ModuleElement{{f}}, gb)[0];
}

std::vector<Term> initial_module(const GroebnerBasis& gb) {
  auto leads = gb.leading_terms();
  std::vector<Term> out;
  for (std::size_t a = 0; a < leads.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < leads.size() && minimal; ++b) {
      if (a == b || leads[a].comp != leads[b].comp) continue;
      if (leads[b].mono.divides(leads[a].mono) && (!(leads[b].mono == leads[a].mono) || b < a)) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(leads[a]);
  }
  return out;
}

}  // namespace syzlab

#include "syzlab/homalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "syzlab/error.hpp"
#include "syzlab/oracle.hpp"

namespace syzlab {

ModuleMap::ModuleMap(FreeModule source, FreeModule target, std::vector<ModuleElement> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  require_same_ring(source_.ring(), target_.ring(), "module map");
  if (columns_.size() != source_.rank()) {
    throw RingMismatch("module map: " + std::to_string(columns_.size()) +
                       " columns for a source of rank " + std::to_string(source_.rank()));
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    columns_[j].check_in(target_, "module map");
    if (columns_[j].is_zero()) continue;
    auto d = columns_[j].degree(target_);
    if (!d || *d != source_.twist(j)) {
      throw InvalidArgument("module map: column " + std::to_string(j) +
                            " is not homogeneous of degree " + std::to_string(source_.twist(j)));
    }
  }
}

ModuleMap ModuleMap::zero(FreeModule source, FreeModule target) {
  std::vector<ModuleElement> cols(source.rank(), ModuleElement::zero(target));
  return ModuleMap(std::move(source), std::move(target), std::move(cols));
}

ModuleMap ModuleMap::identity(const FreeModule& F) {
  std::vector<ModuleElement> cols;
  for (std::size_t i = 0; i < F.rank(); ++i) cols.push_back(ModuleElement::basis(F, i));
  return ModuleMap(F, F, std::move(cols));
}

ModuleMap ModuleMap::from_columns(const FreeModule& target, std::vector<ModuleElement> columns) {
  std::vector<int> twists;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    columns[j].check_in(target, "module map");
    if (columns[j].is_zero()) {
      twists.push_back(0);
      continue;
    }
    auto d = columns[j].degree(target);
    if (!d) throw InvalidArgument("module map: column " + std::to_string(j) + " is not homogeneous");
    twists.push_back(*d);
  }
  return ModuleMap(FreeModule(target.ring(), std::move(twists)), target, std::move(columns));
}

ModuleElement ModuleMap::apply(const ModuleElement& v) const {
  v.check_in(source_, "module map apply");
  ModuleElement out = ModuleElement::zero(target_);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < target_.rank(); ++i) {
      if (!columns_[j][i].is_zero()) out[i] += v[j] * columns_[j][i];
    }
  }
  return out;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  require_same_module(inner.target_, source_, "module map compose");
  std::vector<ModuleElement> cols;
  cols.reserve(inner.columns_.size());
  for (const auto& c : inner.columns_) cols.push_back(apply(c));
  return ModuleMap(inner.source_, target_, std::move(cols));
}

ModuleMap ModuleMap::dual() const {
  FreeModule src = target_.dual();
  FreeModule tgt = source_.dual();
  std::vector<ModuleElement> cols;
  cols.reserve(target_.rank());
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    ModuleElement c = ModuleElement::zero(tgt);
    for (std::size_t j = 0; j < source_.rank(); ++j) c[j] = columns_[j][i];
    cols.push_back(std::move(c));
  }
  return ModuleMap(std::move(src), std::move(tgt), std::move(cols));
}

bool ModuleMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const ModuleElement& c) { return c.is_zero(); });
}

std::string ModuleMap::to_string() const {
  std::ostringstream out;
  for (const auto& c : columns_) out << c.to_string() << '\n';
  return out.str();
}

namespace {

ModuleMap nonzero_relations(const FreeModule& ambient, std::vector<ModuleElement> rels) {
  std::vector<ModuleElement> kept;
  for (auto& r : rels) {
    r.check_in(ambient, "presented module");
    if (!r.is_zero()) kept.push_back(std::move(r));
  }
  return ModuleMap::from_columns(ambient, std::move(kept));
}

}  // namespace

PresentedModule::PresentedModule(FreeModule ambient, std::vector<ModuleElement> relations)
    : ambient_(ambient), relations_(nonzero_relations(ambient, std::move(relations))) {}

PresentedModule::PresentedModule(const ModuleMap& relations)
    : ambient_(relations.target()), relations_(relations) {}

PresentedModule PresentedModule::shifted(int k) const {
  return PresentedModule(ModuleMap(relations_.source().shifted(k), ambient_.shifted(k),
                                   relations_.columns()));
}

std::string PresentedModule::serialize() const {
  std::ostringstream out;
  const GradedRing& ring = *ambient_.ring();
  out << "ring:";
  for (const auto& name : ring.names()) out << ' ' << name;
  out << " deg";
  for (int d : ring.degrees()) out << ' ' << d;
  out << "\nambient: rank " << ambient_.rank() << " twists ";
  for (std::size_t i = 0; i < ambient_.rank(); ++i) {
    if (i) out << ',';
    out << ambient_.twist(i);
  }
  out << "\nrelations:\n";
  for (const auto& c : relations_.columns()) out << c.to_string() << '\n';
  return out.str();
}

bool ChainComplex::is_complex() const {
  if (modules.size() != maps.size() + 1) return false;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].target() == modules[i]) || !(maps[i].source() == modules[i + 1])) return false;
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!maps[i].compose(maps[i + 1]).is_zero()) return false;
  }
  return true;
}

BettiTable::BettiTable(const ChainComplex& resolution) {
  for (std::size_t i = 0; i < resolution.modules.size(); ++i) {
    for (int t : resolution.modules[i].twists()) ++entries_[{static_cast<int>(i), t}];
  }
}

std::size_t BettiTable::at(int i, int degree) const {
  auto it = entries_.find({i, degree});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t sum = 0;
  for (const auto& [key, v] : entries_) {
    if (key.first == i) sum += v;
  }
  return sum;
}

int BettiTable::length() const {
  int len = 0;
  for (const auto& [key, v] : entries_) {
    if (v > 0) len = std::max(len, key.first);
  }
  return len;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, v] : entries_) out.push_back({key.first, key.second, v});
  return out;
}

std::string BettiTable::to_string() const {
  std::ostringstream out;
  int current = -1;
  for (const auto& [key, v] : entries_) {
    if (key.first != current) {
      if (current >= 0) out << '\n';
      current = key.first;
      out << key.first << ':';
    }
    out << ' ' << key.second << '^' << v;
  }
  return out.str();
}

std::vector<ModuleElement> kernel(const ModuleMap& f, const EngineOptions& options) {
  const FreeModule& F = f.source();
  const FreeModule& G = f.target();
  const GradedRing& ring = *F.ring();
  const ModuleOrder order = ModuleOrder::term_over_position(G);
  const ModuleOrder rep_order = ModuleOrder::term_over_position(F);

  std::vector<TermVec> inputs;
  inputs.reserve(F.rank());
  for (const auto& c : f.columns()) inputs.push_back(vec::from_element(order, c));
  auto gb = engine::buchberger(ring, order, inputs, &rep_order, options);
  auto syz = engine::schreyer_syzygies(ring, order, gb.basis, options);

  std::vector<TermVec> candidates;
  for (const auto& s : syz.syzygies) {
    TermVec v;
    for (const auto& t : s) v = vec::add_multiple(rep_order, v, t.mono, gb.representations[t.comp]);
    if (!v.empty()) candidates.push_back(std::move(v));
  }
  for (std::uint32_t j = 0; j < inputs.size(); ++j) {
    TermVec v{Term{Monomial{}, j}};
    if (!inputs[j].empty()) {
      auto div = engine::divide(order, inputs[j], gb.basis, syz.order);
      if (!div.remainder.empty()) throw InternalError("kernel: column does not reduce to zero");
      for (const auto& t : div.quotient) {
        v = vec::add_multiple(rep_order, v, t.mono, gb.representations[t.comp]);
      }
    }
    if (!v.empty()) candidates.push_back(std::move(v));
  }

  auto minimal = engine::buchberger(ring, rep_order, candidates, nullptr, options);
  std::vector<ModuleElement> out;
  out.reserve(minimal.minimal_inputs.size());
  for (std::size_t k : minimal.minimal_inputs) out.push_back(vec::to_element(F, candidates[k]));
  return out;
}

namespace {

FreeModule module_of_degrees(const RingPtr& ring, const FreeModule& ambient,
                             const std::vector<ModuleElement>& gens) {
  std::vector<int> twists;
  twists.reserve(gens.size());
  for (const auto& g : gens) twists.push_back(*g.degree(ambient));
  return FreeModule(ring, std::move(twists));
}

}  // namespace

PresentedModule kernel_module(const ModuleMap& f, const EngineOptions& options) {
  auto gens = kernel(f, options);
  FreeModule P = module_of_degrees(f.ring(), f.source(), gens);
  ModuleMap inclusion(P, f.source(), std::move(gens));
  return PresentedModule(P, kernel(inclusion, options));
}

PresentedModule cokernel_presentation(const ModuleMap& f) { return PresentedModule(f); }

ChainComplex prune(ChainComplex complex) {
  const std::size_t L = complex.maps.size();
  if (L == 0) return complex;
  const RingPtr ring = complex.modules.front().ring();
  std::vector<std::vector<int>> twists;
  for (const auto& F : complex.modules) twists.push_back(F.twists());
  std::vector<std::vector<std::vector<Polynomial>>> cols(L);
  for (std::size_t k = 0; k < L; ++k) {
    for (const auto& c : complex.maps[k].columns()) cols[k].push_back(c.coordinates);
  }

  for (std::size_t k = 0; k < L; ++k) {
    while (true) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      bool found = false;
      for (std::size_t c = 0; c < cols[k].size() && !found; ++c) {
        for (std::size_t r = 0; r < cols[k][c].size(); ++r) {
          if (cols[k][c][r].is_one()) {
            pr = r;
            pc = c;
            found = true;
            break;
          }
        }
      }
      if (!found) break;

      const std::vector<Polynomial> pivot = cols[k][pc];
      for (std::size_t c = 0; c < cols[k].size(); ++c) {
        if (c == pc) continue;
        const Polynomial a = cols[k][c][pr];
        if (a.is_zero()) continue;
        for (std::size_t i = 0; i < pivot.size(); ++i) {
          if (!pivot[i].is_zero()) cols[k][c][i] += a * pivot[i];
        }
      }
      cols[k].erase(cols[k].begin() + static_cast<std::ptrdiff_t>(pc));
      for (auto& c : cols[k]) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pr));
      twists[k + 1].erase(twists[k + 1].begin() + static_cast<std::ptrdiff_t>(pc));
      twists[k].erase(twists[k].begin() + static_cast<std::ptrdiff_t>(pr));
      if (k + 1 < L) {
        for (auto& c : cols[k + 1]) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pc));
      }
      if (k > 0) cols[k - 1].erase(cols[k - 1].begin() + static_cast<std::ptrdiff_t>(pr));
    }
  }

  ChainComplex out;
  for (auto& t : twists) out.modules.emplace_back(ring, std::move(t));
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<ModuleElement> elems;
    elems.reserve(cols[k].size());
    for (auto& c : cols[k]) elems.push_back(ModuleElement{std::move(c)});
    out.maps.emplace_back(out.modules[k + 1], out.modules[k], std::move(elems));
  }
  // Trailing zero modules carry no information.
  while (!out.maps.empty() && out.modules.back().rank() == 0) {
    out.maps.pop_back();
    out.modules.pop_back();
  }
  return out;
}

PresentedModule minimal_presentation(const PresentedModule& M, const EngineOptions& options) {
  ChainComplex cx;
  cx.modules = {M.ambient(), M.relations().source()};
  cx.maps = {M.relations()};
  ChainComplex pruned = prune(std::move(cx));
  const FreeModule& F = pruned.modules.front();
  if (pruned.maps.empty()) return PresentedModule::free(F);

  const ModuleOrder order = ModuleOrder::term_over_position(F);
  std::vector<TermVec> inputs;
  for (const auto& c : pruned.maps[0].columns()) inputs.push_back(vec::from_element(order, c));
  auto gb = engine::buchberger(*F.ring(), order, inputs, nullptr, options);
  std::vector<ModuleElement> rels;
  for (std::size_t k : gb.minimal_inputs) rels.push_back(pruned.maps[0].column(k));
  return PresentedModule(F, std::move(rels));
}

namespace {

// Orders the elements of a Gröbner basis so that, within a component, lead
// monomials decrease lexicographically from the last variable down. Syzygy
// leads then avoid the last variable still in play, bounding the length of
// the Schreyer resolution by the number of variables.
void schreyer_sort(std::vector<TermVec>& gb) {
  std::stable_sort(gb.begin(), gb.end(), [](const TermVec& a, const TermVec& b) {
    const Term& la = a.front();
    const Term& lb = b.front();
    if (la.comp != lb.comp) return la.comp < lb.comp;
    std::uint64_t diff = la.mono.packed() ^ lb.mono.packed();
    if (diff == 0) return false;
    int byte = (63 - __builtin_clzll(diff)) / 8;
    return la.mono.exponent(static_cast<std::size_t>(byte)) >
           lb.mono.exponent(static_cast<std::size_t>(byte));
  });
}

std::string resolution_key(const PresentedModule& M) {
  return std::string(kEngineVersion) + "\nresolution\n" + M.serialize();
}

}  // namespace

Resolution minimal_free_resolution(const PresentedModule& M, const EngineOptions& options,
                                   std::optional<int> max_length) {
  const GradedRing& ring = *M.ring();
  const int limit = max_length.value_or(static_cast<int>(ring.num_variables()));
  std::string key;
  if (options.cache) {
    key = resolution_key(M);
    if (auto hit = options.cache->load("resolution", key)) {
      ChainComplex cx = parse_complex(M.ring(), *hit);
      BettiTable betti(cx);
      return Resolution{std::move(cx), std::move(betti)};
    }
  }

  PresentedModule P = minimal_presentation(M, options);
  ChainComplex frame;
  frame.modules.push_back(P.ambient());
  ModuleOrder order = ModuleOrder::term_over_position(P.ambient());
  std::vector<TermVec> inputs;
  for (const auto& c : P.relations().columns()) inputs.push_back(vec::from_element(order, c));
  std::vector<TermVec> gb = engine::buchberger(ring, order, std::move(inputs), nullptr, options).basis;

  // A Schreyer frame is at most one step longer than the number of variables.
  const std::size_t frame_limit = ring.num_variables() + 2;
  while (!gb.empty()) {
    if (frame.maps.size() >= frame_limit) {
      throw InternalError("resolution: Schreyer frame did not terminate");
    }
    schreyer_sort(gb);
    const FreeModule& prev = frame.modules.back();
    std::vector<int> twists;
    std::vector<ModuleElement> cols;
    for (const auto& g : gb) {
      twists.push_back(order.degree(g.front()));
      cols.push_back(vec::to_element(prev, g));
    }
    FreeModule next(M.ring(), std::move(twists));
    frame.maps.emplace_back(next, prev, std::move(cols));
    frame.modules.push_back(next);
    auto syz = engine::schreyer_syzygies(ring, order, gb, options);
    order = std::move(syz.order);
    gb = std::move(syz.syzygies);
  }

  ChainComplex minimal = prune(std::move(frame));
  if (static_cast<int>(minimal.length()) > limit) {
    throw InternalError("resolution: length " + std::to_string(minimal.length()) +
                        " exceeds the bound " + std::to_string(limit));
  }
  if (options.cache) options.cache->store("resolution", key, serialize_complex(minimal));
  BettiTable betti(minimal);
  return Resolution{std::move(minimal), std::move(betti)};
}

GroebnerBasis relation_basis(const PresentedModule& M, const EngineOptions& options) {
  return reduced_groebner_basis(M.ambient(), M.relations().columns(), options);
}

RationalSeries hilbert_series(const GroebnerBasis& gb) {
  const FreeModule& F = gb.ambient();
  const GradedRing& ring = *F.ring();
  std::vector<std::vector<Monomial>> by_comp(F.rank());
  for (const auto& t : gb.leading_terms()) by_comp[t.comp].push_back(t.mono);
  IntPolynomial num;
  for (std::size_t c = 0; c < F.rank(); ++c) {
    num += monomial_hilbert_numerator(ring, std::move(by_comp[c])).shifted(F.twist(c));
  }
  return RationalSeries(std::move(num), ring.degrees());
}

RationalSeries hilbert_series(const PresentedModule& M, const EngineOptions& options) {
  return hilbert_series(relation_basis(M, options));
}

int dimension(const GroebnerBasis& gb) {
  const FreeModule& F = gb.ambient();
  const std::size_t n = F.ring()->num_variables();
  std::vector<std::vector<std::uint64_t>> supports(F.rank());
  std::vector<bool> killed(F.rank(), false);
  for (const auto& t : gb.leading_terms()) {
    if (t.mono.is_one()) killed[t.comp] = true;
    supports[t.comp].push_back(t.mono.support_mask(n));
  }
  int best = -1;
  for (std::size_t c = 0; c < F.rank(); ++c) {
    if (killed[c]) continue;
    // Largest set of variables containing the support of no leading monomial.
    for (std::uint64_t S = 0; S < (1ULL << n); ++S) {
      int size = std::popcount(S);
      if (size <= best) continue;
      bool free_set = std::none_of(supports[c].begin(), supports[c].end(),
                                   [S](std::uint64_t m) { return (m & ~S) == 0; });
      if (free_set) best = size;
    }
  }
  return best;
}

int dimension(const PresentedModule& M, const EngineOptions& options) {
  return dimension(relation_basis(M, options));
}

bool is_zero_module(const PresentedModule& M, const EngineOptions& options) {
  return dimension(M, options) < 0;
}

PresentedModule homology(const ModuleMap& incoming, const ModuleMap& outgoing,
                         const EngineOptions& options) {
  require_same_module(incoming.target(), outgoing.source(), "homology");
  const FreeModule& B = outgoing.source();
  const RingPtr& ring = B.ring();
  if (outgoing.is_zero()) {
    return minimal_presentation(PresentedModule(B, incoming.columns()), options);
  }
  auto cycles = kernel(outgoing, options);
  if (cycles.empty()) return PresentedModule::free(FreeModule(ring, {}));
  FreeModule P = module_of_degrees(ring, B, cycles);

  // x ∈ P is a boundary iff (x, y) ∈ ker [ζ | incoming] for some y.
  FreeModule joint = P.direct_sum(incoming.source());
  std::vector<ModuleElement> cols = cycles;
  cols.insert(cols.end(), incoming.columns().begin(), incoming.columns().end());
  auto pairs = kernel(ModuleMap(joint, B, std::move(cols)), options);
  std::vector<ModuleElement> rels;
  for (const auto& v : pairs) {
    ModuleElement r = ModuleElement::zero(P);
    for (std::size_t i = 0; i < P.rank(); ++i) r[i] = v[i];
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  return minimal_presentation(PresentedModule(P, std::move(rels)), options);
}

ExtModules ext_modules(const Resolution& resolution, int i_max, const EngineOptions& options) {
  const ChainComplex& cx = resolution.complex;
  const RingPtr& ring = cx.modules.front().ring();
  const int n = static_cast<int>(ring->num_variables());
  ExtModules out;
  if (i_max > n) {
    out.truncated = true;
    i_max = n;
  }
  const int L = static_cast<int>(cx.length());
  const FreeModule empty(ring, {});
  for (int i = 1; i <= i_max; ++i) {
    if (i > L) {
      out.modules.push_back(PresentedModule::free(empty));
      continue;
    }
    ModuleMap incoming = cx.maps[static_cast<std::size_t>(i - 1)].dual();
    ModuleMap outgoing = i < L ? cx.maps[static_cast<std::size_t>(i)].dual()
                               : ModuleMap::zero(cx.modules[static_cast<std::size_t>(i)].dual(), empty);
    out.modules.push_back(homology(incoming, outgoing, options));
  }
  return out;
}

ExtModules ext_modules(const PresentedModule& M, int i_max, const EngineOptions& options) {
  return ext_modules(minimal_free_resolution(M, options), i_max, options);
}

FreeModule base_change(const FreeModule& F, const RingPtr& target) {
  return FreeModule(target, F.twists());
}

ModuleMap base_change(const ModuleMap& f, const RingMap& phi) {
  require_same_ring(f.ring(), phi.source(), "base change");
  FreeModule src = base_change(f.source(), phi.target());
  FreeModule tgt = base_change(f.target(), phi.target());
  std::vector<ModuleElement> cols;
  for (const auto& c : f.columns()) {
    ModuleElement e;
    for (const auto& p : c.coordinates) e.coordinates.push_back(phi.apply(p));
    cols.push_back(std::move(e));
  }
  return ModuleMap(std::move(src), std::move(tgt), std::move(cols));
}

PresentedModule base_change(const PresentedModule& M, const RingMap& phi) {
  return PresentedModule(base_change(M.relations(), phi));
}

PresentedModule module_assemble(std::span<const std::pair<PresentedModule, int>> parts) {
  if (parts.empty()) throw InvalidArgument("module_assemble: no parts");
  const RingPtr ring = parts.front().first.ring();
  std::vector<int> twists;
  for (const auto& [M, k] : parts) {
    require_same_ring(ring, M.ring(), "module_assemble");
    for (int t : M.ambient().twists()) twists.push_back(t + k);
  }
  FreeModule ambient(ring, twists);
  std::vector<ModuleElement> rels;
  std::size_t offset = 0;
  for (const auto& [M, k] : parts) {
    for (const auto& c : M.relations().columns()) {
      ModuleElement r = ModuleElement::zero(ambient);
      for (std::size_t i = 0; i < c.size(); ++i) r[offset + i] = c[i];
      rels.push_back(std::move(r));
    }
    offset += M.ambient().rank();
  }
  return PresentedModule(std::move(ambient), std::move(rels));
}

nlohmann::json resolution_certificate(const Resolution& resolution, const RationalSeries& series) {
  return nlohmann::json{{"betti", resolution.betti.to_json()}, {"hilbert", series.to_json()}};
}

nlohmann::json ExactnessReport::to_json() const {
  nlohmann::json out{{"status", passed ? "PASS" : "FAILED"},
                     {"degree_bound", degree_bound},
                     {"pieces_checked", pieces_checked}};
  if (!witness.empty()) out["witness"] = witness;
  return out;
}

ExactnessReport check_resolution_exactness(const Resolution& resolution, const PresentedModule& M,
                                           int degree_bound) {
  ExactnessReport report;
  report.degree_bound = degree_bound;
  const ChainComplex& cx = resolution.complex;
  if (!cx.is_complex()) {
    report.passed = false;
    report.witness = "maps do not compose to zero";
    return report;
  }
  const FreeModule& F0 = cx.modules.front();
  if (F0.rank() == 0 && M.num_generators() == 0) return report;
  int lo = 0;
  bool any = false;
  for (int t : M.ambient().twists()) {
    lo = any ? std::min(lo, t) : t;
    any = true;
  }
  const auto& rels = M.relations().columns();
  for (int deg = lo; deg <= lo + degree_bound; ++deg) {
    auto rank_of = [&](std::size_t i) -> std::size_t {
      if (i == 0 || i > cx.maps.size()) return 0;
      const ModuleMap& d = cx.maps[i - 1];
      return oracle::map_rank(d.source(), d.target(), d.columns(), deg);
    };
    const std::size_t m_dim = oracle::quotient_dimension(M.ambient(), rels, deg);
    for (std::size_t i = 0; i < cx.modules.size(); ++i) {
      const std::size_t dim = DegreePiece(cx.modules[i], deg).size();
      const std::size_t image_out = i == 0 ? m_dim : rank_of(i);
      ++report.pieces_checked;
      if (dim != image_out + rank_of(i + 1)) {
        report.passed = false;
        report.witness = "not exact at F_" + std::to_string(i) + " in degree " + std::to_string(deg);
        return report;
      }
    }
  }
  return report;
}

std::string serialize_complex(const ChainComplex& complex) {
  std::ostringstream out;
  out << "syzlab-complex 1\n";
  out << "modules " << complex.modules.size() << '\n';
  for (const auto& F : complex.modules) {
    out << "twists " << F.rank();
    for (int t : F.twists()) out << ' ' << t;
    out << '\n';
  }
  for (const auto& d : complex.maps) {
    out << "map\n";
    for (const auto& c : d.columns()) out << c.to_string() << '\n';
  }
  return out.str();
}

ChainComplex parse_complex(const RingPtr& ring, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next = [&]() -> std::string& {
    if (!std::getline(in, line)) throw ParseError("complex: unexpected end of input", line_no + 1);
    ++line_no;
    return line;
  };
  if (next() != "syzlab-complex 1") throw ParseError("complex: bad header", line_no);
  std::istringstream head(next());
  std::string word;
  std::size_t count = 0;
  if (!(head >> word >> count) || word != "modules") throw ParseError("complex: bad header", line_no);
  ChainComplex cx;
  for (std::size_t k = 0; k < count; ++k) {
    std::istringstream tl(next());
    std::size_t rank = 0;
    if (!(tl >> word >> rank) || word != "twists") throw ParseError("complex: bad twists", line_no);
    std::vector<int> twists(rank);
    for (auto& t : twists) {
      if (!(tl >> t)) throw ParseError("complex: bad twists", line_no);
    }
    cx.modules.emplace_back(ring, std::move(twists));
  }
  for (std::size_t k = 0; k + 1 < count; ++k) {
    if (next() != "map") throw ParseError("complex: expected 'map'", line_no);
    std::vector<ModuleElement> cols;
    for (std::size_t j = 0; j < cx.modules[k + 1].rank(); ++j) {
      cols.push_back(parse_element(cx.modules[k], next()));
    }
    cx.maps.emplace_back(cx.modules[k + 1], cx.modules[k], std::move(cols));
  }
  return cx;
}

}  // namespace syzlab

#include "syzlab/bigpolygon.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "syzlab/error.hpp"

namespace syzlab {

namespace {

int popcount(std::uint32_t s) { return std::popcount(s); }

}  // namespace

PolygonConfig PolygonConfig::equilateral(int n, int a, int b) {
  PolygonConfig cfg;
  cfg.n = n;
  cfg.a = a;
  cfg.b = b;
  cfg.lengths.assign(static_cast<std::size_t>(std::max(n, 0)), Length(1));
  cfg.validate();
  return cfg;
}

std::optional<int> PolygonConfig::m() const {
  if (!is_equilateral() || n % 2 == 0) return std::nullopt;
  return (n - 1) / 2;
}

bool PolygonConfig::is_equilateral() const {
  return std::all_of(lengths.begin(), lengths.end(),
                     [&](const Length& l) { return l == lengths.front(); });
}

Length PolygonConfig::length_of(std::uint32_t subset) const {
  Length total(0);
  for (int j = 0; j < n; ++j) {
    if (subset & (1U << j)) total += lengths[static_cast<std::size_t>(j)];
  }
  return total;
}

bool PolygonConfig::is_short(std::uint32_t subset) const {
  const std::uint32_t full = (1U << n) - 1;
  return length_of(subset) < length_of(full & ~subset);
}

bool PolygonConfig::is_generic() const {
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (length_of(s) == length_of(full & ~s)) return false;
  }
  return true;
}

bool PolygonConfig::is_empty_space() const {
  const std::uint32_t full = (1U << n) - 1;
  for (int j = 0; j < n; ++j) {
    if (is_short(full & ~(1U << j))) return true;
  }
  return false;
}

void PolygonConfig::validate() const {
  if (n < 1 || static_cast<std::size_t>(n + 1) > kMaxVariables) {
    throw InvalidArgument("polygon: n must lie in 1.." + std::to_string(kMaxVariables - 1));
  }
  if (a < 1 || b < 1) throw InvalidArgument("polygon: a and b must be positive");
  if (lengths.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("polygon: expected " + std::to_string(n) + " lengths, got " +
                          std::to_string(lengths.size()));
  }
  for (const auto& l : lengths) {
    if (l <= 0) throw InvalidArgument("polygon: lengths must be positive");
  }
  if (!is_generic()) throw InvalidArgument("polygon: length vector is not generic");
}

PolygonConfig parse_polygon_config(int n, int a, int b, const std::string& lengths_csv) {
  if (lengths_csv.empty()) return PolygonConfig::equilateral(n, a, b);
  PolygonConfig cfg;
  cfg.n = n;
  cfg.a = a;
  cfg.b = b;
  std::stringstream in(lengths_csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t slash = item.find('/');
      if (slash == std::string::npos) {
        cfg.lengths.emplace_back(std::stoll(item));
      } else {
        cfg.lengths.emplace_back(std::stoll(item.substr(0, slash)), std::stoll(item.substr(slash + 1)));
      }
    } catch (const std::logic_error&) {
      throw ParseError("polygon: bad length '" + item + "'");
    }
  }
  cfg.validate();
  return cfg;
}

std::vector<std::uint32_t> ordered_subsets(int n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) out.push_back(s);
  auto elements = [](std::uint32_t s) {
    std::vector<int> e;
    for (int j = 0; j < 32; ++j) {
      if (s & (1U << j)) e.push_back(j);
    }
    return e;
  };
  std::sort(out.begin(), out.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
    return elements(x) < elements(y);
  });
  return out;
}

RingPtr polygon_ring(int n) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("t" + std::to_string(j));
  names.emplace_back("w");
  return make_standard_ring(std::move(names));
}

KoszulData koszul_complex(const RingPtr& ring, std::vector<Polynomial> elements,
                          const EngineOptions& options) {
  const int n = static_cast<int>(elements.size());
  if (n > 16) throw InvalidArgument("koszul: too many elements");
  std::vector<int> degrees;
  for (const auto& e : elements) {
    require_same_ring(ring, e.ring(), "koszul");
    if (e.is_zero()) throw InvalidArgument("koszul: zero element");
    auto d = e.homogeneous_degree();
    if (!d) throw InvalidArgument("koszul: inhomogeneous element " + e.to_string());
    degrees.push_back(*d);
  }
  KoszulData data;
  data.ring = ring;
  data.elements = elements;
  data.bases.resize(static_cast<std::size_t>(n + 1));
  for (std::uint32_t s : ordered_subsets(n)) data.bases[static_cast<std::size_t>(popcount(s))].push_back(s);

  auto twist = [&](std::uint32_t s) {
    int t = 0;
    for (int j = 0; j < n; ++j) {
      if (s & (1U << j)) t += degrees[static_cast<std::size_t>(j)];
    }
    return t;
  };
  for (const auto& basis : data.bases) {
    std::vector<int> twists;
    for (auto s : basis) twists.push_back(twist(s));
    data.complex.modules.emplace_back(ring, std::move(twists));
  }
  for (int i = 1; i <= n; ++i) {
    const auto& src = data.bases[static_cast<std::size_t>(i)];
    const auto& tgt = data.bases[static_cast<std::size_t>(i - 1)];
    const FreeModule& target = data.complex.modules[static_cast<std::size_t>(i - 1)];
    std::vector<ModuleElement> columns;
    for (auto s : src) {
      ModuleElement col = ModuleElement::zero(target);
      for (int j = 0; j < n; ++j) {
        if (!(s & (1U << j))) continue;
        auto pos = std::find(tgt.begin(), tgt.end(), s & ~(1U << j)) - tgt.begin();
        col[static_cast<std::size_t>(pos)] = elements[static_cast<std::size_t>(j)];
      }
      columns.push_back(std::move(col));
    }
    data.complex.maps.emplace_back(data.complex.modules[static_cast<std::size_t>(i)], target,
                                   std::move(columns));
  }

  FreeModule line = FreeModule::of_rank(ring, 1);
  std::vector<ModuleElement> rels;
  for (const auto& e : elements) rels.push_back(ModuleElement{{e}});
  data.quotient_dimension = dimension(PresentedModule(line, std::move(rels)), options);
  data.regular = data.quotient_dimension == static_cast<int>(ring->num_variables()) - n;
  return data;
}

PresentedModule koszul_syzygy(const KoszulData& data, int i, const EngineOptions& options) {
  const int n = static_cast<int>(data.elements.size());
  if (i < 0 || i >= n) throw InvalidArgument("koszul syzygy: index out of range");
  const ModuleMap& d = data.complex.maps[static_cast<std::size_t>(i)];
  // Image of d_{i+1}: its source modulo the kernel, regraded to degree 0.
  const int t = d.source().twist(0);
  std::vector<ModuleElement> rels;
  for (const auto& k : kernel(d, options)) rels.push_back(k);
  PresentedModule image(d.source(), std::move(rels));
  return image.shifted(-t);
}

std::vector<Polynomial> polygon_elements(const RingPtr& ring, int n, int b) {
  const Polynomial w = Polynomial::variable(ring, static_cast<std::size_t>(n));
  std::vector<Polynomial> out;
  for (int j = 0; j < n; ++j) {
    Polynomial t = Polynomial::variable(ring, static_cast<std::size_t>(j));
    out.push_back((t * (t + w)).pow(static_cast<unsigned>(b)));
  }
  return out;
}

IotaMap build_iota(const PolygonConfig& cfg) {
  cfg.validate();
  RingPtr ring = polygon_ring(cfg.n);
  const auto y = polygon_elements(ring, cfg.n, cfg.b);
  const int d = cfg.d();
  const int dbar = cfg.dbar();

  IotaMap out{ModuleMap::zero(FreeModule(ring, {}), FreeModule(ring, {})), {}, ordered_subsets(cfg.n)};
  for (auto s : out.all_subsets) {
    if (cfg.is_short(s)) out.short_subsets.push_back(s);
  }
  std::vector<int> tgt_twists;
  for (auto s : out.all_subsets) tgt_twists.push_back(-popcount(s) * d);
  std::vector<int> src_twists;
  for (auto s : out.short_subsets) src_twists.push_back(-popcount(s) * d);
  for (auto s : out.short_subsets) src_twists.push_back(-(popcount(s) * d + dbar));
  FreeModule target(ring, std::move(tgt_twists));
  FreeModule source(ring, std::move(src_twists));

  auto index_of = [&](std::uint32_t s) {
    return static_cast<std::size_t>(std::find(out.all_subsets.begin(), out.all_subsets.end(), s) -
                                    out.all_subsets.begin());
  };
  std::vector<ModuleElement> columns;
  for (auto s : out.short_subsets) columns.push_back(ModuleElement::basis(target, index_of(s)));
  for (auto s : out.short_subsets) {
    ModuleElement col = ModuleElement::zero(target);
    for (int j = 0; j < cfg.n; ++j) {
      if (s & (1U << j)) continue;
      col[index_of(s | (1U << j))] = y[static_cast<std::size_t>(j)];
    }
    columns.push_back(std::move(col));
  }
  out.map = ModuleMap(std::move(source), std::move(target), std::move(columns));
  return out;
}

PolygonModule bigpolygon_module(const PolygonConfig& cfg, const EngineOptions& options) {
  cfg.validate();
  if (cfg.is_empty_space()) {
    PresentedModule zero = PresentedModule::free(FreeModule(polygon_ring(cfg.n), {}));
    return PolygonModule{zero, zero, zero, true};
  }
  IotaMap iota = build_iota(cfg);
  const int nd = cfg.n * cfg.d();
  PolygonModule out{PresentedModule::free(FreeModule(iota.map.ring(), {})),
                    cokernel_presentation(iota.map).shifted(nd),
                    kernel_module(iota.map, options).shifted(nd - 1), false};
  std::vector<std::pair<PresentedModule, int>> parts{{out.cokernel, 0}, {out.kernel, 0}};
  out.module = module_assemble(parts);
  return out;
}

nlohmann::json TheoremCertificate::to_json() const {
  nlohmann::json out = report.to_json();
  out["status"] = passed ? "PASS" : "FAILED";
  out["m"] = m;
  out["n"] = 2 * m + 1;
  out["a"] = a;
  out["b"] = b;
  out["is_mth_syzygy"] = is_mth;
  out["is_next_syzygy"] = is_next;
  out["kernel_order"] = kernel_order.to_json();
  out["cokernel_order"] = cokernel_order.to_json();
  out["koszul_regular"] = koszul_regular;
  out["degree_bound"] = degree_bound;
  return out;
}

TheoremCertificate verify_syzygy_theorem(int m, int b, int a, const EngineOptions& options) {
  if (m < 1) throw InvalidArgument("theorem check: m must be at least 1");
  PolygonConfig cfg = PolygonConfig::equilateral(2 * m + 1, a, b);
  TheoremCertificate cert;
  cert.m = m;
  cert.a = a;
  cert.b = b;
  RingPtr ring = polygon_ring(cfg.n);
  cert.koszul_regular = koszul_complex(ring, polygon_elements(ring, cfg.n, b), options).regular;

  PolygonModule pm = bigpolygon_module(cfg, options);
  cert.kernel_order = syzygy_order(pm.kernel, options);
  cert.cokernel_order = syzygy_order(pm.cokernel, options);
  cert.report = syzygy_report(pm.module, options);
  cert.is_mth = cert.report.is_jth_syzygy(m);
  cert.is_next = cert.report.is_jth_syzygy(m + 1);
  cert.passed = cert.koszul_regular && cert.is_mth && !cert.is_next &&
                cert.report.order == SyzygyOrder::finite(m);
  return cert;
}

nlohmann::json DecompositionPart::to_json() const {
  return nlohmann::json{{"computed", computed.to_json()},
                        {"free_part", free_part.to_json()},
                        {"free_generators", free_generators},
                        {"koszul_index", koszul_index},
                        {"koszul_series", koszul.to_json()},
                        {"fitted_offset", fitted_offset ? nlohmann::json(*fitted_offset) : nlohmann::json(nullptr)},
                        {"stated_offset", stated_offset},
                        {"derived_offset", derived_offset},
                        {"matches", matches}};
}

nlohmann::json DecompositionCertificate::to_json() const {
  return nlohmann::json{{"status", passed ? "PASS" : "FAILED"},
                        {"n", n},
                        {"a", a},
                        {"b", b},
                        {"kernel", kernel.to_json()},
                        {"cokernel", cokernel.to_json()},
                        {"findings", findings}};
}

namespace {

void fit(DecompositionPart& part) {
  RationalSeries rest = part.computed - part.free_part;
  if (rest.is_zero() || part.koszul.is_zero()) {
    part.matches = rest.is_zero() && part.koszul.is_zero();
    return;
  }
  const int offset = rest.numerator().low_degree() - part.koszul.numerator().low_degree();
  part.fitted_offset = offset;
  part.matches = rest == part.koszul.shifted(offset);
}

}  // namespace

DecompositionCertificate structural_decomposition_check(const PolygonConfig& cfg,
                                                        const EngineOptions& options) {
  auto mm = cfg.m();
  if (!mm || *mm < 1) throw InvalidArgument("decomposition: needs an equilateral polygon with odd n >= 3");
  const int m = *mm;
  const int n = cfg.n;
  const int d = cfg.d();
  const int dbar = cfg.dbar();
  DecompositionCertificate cert;
  cert.n = n;
  cert.a = cfg.a;
  cert.b = cfg.b;

  IotaMap iota = build_iota(cfg);
  const RingPtr& ring = iota.map.ring();
  const RationalSeries unit = RationalSeries::of_ring(*ring);
  KoszulData kos = koszul_complex(ring, polygon_elements(ring, n, cfg.b), options);

  DecompositionPart& ker = cert.kernel;
  ker.computed = hilbert_series(kernel_module(iota.map, options), options);
  for (auto s : iota.all_subsets) {
    if (popcount(s) < m) {
      ker.free_part = ker.free_part + unit.shifted(-(popcount(s) * d + dbar));
      ++ker.free_generators;
    }
  }
  ker.koszul_index = m + 1;
  ker.koszul = hilbert_series(koszul_syzygy(kos, m + 1, options), options);
  ker.stated_offset = -m * d - dbar + 2;
  ker.derived_offset = -m * d - dbar + 2 * cfg.b;
  fit(ker);

  DecompositionPart& cok = cert.cokernel;
  cok.computed = hilbert_series(cokernel_presentation(iota.map), options);
  for (auto s : iota.all_subsets) {
    if (popcount(s) > m + 1) {
      cok.free_part = cok.free_part + unit.shifted(-popcount(s) * d);
      ++cok.free_generators;
    }
  }
  cok.koszul_index = m - 1;
  cok.koszul = hilbert_series(koszul_syzygy(kos, m - 1, options), options);
  cok.stated_offset = -(m + 1) * d;
  cok.derived_offset = cok.stated_offset;
  fit(cok);

  for (const DecompositionPart* part : {&ker, &cok}) {
    const char* name = part == &ker ? "kernel" : "cokernel";
    if (!part->fitted_offset) continue;
    if (*part->fitted_offset != part->stated_offset) {
      cert.findings.push_back(std::string(name) + ": fitted shift " + std::to_string(*part->fitted_offset) +
                              " differs from stated shift " + std::to_string(part->stated_offset));
    }
    if (*part->fitted_offset != part->derived_offset) {
      cert.findings.push_back(std::string(name) + ": fitted shift " + std::to_string(*part->fitted_offset) +
                              " differs from derived shift " + std::to_string(part->derived_offset));
    }
  }
  if (!kos.regular) cert.findings.push_back("y_1^b, ..., y_n^b is not a regular sequence");
  cert.passed = ker.matches && cok.matches && kos.regular;
  return cert;
}

}  // namespace syzlab

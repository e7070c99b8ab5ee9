#include "syzlab/borel.hpp"

#include <algorithm>

#include "syzlab/error.hpp"
#include "syzlab/oracle.hpp"

namespace syzlab {

BorelPair build_borel_pair(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("borel pair: n and m must be positive");
  if (static_cast<std::size_t>(n + m) > kMaxVariables) {
    throw InvalidArgument("borel pair: n + m exceeds " + std::to_string(kMaxVariables));
  }
  std::vector<std::string> gnames;
  std::vector<std::string> hnames;
  std::vector<int> gdeg;
  for (int i = 1; i <= n; ++i) {
    gnames.push_back("c" + std::to_string(i));
    hnames.push_back("t" + std::to_string(i));
    gdeg.push_back(2);
  }
  for (int j = 1; j <= m; ++j) {
    gnames.push_back("w" + std::to_string(j));
    hnames.push_back("w" + std::to_string(j));
    gdeg.push_back(1);
  }
  RingPtr rg = make_ring(gnames, gdeg);
  RingPtr rh = make_standard_ring(hnames);

  Polynomial wsum = Polynomial::zero(rh);
  for (int j = 0; j < m; ++j) wsum += Polynomial::variable(rh, static_cast<std::size_t>(n + j));
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    Polynomial t = Polynomial::variable(rh, static_cast<std::size_t>(i));
    images.push_back(t * t + t * wsum);
  }
  for (int j = 0; j < m; ++j) images.push_back(Polynomial::variable(rh, static_cast<std::size_t>(n + j)));
  RingMap restriction(rg, rh, std::move(images));
  return BorelPair{n, m, rg, rh, std::move(restriction)};
}

nlohmann::json BasisCertificate::to_json() const {
  nlohmann::json out = freeness.to_json();
  out["status"] = passed ? "PASS" : "FAILED";
  out["basis_matches"] = basis_matches;
  out["degrees_binomial"] = degrees_binomial;
  return out;
}

BasisCertificate verify_basis_freeness(const BorelPair& pair, int degree_bound,
                                       const EngineOptions& options) {
  BasisCertificate cert;
  cert.freeness = verify_free_extension(pair.restriction, degree_bound, options);

  std::vector<Polynomial> expected;
  const std::size_t nvars = pair.rh->num_variables();
  for (std::uint32_t eps = 0; eps < (1U << pair.n); ++eps) {
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < pair.n; ++i) e[static_cast<std::size_t>(i)] = (eps >> i) & 1U;
    expected.push_back(Polynomial::monomial(pair.rh, Monomial::from_exponents(*pair.rh, e)));
  }
  auto key = [](const Polynomial& p) { return p.to_string(); };
  std::vector<std::string> got;
  std::vector<std::string> want;
  for (const auto& b : cert.freeness.basis) got.push_back(key(b));
  for (const auto& b : expected) want.push_back(key(b));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  cert.basis_matches = got == want;

  cert.degrees_binomial = true;
  long long binom = 1;
  for (int k = 0; k <= pair.n; ++k) {
    auto it = cert.freeness.basis_degrees.find(k);
    std::size_t count = it == cert.freeness.basis_degrees.end() ? 0 : it->second;
    if (count != static_cast<std::size_t>(binom)) cert.degrees_binomial = false;
    binom = binom * (pair.n - k) / (k + 1);
  }
  cert.passed = cert.freeness.passed && cert.basis_matches && cert.degrees_binomial;
  return cert;
}

WeylAction weyl_action(const BorelPair& pair) {
  if (pair.m != 1) throw InvalidArgument("weyl action: only defined for m = 1");
  WeylAction action;
  const auto n = static_cast<std::size_t>(pair.n);
  const Polynomial w = Polynomial::variable(pair.rh, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v <= n; ++v) {
      Polynomial x = Polynomial::variable(pair.rh, v);
      images.push_back(v == i ? x + w : x);
    }
    action.generators.emplace_back(pair.rh, pair.rh, std::move(images));
  }
  return action;
}

nlohmann::json InvariantsCertificate::to_json() const {
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& [d, p] : dimensions) dims.push_back({d, p.first, p.second});
  nlohmann::json out{{"status", passed ? "PASS" : "FAILED"},
                     {"degree_bound", degree_bound},
                     {"dimensions", dims},
                     {"generators_fixed", generators_fixed},
                     {"involutions", involutions},
                     {"commuting", commuting}};
  if (!witness.empty()) out["witness"] = witness;
  return out;
}

InvariantsCertificate weyl_invariants_check(const BorelPair& pair, std::optional<int> degree_bound) {
  InvariantsCertificate cert;
  cert.degree_bound = degree_bound.value_or(2 * (pair.n + 2));
  WeylAction action = weyl_action(pair);
  const auto& gens = action.generators;
  const RingPtr& rh = pair.rh;
  const std::size_t nv = rh->num_variables();

  cert.generators_fixed = true;
  for (std::size_t v = 0; v < pair.rg->num_variables(); ++v) {
    const Polynomial& image = pair.restriction.image(v);
    for (const auto& phi : gens) {
      if (!(phi.apply(image) == image)) cert.generators_fixed = false;
    }
  }
  cert.involutions = true;
  cert.commuting = true;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t v = 0; v < nv; ++v) {
      Polynomial x = Polynomial::variable(rh, v);
      if (!(gens[a].apply(gens[a].apply(x)) == x)) cert.involutions = false;
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        if (!(gens[a].apply(gens[b].apply(x)) == gens[b].apply(gens[a].apply(x)))) {
          cert.commuting = false;
        }
      }
    }
  }

  FreeModule line = FreeModule::of_rank(rh, 1);
  bool dims_equal = true;
  for (int d = 0; d <= cert.degree_bound; ++d) {
    DegreePiece piece(line, d);
    const std::size_t width = piece.size();
    // Invariants: kernel of u ↦ (φ_1(u) − u, ..., φ_n(u) − u).
    std::vector<std::vector<std::uint64_t>> rows;
    const std::size_t words = (width * gens.size() + 63) / 64;
    for (const auto& t : piece.terms()) {
      std::vector<std::uint64_t> row(words, 0);
      Polynomial u = Polynomial::monomial(rh, t.mono);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto bits = piece.bits(ModuleElement{{gens[g].apply(u) + u}});
        for (std::size_t k = 0; k < width; ++k) {
          if (Gf2RowSpace::test(bits, k)) Gf2RowSpace::flip(row, g * width + k);
        }
      }
      rows.push_back(std::move(row));
    }
    std::size_t invariant_dim = width - gf2_rank(std::move(rows), width * gens.size());

    std::vector<std::vector<std::uint64_t>> images;
    for (const auto& u : monomials_of_degree(*pair.rg, d)) {
      images.push_back(piece.bits(ModuleElement{{pair.restriction.apply(u)}}));
    }
    std::size_t image_dim = gf2_rank(std::move(images), width);
    cert.dimensions[d] = {invariant_dim, image_dim};
    if (invariant_dim != image_dim && dims_equal) {
      dims_equal = false;
      cert.witness = "degree " + std::to_string(d) + ": invariants " +
                     std::to_string(invariant_dim) + ", image " + std::to_string(image_dim);
    }
  }
  cert.passed = dims_equal && cert.generators_fixed && cert.involutions && cert.commuting;
  return cert;
}

bool free_extension_series_check(const std::vector<RationalSeries>& chain) {
  if (chain.size() < 2) throw InvalidArgument("series chain needs at least P_BK and P_BG");
  RationalSeries product = chain[1];
  for (std::size_t k = 2; k < chain.size(); ++k) product = product * chain[k];
  return chain[0] == product;
}

std::vector<CatalogEntry> parse_series_catalog(const nlohmann::json& catalog) {
  if (!catalog.is_object() || !catalog.contains("pairs") || !catalog["pairs"].is_array()) {
    throw ParseError("series catalog: expected {\"pairs\": [...]}");
  }
  std::vector<CatalogEntry> out;
  for (const auto& p : catalog["pairs"]) {
    if (!p.contains("name") || !p.contains("bk") || !p.contains("bg")) {
      throw ParseError("series catalog: every pair needs name, bk and bg");
    }
    CatalogEntry e;
    e.name = p["name"].get<std::string>();
    e.chain.push_back(RationalSeries::from_json(p["bk"]));
    e.chain.push_back(RationalSeries::from_json(p["bg"]));
    if (p.contains("fibers")) {
      for (const auto& f : p["fibers"]) e.chain.push_back(RationalSeries::from_json(f));
    }
    e.expected = p.value("expected", true);
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::json EulerCertificate::to_json() const {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& r : rows) {
    table.push_back({{"map", r.name},
                     {"image", r.image.to_string()},
                     {"expected", r.expected.to_string()},
                     {"ok", r.image == r.expected}});
  }
  return nlohmann::json{{"status", passed ? "PASS" : "FAILED"},
                        {"class", euler_class},
                        {"restrictions", table},
                        {"consistent_classes", consistent_classes}};
}

EulerCertificate euler_class_restriction_table() {
  RingPtr g = make_standard_ring({"x", "w"});
  RingPtr k = make_standard_ring({"t"});
  const Polynomial x = Polynomial::variable(g, "x");
  const Polynomial w = Polynomial::variable(g, "w");
  const Polynomial t = Polynomial::variable(k, "t");
  const Polynomial zero = Polynomial::zero(k);
  const Polynomial euler = x * (x + w);

  struct Case {
    const char* name;
    Polynomial x_image;
    Polynomial w_image;
    Polynomial expected;
  };
  std::vector<Case> cases{{"x->t, w->0", t, zero, t * t},
                          {"x->0, w->t", zero, t, zero},
                          {"x->t, w->t", t, t, zero}};
  EulerCertificate cert;
  cert.euler_class = euler.to_string();
  cert.passed = true;
  std::vector<RingMap> maps;
  for (const auto& c : cases) {
    RingMap j(g, k, {c.x_image, c.w_image});
    Polynomial image = j.apply(euler);
    cert.passed = cert.passed && image == c.expected;
    cert.rows.push_back(EulerRow{c.name, image, c.expected});
    maps.push_back(std::move(j));
  }
  // Which quadratic classes restrict correctly along all three maps?
  const std::vector<Polynomial> quadrics{x * x, x * w, w * w};
  for (unsigned mask = 0; mask < 8; ++mask) {
    Polynomial q = Polynomial::zero(g);
    for (unsigned b = 0; b < 3; ++b) {
      if (mask & (1U << b)) q += quadrics[b];
    }
    bool ok = true;
    for (std::size_t i = 0; i < maps.size(); ++i) ok = ok && maps[i].apply(q) == cases[i].expected;
    if (ok) cert.consistent_classes.push_back(q.to_string());
  }
  cert.passed = cert.passed && cert.consistent_classes.size() == 1 &&
                cert.consistent_classes.front() == euler.to_string();
  return cert;
}

}  // namespace syzlab

#include <functional>
#include <random>

#include "cli.hpp"
#include "random_modules.hpp"
#include "syzlab/bigpolygon.hpp"
#include "syzlab/borel.hpp"
#include "syzlab/error.hpp"
#include "syzlab/io.hpp"
#include "syzlab/oracle.hpp"

namespace syzlab::cli {

namespace {

struct Check {
  std::string name;
  std::function<bool()> body;
};

RingPtr tw() { return make_standard_ring({"t", "w"}); }

Polynomial P(const RingPtr& r, const char* text) { return parse_polynomial(r, text); }

PresentedModule quotient(const RingPtr& r, std::initializer_list<const char*> gens) {
  FreeModule F = FreeModule::of_rank(r, 1);
  std::vector<ModuleElement> rels;
  for (const char* g : gens) rels.push_back(ModuleElement{{P(r, g)}});
  return PresentedModule(F, std::move(rels));
}

// The ideal (t, w): two generators of degree 1 and the Koszul relation.
PresentedModule maximal_ideal(const RingPtr& r) {
  FreeModule F(r, {1, 1});
  return PresentedModule(F, {ModuleElement{{P(r, "w"), P(r, "t")}}});
}

template <typename F>
bool throws(F&& f) {
  try {
    f();
  } catch (const Error&) {
    return true;
  }
  return false;
}

std::vector<Check> corpus(const EngineOptions& o, int bound) {
  std::vector<Check> c;
  auto r = tw();
  auto series = [](const char* num, std::vector<int> den) {
    return RationalSeries(parse_int_polynomial(num), std::move(den));
  };

  c.push_back({"poly: sum in characteristic two",
               [=] { return P(r, "t^2+t*w") + P(r, "t*w+w^2") == P(r, "t^2+w^2"); }});
  c.push_back({"poly: f + f = 0", [=] { return (P(r, "t^3+w") + P(r, "t^3+w")).is_zero(); }});
  c.push_back({"poly: Frobenius", [=] { return P(r, "(t+w)^2") == P(r, "t^2+w^2"); }});
  c.push_back({"poly: degree of t^2+tw", [=] { return P(r, "t^2+t*w").homogeneous_degree() == 2; }});
  c.push_back({"poly: t+w^2 inhomogeneous", [=] { return !P(r, "t+w^2").is_homogeneous(); }});

  c.push_back({"gb: <t^2+tw, w> = {w, t^2}", [=] {
                 std::vector<Polynomial> g{P(r, "t^2+t*w"), P(r, "w")};
                 auto gb = ideal_groebner_basis(r, g, o);
                 return gb.serialize() == "w\nt^2\n" || gb.serialize() == "t^2\nw\n";
               }});
  c.push_back({"gb: zero ideal", [=] {
                 std::vector<Polynomial> g{Polynomial::zero(r)};
                 return ideal_groebner_basis(r, g, o).empty();
               }});
  c.push_back({"gb: normal forms", [=] {
                 std::vector<Polynomial> g{P(r, "w"), P(r, "t^2")};
                 auto gb = ideal_groebner_basis(r, g, o);
                 return normal_form(P(r, "t^3"), gb).is_zero() && normal_form(P(r, "t"), gb) == P(r, "t");
               }});
  c.push_back({"gb: y_j reduce to zero (n = 3)", [=] {
                 auto ring = polygon_ring(3);
                 auto ys = polygon_elements(ring, 3, 1);
                 auto gb = ideal_groebner_basis(ring, ys, o);
                 for (const auto& y : ys) {
                   if (!normal_form(y, gb).is_zero()) return false;
                 }
                 FreeModule F = FreeModule::of_rank(ring, 1);
                 std::vector<ModuleElement> a;
                 for (const auto& y : ys) a.push_back(ModuleElement{{y}});
                 auto b = gb.generators();
                 for (int d = 0; d <= bound; ++d) {
                   if (oracle::submodule_dimension(F, a, d) != oracle::submodule_dimension(F, b, d)) return false;
                 }
                 return true;
               }});

  c.push_back({"homalg: kernel of (t w) is the Koszul relation", [=] {
                 FreeModule src(r, {1, 1});
                 FreeModule tgt = FreeModule::of_rank(r, 1);
                 ModuleMap f(src, tgt, {ModuleElement{{P(r, "t")}}, ModuleElement{{P(r, "w")}}});
                 auto k = kernel(f, o);
                 return k.size() == 1 && k[0] == ModuleElement{{P(r, "w"), P(r, "t")}};
               }});
  c.push_back({"homalg: kernel of identity", [=] {
                 return kernel(ModuleMap::identity(FreeModule::of_rank(r, 2)), o).empty();
               }});
  c.push_back({"homalg: R/(y) series", [=] {
                 return hilbert_series(quotient(r, {"t^2+t*w"}), o) == series("1 + s", {1});
               }});
  c.push_back({"homalg: residue field Betti 1,2,1", [=] {
                 auto res = minimal_free_resolution(quotient(r, {"t", "w"}), o);
                 return res.betti.total(0) == 1 && res.betti.total(1) == 2 && res.betti.total(2) == 1;
               }});
  c.push_back({"homalg: free module resolves in length 0", [=] {
                 return minimal_free_resolution(PresentedModule::free(FreeModule::of_rank(r, 2)), o)
                            .projective_dimension() == 0;
               }});
  c.push_back({"homalg: R/(y_1..y_n) Betti = binomials", [=] {
                 for (int n : {2, 3}) {
                   auto ring = polygon_ring(n);
                   FreeModule F = FreeModule::of_rank(ring, 1);
                   std::vector<ModuleElement> rels;
                   for (const auto& y : polygon_elements(ring, n, 1)) rels.push_back(ModuleElement{{y}});
                   auto res = minimal_free_resolution(PresentedModule(F, rels), o);
                   long long binom = 1;
                   for (int i = 0; i <= n; ++i) {
                     if (res.betti.total(i) != static_cast<std::size_t>(binom)) return false;
                     binom = binom * (n - i) / (i + 1);
                   }
                 }
                 return true;
               }});
  c.push_back({"homalg: series of F2[t,w]", [=] {
                 return hilbert_series(PresentedModule::free(FreeModule::of_rank(r, 1)), o) == series("1", {1, 1});
               }});
  c.push_back({"homalg: dimensions 0, 1, 4", [=] {
                 auto big = make_standard_ring({"a", "b", "c", "d"});
                 return dimension(quotient(r, {"t", "w"}), o) == 0 &&
                        dimension(quotient(r, {"t^2+t*w"}), o) == 1 &&
                        dimension(PresentedModule::free(FreeModule::of_rank(big, 1)), o) == 4;
               }});
  c.push_back({"homalg: Ext of the residue field", [=] {
                 auto ext = ext_modules(quotient(r, {"t", "w"}), 2, o);
                 return is_zero_module(ext.modules[0], o) && dimension(ext.modules[1], o) == 0;
               }});
  c.push_back({"homalg: Ext^1 of the maximal ideal", [=] {
                 auto ext = ext_modules(maximal_ideal(r), 2, o);
                 return !is_zero_module(ext.modules[0], o) && dimension(ext.modules[0], o) == 0;
               }});
  c.push_back({"homalg: Ext of a free module vanishes", [=] {
                 auto ext = ext_modules(PresentedModule::free(FreeModule::of_rank(r, 2)), 2, o);
                 for (const auto& e : ext.modules) {
                   if (!is_zero_module(e, o)) return false;
                 }
                 return true;
               }});
  c.push_back({"homalg: base change of R_G/(c1)", [=] {
                 auto pair = build_borel_pair(1, 1);
                 FreeModule F = FreeModule::of_rank(pair.rg, 1);
                 PresentedModule M(F, {ModuleElement{{Polynomial::variable(pair.rg, "c1")}}});
                 auto N = base_change(M, pair.restriction);
                 return N.relations().column(0)[0] == parse_polynomial(pair.rh, "t1^2+t1*w1");
               }});
  c.push_back({"homalg: series additivity of R(-1) + R", [=] {
                 auto R = PresentedModule::free(FreeModule::of_rank(r, 1));
                 std::vector<std::pair<PresentedModule, int>> parts{{R, 1}, {R, 0}};
                 auto sum = module_assemble(parts);
                 return hilbert_series(sum, o) == series("s + 1", {1, 1});
               }});

  c.push_back({"syzygy: depth", [=] {
                 return depth(PresentedModule::free(FreeModule::of_rank(r, 1)), o) == 2 &&
                        depth(quotient(r, {"t", "w"}), o) == 0 && depth(quotient(r, {"t^2+t*w"}), o) == 1;
               }});
  c.push_back({"syzygy: maximal ideal is a first but not second syzygy", [=] {
                 auto report = syzygy_report(maximal_ideal(r), o);
                 return report.is_jth_syzygy(1) && !report.is_jth_syzygy(2) &&
                        report.order == SyzygyOrder::finite(1);
               }});
  c.push_back({"syzygy: residue field has order 0", [=] {
                 return !is_jth_syzygy(quotient(r, {"t", "w"}), 1, o) &&
                        syzygy_order(quotient(r, {"t", "w"}), o) == SyzygyOrder::finite(0);
               }});
  c.push_back({"syzygy: free module has infinite order", [=] {
                 return syzygy_order(PresentedModule::free(FreeModule::of_rank(r, 2)), o).is_infinite();
               }});
  c.push_back({"syzygy: transfer along i*", [=] {
                 auto pair = build_borel_pair(1, 1);
                 FreeModule F = FreeModule::of_rank(pair.rg, 1);
                 PresentedModule torsion(F, {ModuleElement{{Polynomial::variable(pair.rg, "c1")}}});
                 ModuleMap f(FreeModule(pair.rg, {2, 1}), F,
                             {ModuleElement{{Polynomial::variable(pair.rg, "c1")}},
                              ModuleElement{{Polynomial::variable(pair.rg, "w1")}}});
                 auto k = kernel_module(f, o);
                 return syzygy_transfer_check(torsion, pair.restriction, bound, o).agree &&
                        syzygy_transfer_check(k, pair.restriction, bound, o).agree;
               }});

  c.push_back({"borel: i*(c1) = t1^2+t1*w1", [=] {
                 auto pair = build_borel_pair(1, 2);
                 return pair.restriction.image(0) == parse_polynomial(pair.rh, "t1^2+t1*w1+t1*w2") &&
                        pair.restriction.image(1) == parse_polynomial(pair.rh, "w1");
               }});
  c.push_back({"borel: phi_1 fixes t1^2+t1*w", [=] {
                 auto pair = build_borel_pair(1, 1);
                 auto action = weyl_action(pair);
                 auto y = parse_polynomial(pair.rh, "t1^2+t1*w1");
                 return action.generators[0].apply(y) == y;
               }});
  c.push_back({"borel: bases for n <= 2", [=] {
                 for (int n = 1; n <= 2; ++n) {
                   if (!verify_basis_freeness(build_borel_pair(n, 1), bound, o).passed) return false;
                 }
                 return true;
               }});
  c.push_back({"borel: invariants in degrees 1 and 2 (n = 1)", [=] {
                 auto cert = weyl_invariants_check(build_borel_pair(1, 1), 2);
                 return cert.passed && cert.dimensions.at(1).first == 1 && cert.dimensions.at(2).first == 2;
               }});
  c.push_back({"borel: series catalog", [=] {
                 for (const auto& e : parse_series_catalog(nlohmann::json::parse(default_series_catalog()))) {
                   if (free_extension_series_check(e.chain) != e.expected) return false;
                 }
                 return true;
               }});
  c.push_back({"borel: Euler table", [] { return euler_class_restriction_table().passed; }});

  c.push_back({"bigpolygon: Koszul complex of (t, w)", [=] {
                 std::vector<Polynomial> e{P(r, "t"), P(r, "w")};
                 auto k = koszul_complex(r, e, o);
                 return k.regular && k.complex.is_complex() && k.complex.modules[1].rank() == 2;
               }});
  c.push_back({"bigpolygon: iota images (n = 3)", [=] {
                 auto iota = build_iota(PolygonConfig::equilateral(3, 1, 1));
                 auto ys = polygon_elements(iota.map.ring(), 3, 1);
                 const auto& w_empty = iota.map.column(iota.short_subsets.size());
                 return w_empty[1] == ys[0] && w_empty[2] == ys[1] && w_empty[3] == ys[2];
               }});
  c.push_back({"bigpolygon: n = 1 gives infinite order", [=] {
                 return syzygy_order(bigpolygon_module(PolygonConfig::equilateral(1, 1, 1), o).module, o)
                     .is_infinite();
               }});
  c.push_back({"bigpolygon: decomposition (n = 3)", [=] {
                 return structural_decomposition_check(PolygonConfig::equilateral(3, 1, 1), o).passed;
               }});
  c.push_back({"bigpolygon: order 1 for n = 3", [=] { return verify_syzygy_theorem(1, 1, 1, o).passed; }});

  c.push_back({"io: residue field file", [=] {
                 auto M = parse_module_text("ring: t w deg 1 1\nambient: rank 1 twists 0\nrelations:\nt\nw\n");
                 return M.num_relations() == 2 && dimension(M, o) == 0;
               }});
  c.push_back({"io: empty relations give a free module", [=] {
                 auto M = parse_module_text("ring: t w deg 1 1\nambient: rank 2 twists 0,0\n");
                 return M.num_relations() == 0 && M.num_generators() == 2;
               }});
  c.push_back({"io: inhomogeneous relation rejected", [=] {
                 return throws([] { parse_module_text("ring: t w\nambient: rank 1\nt+w^2\n"); });
               }});
  return c;
}

}  // namespace

Outcome selftest(const RunConfig& config, const EngineOptions& options) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    nlohmann::json row{{"name", name}, {"ok", ok}};
    if (!detail.empty()) row["detail"] = detail;
    checks.push_back(std::move(row));
    all = all && ok;
  };
  for (auto& check : corpus(options, config.degree_bound)) {
    try {
      record(check.name, check.body());
    } catch (const std::exception& e) {
      record(check.name, false, e.what());
    }
  }

  std::mt19937_64 rng(config.seed);
  int failures = 0;
  std::string first_failure;
  for (int k = 0; k < config.samples; ++k) {
    PresentedModule M = random_module(rng);
    std::string what;
    try {
      Resolution res = minimal_free_resolution(M, options);
      if (!res.complex.is_complex()) what = "d o d != 0";
      if (what.empty() && !check_resolution_exactness(res, M, config.degree_bound).passed) what = "not exact";
      if (what.empty() && !is_zero_module(M, options)) {
        const int n = static_cast<int>(M.ring()->num_variables());
        if (depth(M, options) + res.projective_dimension() != n) what = "Auslander-Buchsbaum";
      }
      if (what.empty()) {
        auto rels = M.relations().columns();
        std::vector<ModuleElement> reversed(rels.rbegin(), rels.rend());
        EngineOptions many = options;
        many.threads = 4;
        many.cache = nullptr;
        if (relation_basis(M, options).serialize() !=
            reduced_groebner_basis(M.ambient(), reversed, many).serialize()) {
          what = "basis depends on generator order or threads";
        }
      }
    } catch (const std::exception& e) {
      what = e.what();
    }
    if (!what.empty()) {
      ++failures;
      if (first_failure.empty()) first_failure = "sample " + std::to_string(k) + ": " + what;
    }
  }
  record("properties on random modules", failures == 0, first_failure);

  nlohmann::json cert{{"checks", checks},
                      {"samples", config.samples},
                      {"seed", config.seed},
                      {"failures", failures}};
  return {cert, all};
}

}  // namespace syzlab::cli

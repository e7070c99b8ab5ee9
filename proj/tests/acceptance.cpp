// One line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "syzlab/bigpolygon.hpp"
#include "syzlab/borel.hpp"
#include "syzlab/syzygy.hpp"

using namespace syzlab;
using namespace syzlab::test;

namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

nlohmann::json certify(std::vector<std::string> args) {
  std::vector<std::string> full{"--no-cache"};
  full.insert(full.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = cli::run(full, out, err);
  if (code == 2) throw std::runtime_error(err.str());
  auto cert = nlohmann::json::parse(out.str());
  cert["exit_code"] = code;
  return cert;
}

bool pass(const nlohmann::json& cert) { return cert.value("status", "") == "PASS" && cert["exit_code"] == 0; }

Verdict basis_grid() {
  std::ostringstream detail;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      auto cert = certify({"borel", "basis", "--n", std::to_string(n), "--m", std::to_string(m)});
      ok = ok && pass(cert);
      detail << "(" << n << "," << m << "):" << cert.value("status", "?") << ' ';
    }
  }
  return {ok, detail.str()};
}

Verdict invariants() {
  bool ok = true;
  std::ostringstream detail;
  for (int n : {1, 2}) {
    auto cert = certify({"--degree-bound", "8", "borel", "invariants", "--n", std::to_string(n), "--m", "1"});
    ok = ok && pass(cert) && cert["degree_bound"] == 8;
    detail << "n=" << n << ":" << cert.value("status", "?") << ' ';
  }
  return {ok, detail.str()};
}

Verdict euler() {
  auto cert = certify({"borel", "euler"});
  return {pass(cert), "restrictions " + cert["restrictions"].dump()};
}

Verdict triangle() {
  bool ok = true;
  std::ostringstream detail;
  for (int b : {1, 2}) {
    auto cert = certify({"bigpolygon", "verify", "--n", "3", "--b", std::to_string(b), "--a", "1"});
    ok = ok && pass(cert) && cert["syzygy_order"] == 1 && cert["is_mth_syzygy"] == true &&
         cert["is_next_syzygy"] == false;
    detail << "b=" << b << ": order " << cert["syzygy_order"].dump() << ' ';
  }
  return {ok, detail.str()};
}

Verdict pentagon() {
  auto cert = certify({"bigpolygon", "verify", "--n", "5", "--b", "1", "--a", "1"});
  // Cross-check the module the order was computed from.
  auto pm = bigpolygon_module(PolygonConfig::equilateral(5, 1, 1));
  auto res = minimal_free_resolution(pm.module);
  auto exact = check_resolution_exactness(res, pm.module, 8);
  const int lo = lowest_twist(pm.module.ambient());
  bool series_ok = hilbert_series(pm.module).expand(lo, lo + 8) == oracle_dimensions(pm.module, lo, 8);
  return {pass(cert) && cert["syzygy_order"] == 2 && exact.passed && series_ok,
          "order " + cert["syzygy_order"].dump() + ", resolution exact to D=8: " + (exact.passed ? "yes" : "no") +
              ", series vs oracle: " + (series_ok ? "equal" : "differ")};
}

Verdict decomposition() {
  auto cert = certify({"bigpolygon", "decompose", "--n", "3"});
  bool ok = pass(cert) && cert["kernel"]["matches"] == true && cert["cokernel"]["matches"] == true;
  return {ok, "fitted shifts kernel " + cert["kernel"]["fitted_offset"].dump() + ", cokernel " +
                  cert["cokernel"]["fitted_offset"].dump()};
}

Verdict transfer() {
  auto pair = build_borel_pair(1, 1);
  const auto& rg = pair.rg;
  FreeModule F = FreeModule::of_rank(rg, 1);
  auto c1 = Polynomial::variable(rg, "c1");
  auto w1 = Polynomial::variable(rg, "w1");
  ModuleMap f(FreeModule(rg, {2, 1}), F, {ModuleElement{{c1}}, ModuleElement{{w1}}});
  std::vector<std::pair<std::string, PresentedModule>> suite{
      {"free", PresentedModule::free(FreeModule(rg, {0, -2}))},
      {"torsion", PresentedModule(F, {ModuleElement{{c1}}})},
      {"residue", PresentedModule(F, {ModuleElement{{c1}}, ModuleElement{{w1}}})},
      {"kernel", kernel_module(f)},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [name, M] : suite) {
    auto report = syzygy_transfer_check(M, pair.restriction, 8);
    ok = ok && report.agree;
    detail << name << ":" << report.source.order.to_string() << "->" << report.target.order.to_string() << ' ';
  }
  return {ok, detail.str()};
}

Verdict properties() {
  int failures = 0;
  std::ostringstream witness;
  auto fail = [&](int seed, const std::string& what) {
    if (failures++ < 3) witness << "seed " << seed << ": " << what << "; ";
  };
  const int bound = 8;
  for (int seed = 1; seed <= 20; ++seed) {
    for (const auto& M : random_modules(static_cast<std::uint64_t>(seed), 2)) {
      auto res = minimal_free_resolution(M);
      if (!res.complex.is_complex()) fail(seed, "d o d != 0");
      auto exact = check_resolution_exactness(res, M, bound);
      if (!exact.passed) fail(seed, "exactness: " + exact.witness);

      // Projective dimension from the oracle's Koszul Tor, depth from Ext.
      if (!is_zero_module(M)) {
        const int n = static_cast<int>(M.ring()->num_variables());
        const int lo = lowest_twist(M.ambient());
        int pd = 0;
        int top = lo + bound;
        for (const auto& [key, rank] : res.betti.entries()) top = std::max(top, key.second + 2);
        for (int d = lo; d <= top; ++d) {
          auto tor = oracle::koszul_betti(M.ambient(), M.relations().columns(), d);
          for (int i = 0; i <= n; ++i) {
            if (tor[static_cast<std::size_t>(i)] != 0) pd = std::max(pd, i);
          }
        }
        auto report = syzygy_report(M);
        int top_ext = 0;
        for (const auto& [i, codim] : report.ext_codims) {
          if (codim) top_ext = std::max(top_ext, i);
        }
        if (pd != res.projective_dimension() || n - top_ext + pd != n || report.depth != n - pd) {
          fail(seed, "Auslander-Buchsbaum: Tor pd " + std::to_string(pd) + ", resolution pd " +
                         std::to_string(res.projective_dimension()) + ", top Ext " + std::to_string(top_ext) +
                         ", depth " + (report.depth ? std::to_string(*report.depth) : "none") + "\n" + M.serialize());
        }
      }

      std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
      auto gens = M.relations().columns();
      const auto reference = reduced_groebner_basis(M.ambient(), gens).serialize();
      std::shuffle(gens.begin(), gens.end(), rng);
      EngineOptions options;
      options.threads = 4;
      if (reduced_groebner_basis(M.ambient(), gens, options).serialize() != reference) fail(seed, "GB invariance");

      // 0 -> ker f -> F1 -> F0 -> coker f -> 0
      const ModuleMap& rel = M.relations();
      auto alternating = hilbert_series(kernel_module(rel)) - free_series(rel.source()) +
                         free_series(rel.target()) - hilbert_series(M);
      if (!(alternating == RationalSeries())) fail(seed, "additivity");
    }
  }
  return {failures == 0, std::to_string(failures) + " failures over 20 seeds x 2 modules, D=8 " + witness.str()};
}

Verdict catalog() {
  auto cert = certify({"borel", "series"});
  bool ok = pass(cert);
  bool corrupted_rejected = false;
  std::size_t genuine = 0;
  for (const auto& e : cert["entries"]) {
    if (e["expected"] == false) corrupted_rejected = e["identity_holds"] == false;
    if (e["expected"] == true && e["identity_holds"] == true) ++genuine;
  }
  return {ok && corrupted_rejected && genuine >= 2,
          std::to_string(genuine) + " identities hold, corrupted entry " + (corrupted_rejected ? "rejected" : "accepted")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> check;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "free basis of H*(BH) over H*(BG), (n,m) in {1,2,3}x{1,2}", basis_grid, 10},
      {2, "Weyl invariants equal the image, n in {1,2}, degrees <= 8", invariants, 10},
      {3, "Euler class restriction table", euler, 1},
      {4, "big polygon n=3 has syzygy order 1 (b=1,2)", triangle, 60},
      {5, "big polygon n=5 has syzygy order 2", pentagon, 900},
      {6, "kernel/cokernel series decomposition, n=3", decomposition, 60},
      {7, "syzygy order transfers along restriction", transfer, 60},
      {8, "homological property suite", properties, 600},
      {9, "free extension series catalog", catalog, 10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = Clock::now();
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool within = seconds <= c.budget_seconds;
    const bool ok = v.passed && within;
    if (!ok) ++failed;
    std::printf("[%s] C%d %s (%.2fs of %.0fs) %s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds, c.budget_seconds,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "syzlab/syzygy.hpp"

#include <algorithm>

#include "syzlab/error.hpp"
#include "syzlab/oracle.hpp"

namespace syzlab {

int SyzygyOrder::value() const {
  if (!value_) throw InvalidArgument("syzygy order is infinite");
  return *value_;
}

std::string SyzygyOrder::to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

nlohmann::json SyzygyOrder::to_json() const {
  return value_ ? nlohmann::json(*value_) : nlohmann::json("infinite");
}

bool SyzygyReport::is_jth_syzygy(int j) const {
  for (const auto& [i, codim] : ext_codims) {
    if (codim && *codim < i + j) return false;
  }
  return true;
}

nlohmann::json SyzygyReport::to_json() const {
  nlohmann::json codims = nlohmann::json::array();
  for (const auto& [i, c] : ext_codims) {
    codims.push_back({i, c ? nlohmann::json(*c) : nlohmann::json("infinite")});
  }
  return nlohmann::json{{"syzygy_order", order.to_json()},
                        {"ext_codims", codims},
                        {"depth", depth ? nlohmann::json(*depth) : nlohmann::json(nullptr)},
                        {"pd", projective_dimension}};
}

SyzygyReport syzygy_report(const PresentedModule& M, const EngineOptions& options) {
  SyzygyReport report;
  const int n = static_cast<int>(M.ring()->num_variables());
  report.num_variables = n;
  Resolution res = minimal_free_resolution(M, options);
  report.projective_dimension = res.projective_dimension();
  const bool zero = res.complex.modules.front().rank() == 0;
  if (!zero) report.depth = n - report.projective_dimension;

  auto ext = ext_modules(res, n, options);
  std::optional<int> order;
  for (int i = 1; i <= n; ++i) {
    int dim = dimension(ext.modules[static_cast<std::size_t>(i - 1)], options);
    if (dim < 0) {
      report.ext_codims[i] = std::nullopt;
      continue;
    }
    int codim = n - dim;
    report.ext_codims[i] = codim;
    int bound = std::max(0, codim - i);
    order = order ? std::min(*order, bound) : bound;
  }
  if (order) {
    report.order = SyzygyOrder::finite(*order);
    return report;
  }
  PresentedModule minimal = minimal_presentation(M, options);
  if (minimal.num_relations() != 0) {
    throw InternalError("syzygy: all Ext modules vanish but the module is not free");
  }
  report.free_verified = true;
  report.order = SyzygyOrder::infinite();
  return report;
}

SyzygyOrder syzygy_order(const PresentedModule& M, const EngineOptions& options) {
  return syzygy_report(M, options).order;
}

bool is_jth_syzygy(const PresentedModule& M, int j, const EngineOptions& options) {
  if (j < 1) throw InvalidArgument("is_jth_syzygy: j must be at least 1");
  return syzygy_report(M, options).is_jth_syzygy(j);
}

int depth(const PresentedModule& M, const EngineOptions& options) {
  Resolution res = minimal_free_resolution(M, options);
  if (res.complex.modules.front().rank() == 0) {
    throw InvalidArgument("depth: undefined for the zero module");
  }
  return static_cast<int>(M.ring()->num_variables()) - res.projective_dimension();
}

nlohmann::json FreenessCertificate::to_json() const {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& [d, k] : basis_degrees) degrees.push_back({d, k});
  nlohmann::json names = nlohmann::json::array();
  for (const auto& b : basis) names.push_back(b.to_string());
  nlohmann::json out{{"status", passed ? "PASS" : "FAILED"},
                     {"degree_bound", degree_bound},
                     {"rank", basis.size()},
                     {"basis", names},
                     {"basis_degrees", degrees},
                     {"generates", generates},
                     {"independent_to_bound", independent_to_bound},
                     {"series_identity", series_identity}};
  if (!witness.empty()) out["witness"] = witness;
  return out;
}

FreenessCertificate verify_free_extension(const RingMap& phi, int degree_bound,
                                          const EngineOptions& options) {
  FreenessCertificate cert;
  cert.degree_bound = degree_bound;
  const RingPtr& S = phi.source();
  const RingPtr& T = phi.target();
  const std::size_t nt = T->num_variables();

  auto J = ideal_groebner_basis(T, phi.images(), options);
  std::vector<Monomial> leads;
  for (const auto& t : initial_module(J)) leads.push_back(t.mono);

  // Zero-dimensional initial ideal: a pure power of every target variable.
  std::vector<int> cap(nt, 0);
  for (const auto& m : leads) {
    std::size_t var = nt;
    int nonzero = 0;
    for (std::size_t v = 0; v < nt; ++v) {
      if (m.exponent(v) > 0) {
        ++nonzero;
        var = v;
      }
    }
    if (nonzero == 1) cap[var] = cap[var] == 0 ? m.exponent(var) : std::min(cap[var], m.exponent(var));
  }
  for (std::size_t v = 0; v < nt; ++v) {
    if (cap[v] == 0) {
      cert.witness = "no power of " + T->name(v) + " lies in the initial ideal; quotient is infinite";
      return cert;
    }
  }
  cert.generates = true;

  // Standard monomials, enumerated inside the box given by the pure powers.
  std::vector<int> e(nt, 0);
  std::vector<Monomial> basis;
  while (true) {
    Monomial m = Monomial::from_exponents(*T, e);
    bool standard = std::none_of(leads.begin(), leads.end(),
                                 [&](const Monomial& l) { return l.divides(m); });
    if (standard) basis.push_back(m);
    std::size_t v = 0;
    while (v < nt && ++e[v] == cap[v]) e[v++] = 0;
    if (v == nt) break;
  }
  std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
    return degrevlex(a, b) < 0;
  });
  IntPolynomial basis_series;
  for (const auto& b : basis) {
    cert.basis.push_back(Polynomial::monomial(T, b));
    ++cert.basis_degrees[b.degree()];
    basis_series += IntPolynomial::monomial(b.degree());
  }

  // Degreewise independence of {φ(u)·b}.
  FreeModule line = FreeModule::of_rank(T, 1);
  cert.independent_to_bound = true;
  for (int d = 0; d <= degree_bound && cert.independent_to_bound; ++d) {
    DegreePiece piece(line, d);
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& b : basis) {
      if (b.degree() > d) continue;
      for (const auto& u : monomials_of_degree(*S, d - b.degree())) {
        rows.push_back(piece.bits(ModuleElement{{phi.apply(u).times(b)}}));
      }
    }
    const std::size_t expected = rows.size();
    if (gf2_rank(std::move(rows), piece.size()) != expected) {
      cert.independent_to_bound = false;
      cert.witness = "relation among basis elements in degree " + std::to_string(d);
    }
  }

  RationalSeries lhs = RationalSeries::of_ring(*T);
  RationalSeries rhs = RationalSeries::of_ring(*S) * RationalSeries(basis_series, {});
  cert.series_identity = lhs == rhs;
  if (!cert.series_identity && cert.witness.empty()) {
    cert.witness = "series mismatch: " + lhs.to_string() + " vs " + rhs.to_string();
  }
  cert.passed = cert.generates && cert.independent_to_bound && cert.series_identity;
  return cert;
}

nlohmann::json TransferReport::to_json() const {
  return nlohmann::json{{"status", agree ? "PASS" : "FAILED"},
                        {"source", source.to_json()},
                        {"target", target.to_json()}};
}

TransferReport syzygy_transfer_check(const PresentedModule& M, const RingMap& phi,
                                     int degree_bound, const EngineOptions& options) {
  require_same_ring(M.ring(), phi.source(), "syzygy transfer");
  auto cert = verify_free_extension(phi, degree_bound, options);
  if (!cert.passed) {
    throw InvalidArgument("syzygy transfer: target is not free over the source (" + cert.witness +
                          ")");
  }
  TransferReport report;
  report.source = syzygy_report(M, options);
  report.target = syzygy_report(base_change(M, phi), options);
  report.agree = report.source.order == report.target.order;
  return report;
}

}  // namespace syzlab

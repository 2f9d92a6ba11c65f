// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. argv: 1 = polydyn binary, 2 = gamma3.map path.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polydyn/contraction.hpp"
#include "polydyn/families.hpp"
#include "polydyn/growth.hpp"
#include "polydyn/jacobian.hpp"
#include "polydyn/orbit.hpp"
#include "polydyn/poincare_dulac.hpp"
#include "polydyn/resonance.hpp"
#include "polydyn/spectrum.hpp"
#include "test_util.hpp"

using namespace polydyn;

namespace {

const Rational kL1(1, 3), kL2(1, 4), kL3(1, 5);

RationalMap gamma_default() { return make_gamma3(kL1, kL2, kL3); }

RationalPoly univariate(std::initializer_list<std::pair<int, Rational>> terms) {
    RationalPoly p(1);
    for (const auto& [e, c] : terms) p.add_term(Monomial(std::vector<int>{e}), c);
    return p;
}

int g_failed = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++g_failed;
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    std::string bin = argc > 1 ? argv[1] : "";

    criterion(1, "linear degree growth: deg gamma^n = n+1 for 1 <= n <= 25, under 60 s",
              [&](std::string& detail) {
                  auto t0 = std::chrono::steady_clock::now();
                  auto g = gamma_default();
                  auto seq = degree_sequence(g, 25);
                  if (seq.partial || seq.entries.size() != 25) return false;
                  for (const auto& [n, d] : seq.entries)
                      if (d != n + 1) return false;
                  double secs = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                  std::ostringstream os;
                  os << "runtime " << secs << " s";
                  detail = os.str();
                  return secs < 60.0;
              });

    criterion(2, "component degree recurrence for 1 <= n <= 24",
              [&](std::string&) {
                  auto g = gamma_default();
                  std::vector<int> F{1};  // deg F_0 (identity x-component)
                  for (int n = 1; n <= 25; ++n)
                      F.push_back(g.iterate(n).component(0).degree());
                  for (int n = 1; n <= 24; ++n) {
                      auto gn = g.iterate(n);
                      auto gn1 = g.iterate(n + 1);
                      if (gn.component(2).degree() != 1) return false;      // deg H_n = 1
                      if (gn1.component(1).degree() != F[static_cast<size_t>(n)])
                          return false;                                     // deg G_{n+1} = deg F_n
                      int expect = std::max(F[static_cast<size_t>(n)] + 1,
                                            F[static_cast<size_t>(n - 1)]);
                      if (F[static_cast<size_t>(n + 1)] != expect) return false;
                  }
                  return true;
              });

    criterion(3, "contraction evidence: 100 orbits below 1e-9 within 200 steps; "
                 "proof inequalities exact past n*",
              [&](std::string& detail) {
                  auto v = contraction_evidence(gamma_default(), 100, 10.0, 200, 1e-9,
                                                Norm::sup(), 1);
                  if (!v.evidence_for_contraction()) return false;
                  if (v.max_iterations_used > 200) return false;
                  auto rc = contraction_recurrence_check(
                      {kL1, kL2, kL3}, {Rational(1), Rational(1), Rational(1)}, 60);
                  std::ostringstream os;
                  os << "max iterations " << v.max_iterations_used << ", n* = "
                     << rc.threshold_n_star;
                  detail = os.str();
                  return rc.sum_inequality_holds && rc.max_inequality_holds &&
                         rc.threshold_n_star == 2;
              });

    criterion(4, "exact coordinate laws z_n = l3^n z0 and y_n = l2 x_{n-1} over 50 steps",
              [&](std::string&) {
                  auto orb = orbit_exact(gamma_default(),
                                         {Rational(1), Rational(1), Rational(1)}, 50);
                  for (int n = 1; n <= 50; ++n) {
                      const auto& pt = orb.points[static_cast<size_t>(n)];
                      if (pt[2] != kL3.pow(static_cast<unsigned>(n))) return false;
                      if (pt[1] != kL2 * orb.points[static_cast<size_t>(n - 1)][0])
                          return false;
                  }
                  return true;
              });

    criterion(5, "Jacobian determinant is the constant -1/60; eigenvalues match closed form",
              [&](std::string&) {
                  auto g = gamma_default();
                  auto det = jacobian_determinant(jacobian(g));
                  if (det != RationalPoly::constant(3, Rational(-1, 60))) return false;
                  if (det.degree() != 0) return false;
                  auto ed = eigen_decompose(to_complex(linear_part(g)));
                  double s = std::sqrt((kL1 * kL2).to_double());
                  return std::abs(ed.values[0] - Complex(s, 0)) < 1e-12 &&
                         std::abs(ed.values[1] - Complex(-s, 0)) < 1e-12 &&
                         std::abs(ed.values[2] - Complex(kL3.to_double(), 0)) < 1e-12;
              });

    criterion(6, "plane trichotomy signatures through n = 6",
              [&](std::string&) {
                  auto affine = make_elementary(Rational(2), Rational(3), Rational(1),
                                                RationalPoly::zero(1));
                  auto elem = make_elementary(Rational(1, 2), Rational(1, 3), Rational(1),
                                              univariate({{3, Rational(1)}}));
                  auto henon = make_henon(Rational(1), univariate({{2, Rational(1)}}));

                  auto pa = classify_plane(affine, 6);
                  auto pe = classify_plane(elem, 6);
                  auto ph = classify_plane(henon, 6);
                  if (pa.verdict != PlaneClass::AffineLike) return false;
                  if (pa.growth.kind != GrowthClass::Kind::Bounded) return false;
                  if (pe.verdict != PlaneClass::ElementaryLike) return false;
                  if (pe.growth.kind != GrowthClass::Kind::Bounded) return false;
                  if (ph.verdict != PlaneClass::Loxodromic) return false;
                  if (ph.growth.kind != GrowthClass::Kind::Exponential) return false;
                  return std::abs(ph.growth.rate - 2.0) < 1e-6;
              });

    criterion(7, "non-resonance: symbolic d in {3,4,5} at M=12; numeric agrees at default lambda",
              [&](std::string& detail) {
                  for (int d : {3, 4, 5}) {
                      auto rep = check_resonance_symbolic(eigen_symbols_gamma_d(d), 12);
                      if (rep.resonant || !rep.witnesses.empty()) return false;
                  }
                  auto ed = eigen_decompose(to_complex(linear_part(gamma_default())));
                  auto num = check_resonance_numeric(ed.values, 12, 1e-10);
                  std::ostringstream os;
                  os << "numeric min gap " << num.min_gap;
                  detail = os.str();
                  return !num.resonant;
              });

    criterion(8, "Poincare-Dulac: residual < 1e-9 at N=8; orbit check < 1e-6; 1-d u2 = 4",
              [&](std::string& detail) {
                  auto g = gamma_default();
                  auto res = poincare_dulac(g, 8, 1e-9);
                  if (!(res.residual < 1e-9)) return false;
                  auto ver = verify_linearization(g, res, 20, 0.1, 20);
                  if (!(ver.max_deviation < 1e-6)) return false;
                  auto onedim = RationalMap(
                      {univariate({{1, Rational(1, 2)}, {2, Rational(1)}})}, "onedim");
                  auto r1 = poincare_dulac(onedim, 6, 1e-9);
                  Complex u2 =
                      r1.U.component(0).coefficient(Monomial(std::vector<int>{2}));
                  std::ostringstream os;
                  os << "residual " << res.residual << ", max deviation "
                     << ver.max_deviation << ", u2 = " << u2.real();
                  detail = os.str();
                  return std::abs(u2 - Complex(4, 0)) < 1e-12;
              });

    criterion(9, "demo-theorem-4-3 exits 0 with growth table, linearization, and "
                 "extrapolation label",
              [&](std::string& detail) {
                  if (bin.empty()) {
                      detail = "no CLI binary path passed";
                      return false;
                  }
                  auto r = run(bin + " demo-theorem-4-3 --d 3");
                  if (r.exit_code != 0) {
                      detail = "exit code " + std::to_string(r.exit_code);
                      return false;
                  }
                  auto j = nlohmann::json::parse(r.out, nullptr, false);
                  if (j.is_discarded()) {
                      detail = "report is not valid JSON";
                      return false;
                  }
                  if (j["verdict"] != "demo-passed") return false;
                  auto degrees = j["tables"]["degrees"];
                  if (degrees.size() != 25) return false;
                  for (size_t i = 0; i < degrees.size(); ++i)
                      if (degrees[i][1] != static_cast<int>(i) + 2) return false;
                  if (!(double(j["floats"]["linearization_residual"]) < 1e-9)) return false;
                  if (!(double(j["floats"]["orbit_check_max_deviation"]) < 1e-6))
                      return false;
                  std::string narrative = j["tables"]["narrative"];
                  return narrative.find("extrapolated, not proved") != std::string::npos;
              });

    criterion(10, "algebra property suite: 10^4 randomized exact checks",
              [&](std::string& detail) {
                  testutil::Rng rng(0x5eed'2026'0810ULL);
                  int checks = 0;
                  for (int i = 0; i < 2500; ++i) {
                      if (!testutil::check_ring_axioms(rng)) return false;
                      if (!testutil::check_compose_associativity(rng)) return false;
                      if (!testutil::check_differentiation_linearity(rng)) return false;
                      if (!testutil::check_eval_compose_compat(rng)) return false;
                      checks += 4;
                  }
                  detail = std::to_string(checks) + " checks";
                  return checks == 10000;
              });

    if (g_failed == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failed);
    return g_failed;
}

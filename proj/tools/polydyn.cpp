// polydyn: polynomial automorphisms of affine space at desk scale.
// Subcommands expose the analyses (degree sequences, growth classification,
// orbits, contraction evidence, Jacobians, spectra, resonance, truncated
// linearization) over maps defined in .map files or built-in families.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polydyn/contraction.hpp"
#include "polydyn/families.hpp"
#include "polydyn/growth.hpp"
#include "polydyn/jacobian.hpp"
#include "polydyn/map_file.hpp"
#include "polydyn/orbit.hpp"
#include "polydyn/poincare_dulac.hpp"
#include "polydyn/report.hpp"
#include "polydyn/resonance.hpp"
#include "polydyn/spectrum.hpp"

namespace {

using namespace polydyn;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // analysis-negative verdict
constexpr int kExitError = 2;

struct CommonOpts {
    std::string map_file;
    std::string lambda_csv;
    int gamma_d = 0;
    std::string out;
    std::string format;  // "", "csv", "report"
};

void add_map_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--map", o.map_file, "map-definition file");
    cmd->add_option("--lambda", o.lambda_csv,
                    "comma-separated exact rationals for the gamma family, e.g. 1/3,1/4,1/5");
    cmd->add_option("--gamma-d", o.gamma_d,
                    "gamma family in dimension D with default lambda_i = 1/(i+2)");
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
    cmd->add_option("--format", o.format, "output format: csv or report")
        ->check(CLI::IsMember({"csv", "report"}));
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
    if (out.empty()) throw ParameterError("empty rational list");
    return out;
}

std::vector<Rational> default_lambdas(int d) {
    std::vector<Rational> l;
    for (int i = 1; i <= d; ++i) l.emplace_back(1, i + 2);
    return l;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << content;
}

struct MapInput {
    MapSpec spec;
    std::string canonical;  // digest input
    std::vector<Rational> gamma_lambdas;  // nonempty iff gamma-family input
};

MapSpec spec_for_gamma(const std::vector<Rational>& lambdas) {
    RationalMap m = make_gamma_d(lambdas);
    std::vector<std::pair<std::string, Rational>> params;
    for (size_t i = 0; i < lambdas.size(); ++i)
        params.emplace_back("l" + std::to_string(i + 1), lambdas[i]);
    return MapSpec{m.name(), m.var_names(), std::move(params), m};
}

/// Extracts (l1, l2, l3) when the map is structurally gamma3.
std::optional<std::vector<Rational>> gamma3_lambdas_of(const RationalMap& f) {
    if (f.dim() != 3) return std::nullopt;
    const auto& p1 = f.component(0);
    const auto& p2 = f.component(1);
    const auto& p3 = f.component(2);
    Rational l1 = p1.coefficient(Monomial::axis(3, 1));
    Rational l2 = p2.coefficient(Monomial::axis(3, 0));
    Rational l3 = p3.coefficient(Monomial::axis(3, 2));
    if (l1.is_zero() || l2.is_zero() || l3.is_zero()) return std::nullopt;
    RationalMap expect = make_gamma_d({l1, l2, l3}, /*allow_out_of_range=*/true);
    if (f != expect) return std::nullopt;
    return std::vector<Rational>{l1, l2, l3};
}

MapInput resolve_map(const CommonOpts& o) {
    if (!o.map_file.empty()) {
        MapSpec spec = parse_single_map(read_file(o.map_file));
        std::vector<Rational> lambdas;
        if (auto l = gamma3_lambdas_of(spec.map)) lambdas = *l;
        std::string canonical = render_map(spec);
        return MapInput{std::move(spec), std::move(canonical), std::move(lambdas)};
    }
    if (!o.lambda_csv.empty() || o.gamma_d != 0) {
        std::vector<Rational> lambdas = !o.lambda_csv.empty()
                                            ? parse_rational_list(o.lambda_csv)
                                            : default_lambdas(o.gamma_d);
        MapSpec spec = spec_for_gamma(lambdas);
        std::string canonical = render_map(spec);
        return MapInput{std::move(spec), std::move(canonical), std::move(lambdas)};
    }
    throw ParameterError("no input map: pass --map FILE, --lambda LIST, or --gamma-d D");
}

std::string digest_of(const MapInput& in, const std::string& flags) {
    return digest_hex(in.canonical + "|" + flags);
}

void require_report_format(const CommonOpts& o, const char* cmd) {
    if (!o.format.empty() && o.format != "report")
        throw ParameterError(std::string(cmd) + " supports only --format report");
}

nlohmann::ordered_json degrees_table(const DegreeSequence& seq) {
    auto t = nlohmann::ordered_json::array();
    for (const auto& [n, d] : seq.entries) t.push_back({n, d});
    return t;
}

nlohmann::ordered_json growth_json(const GrowthClass& g) {
    nlohmann::ordered_json j;
    j["kind"] = g.kind_str();
    if (g.kind == GrowthClass::Kind::Linear) j["slope"] = g.slope;
    if (g.kind == GrowthClass::Kind::Polynomial) j["degree"] = g.poly_degree;
    if (g.kind == GrowthClass::Kind::Exponential) j["rate"] = g.rate;
    j["evidence"] = g.evidence;
    return j;
}

nlohmann::ordered_json witnesses_json(const ResonanceReport& rep) {
    auto w = nlohmann::ordered_json::array();
    for (const auto& wit : rep.witnesses) w.push_back({{"i", wit.target_index},
                                                       {"m", wit.multi_index}});
    return w;
}

// ---------------------------------------------------------------- degseq

int run_degseq(const CommonOpts& o, int n) {
    MapInput in = resolve_map(o);
    DegreeSequence seq = degree_sequence(in.spec.map, n);
    std::string fmt = o.format.empty() ? "csv" : o.format;
    if (fmt == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, d] : seq.entries)
            rows.push_back({std::to_string(k), std::to_string(d)});
        write_output(o.out, to_csv({"n", "deg"}, rows));
    } else {
        Report rep;
        rep.command = "degseq";
        rep.input_digest = digest_of(in, "n=" + std::to_string(n));
        rep.verdict = seq.partial ? "partial" : "computed";
        rep.tables["degrees"] = degrees_table(seq);
        if (seq.partial && seq.failed_at)
            rep.tables["failed_at_iterate"] = *seq.failed_at;
        write_output(o.out, rep.to_text());
    }
    return seq.partial ? kExitNegative : kExitOk;
}

// --------------------------------------------------------------- classify

int run_classify(const CommonOpts& o, int n) {
    require_report_format(o, "classify");
    MapInput in = resolve_map(o);
    DegreeSequence seq = degree_sequence(in.spec.map, n);
    GrowthClass growth = classify_growth(seq);

    Report rep;
    rep.command = "classify";
    rep.input_digest = digest_of(in, "n=" + std::to_string(n));
    rep.verdict = growth.kind_str();
    rep.tables["degrees"] = degrees_table(seq);
    rep.tables["growth"] = growth_json(growth);
    if (in.spec.map.dim() == 2) {
        PlaneVerdict pv = classify_plane(in.spec.map, n);
        rep.tables["plane_class"] = plane_class_str(pv.verdict);
    }
    if (n >= 8) {
        StrictAlgebraicityReport sar = strict_algebraicity_report(in.spec.map, n);
        rep.tables["strict_algebraicity"] = sar.verdict_text;
    }
    if (growth.kind == GrowthClass::Kind::Linear) rep.floats["slope"] = growth.slope;
    if (growth.kind == GrowthClass::Kind::Exponential) rep.floats["rate"] = growth.rate;
    write_output(o.out, rep.to_text());
    return growth.kind == GrowthClass::Kind::Inconclusive ? kExitNegative : kExitOk;
}

// ------------------------------------------------------------------ orbit

Norm parse_norm(const std::string& text) {
    if (text.empty() || text == "sup") return Norm::sup();
    if (text == "euclidean") return Norm::euclidean();
    if (text.rfind("wsup:", 0) == 0) {
        std::vector<double> w;
        std::stringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) w.push_back(std::stod(item));
        return Norm::weighted_sup(w);
    }
    throw ParameterError("unknown norm '" + text + "' (sup, euclidean, wsup:w1,w2,...)");
}

std::optional<std::vector<Rational>> try_parse_rational_point(const std::string& csv) {
    try {
        return parse_rational_list(csv);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<Complex> parse_float_point(const std::string& csv) {
    std::vector<Complex> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.emplace_back(std::stod(item), 0.0);
    if (out.empty()) throw ParameterError("empty point");
    return out;
}

int run_orbit(const CommonOpts& o, const std::string& x0_csv, int n,
              const std::string& norm_text, bool keep_params) {
    MapInput in = resolve_map(o);
    Norm norm = parse_norm(norm_text);
    std::vector<std::string> names = in.spec.map.var_names();

    std::string flags = "x0=" + x0_csv + ";n=" + std::to_string(n) +
                        ";norm=" + norm.describe() +
                        (keep_params ? ";keep-params" : "");
    std::optional<std::vector<Rational>> exact_x0;
    if (!keep_params) exact_x0 = try_parse_rational_point(x0_csv);
    std::string fmt = o.format.empty() ? "csv" : o.format;

    std::vector<std::string> header{"n"};
    for (const auto& v : names) header.push_back(v);
    header.push_back("norm");

    if (exact_x0 && norm.kind() == Norm::Kind::Sup) {
        ExactOrbit orb = orbit_exact(in.spec.map, *exact_x0, n);
        if (fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (size_t k = 0; k < orb.points.size(); ++k) {
                std::vector<std::string> row{std::to_string(k)};
                for (const auto& c : orb.points[k]) row.push_back(c.str());
                row.push_back(orb.sup_norms[k].str());
                rows.push_back(std::move(row));
            }
            write_output(o.out, to_csv(header, rows));
        } else {
            Report rep;
            rep.command = "orbit";
            rep.input_digest = digest_of(in, flags);
            rep.verdict = "computed-exact";
            auto pts = nlohmann::ordered_json::array();
            for (size_t k = 0; k < orb.points.size(); ++k) {
                auto row = nlohmann::ordered_json::array();
                row.push_back(k);
                for (const auto& c : orb.points[k]) row.push_back(c.str());
                row.push_back(orb.sup_norms[k].str());
                pts.push_back(row);
            }
            rep.tables["orbit"] = pts;
            write_output(o.out, rep.to_text());
        }
        return kExitOk;
    }

    std::vector<Complex> x0 = exact_x0 ? [&] {
        std::vector<Complex> v;
        for (const auto& q : *exact_x0) v.push_back(to_complex(q));
        return v;
    }()
                                       : parse_float_point(x0_csv);
    FloatOrbit orb = keep_params ? orbit(to_float_map(in.spec), x0, n, norm)
                                 : orbit(in.spec.map, x0, n, norm);
    if (fmt == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (size_t k = 0; k < orb.points.size(); ++k) {
            std::vector<std::string> row{std::to_string(k)};
            for (const auto& c : orb.points[k]) row.push_back(complex_str(c));
            row.push_back(double_str(orb.norms[k]));
            rows.push_back(std::move(row));
        }
        write_output(o.out, to_csv(header, rows));
    } else {
        Report rep;
        rep.command = "orbit";
        rep.input_digest = digest_of(in, flags);
        rep.verdict = orb.diverged ? "diverged" : "computed";
        auto pts = nlohmann::ordered_json::array();
        for (size_t k = 0; k < orb.points.size(); ++k) {
            auto row = nlohmann::ordered_json::array();
            row.push_back(k);
            for (const auto& c : orb.points[k]) row.push_back(complex_str(c));
            row.push_back(orb.norms[k]);
            pts.push_back(row);
        }
        rep.tables["orbit"] = pts;
        write_output(o.out, rep.to_text());
    }
    return orb.diverged ? kExitNegative : kExitOk;
}

// --------------------------------------------------------------- contract

int run_contract(const CommonOpts& o, int samples, double radius, int n_max, double eps,
                 uint64_t seed, const std::string& norm_text, const std::string& x0_csv) {
    require_report_format(o, "contract");
    MapInput in = resolve_map(o);
    Norm norm = parse_norm(norm_text);
    ContractionVerdict v =
        contraction_evidence(in.spec.map, samples, radius, n_max, eps, norm, seed);

    Report rep;
    rep.command = "contract";
    rep.input_digest =
        digest_of(in, "samples=" + std::to_string(samples) + ";radius=" + double_str(radius) +
                          ";n=" + std::to_string(n_max) + ";eps=" + double_str(eps) +
                          ";seed=" + std::to_string(seed) + ";norm=" + norm.describe());
    rep.verdict = v.verdict_str();
    rep.tables["origin_fixed"] = v.origin_fixed;
    rep.tables["all_sampled_orbits_converged"] = v.all_sampled_orbits_converged;
    rep.tables["converged_count"] = v.converged_count;
    rep.tables["diverged_count"] = v.diverged_count;
    rep.tables["samples"] = v.samples;
    rep.tables["max_iterations_used"] = v.max_iterations_used;
    rep.tables["caveats"] = v.caveats;
    rep.floats["spectral_radius_at_0"] = v.spectral_radius_at_0;
    rep.floats["radius"] = radius;
    rep.floats["eps"] = eps;

    // exact proof-inequality check along one orbit, for gamma3-shaped maps
    if (in.gamma_lambdas.size() == 3) {
        bool in_range = true;
        for (const auto& l : in.gamma_lambdas)
            if (!(l > Rational(0) && l < Rational(1, 2))) in_range = false;
        if (in_range) {
            std::vector<Rational> x0{1, 1, 1};
            if (!x0_csv.empty()) {
                auto parsed = try_parse_rational_point(x0_csv);
                if (!parsed) throw ParameterError("--x0 must be exact rationals for the recurrence check");
                x0 = *parsed;
            }
            RecurrenceReport rc = contraction_recurrence_check(in.gamma_lambdas, x0, std::min(std::max(n_max, 2), 200));
            nlohmann::ordered_json j;
            j["threshold_n_star"] = rc.threshold_n_star;
            j["checked_range"] = {rc.first_checked_n, rc.last_checked_n};
            j["sum_inequality_holds"] = rc.sum_inequality_holds;
            j["max_inequality_holds"] = rc.max_inequality_holds;
            // min margins are exact rationals internally; displayed as floats
            j["sum_margin"] = rc.sum_margin.to_double();
            j["max_margin"] = rc.max_margin.to_double();
            if (rc.first_violation_n) j["first_violation_n"] = *rc.first_violation_n;
            if (!rc.caveats.empty()) j["caveats"] = rc.caveats;
            rep.tables["recurrence_check"] = j;
        }
    }

    write_output(o.out, rep.to_text());
    return v.evidence_for_contraction() ? kExitOk : kExitNegative;
}

// --------------------------------------------------------------- jacobian

int run_jacobian(const CommonOpts& o) {
    require_report_format(o, "jacobian");
    MapInput in = resolve_map(o);
    const RationalMap& f = in.spec.map;
    auto J = jacobian(f);
    RationalPoly det = jacobian_determinant(J);
    std::vector<std::string> names = f.var_names();

    Report rep;
    rep.command = "jacobian";
    rep.input_digest = digest_of(in, "");
    rep.verdict = "computed";
    auto rows = nlohmann::ordered_json::array();
    for (int r = 0; r < J.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < J.cols(); ++c) row.push_back(J.at(r, c).str(names));
        rows.push_back(row);
    }
    rep.tables["matrix"] = rows;
    rep.tables["determinant"] = det.str(names);
    rep.tables["determinant_is_constant"] = det.degree() == 0;
    write_output(o.out, rep.to_text());
    return kExitOk;
}

// ------------------------------------------------------------------ eigen

int run_eigen(const CommonOpts& o) {
    require_report_format(o, "eigen");
    MapInput in = resolve_map(o);
    auto A = to_complex(linear_part(in.spec.map));
    EigenDecomposition ed = eigen_decompose(A);

    Report rep;
    rep.command = "eigen";
    rep.input_digest = digest_of(in, "");
    rep.verdict = "computed";
    auto vals = nlohmann::ordered_json::array();
    for (const auto& a : ed.values) vals.push_back(complex_str(a));
    rep.tables["eigenvalues"] = vals;
    rep.tables["diagonalizable"] = ed.diagonalizable;
    double rho = 0;
    for (const auto& a : ed.values) rho = std::max(rho, std::abs(a));
    rep.floats["spectral_radius"] = rho;
    rep.floats["basis_condition"] = ed.basis_condition;
    write_output(o.out, rep.to_text());
    return kExitOk;
}

// -------------------------------------------------------------- resonance

int run_resonance(const CommonOpts& o, int order, double tol) {
    require_report_format(o, "resonance");
    MapInput in = resolve_map(o);
    Report rep;
    rep.command = "resonance";
    rep.input_digest =
        digest_of(in, "order=" + std::to_string(order) + ";tol=" + double_str(tol));

    bool symbolic_resonant = false;
    bool have_symbolic = false;
    if (in.gamma_lambdas.size() >= 3) {
        have_symbolic = true;
        auto symbols = eigen_symbols_gamma_d(static_cast<int>(in.gamma_lambdas.size()));
        ResonanceReport sym = check_resonance_symbolic(symbols, order);
        symbolic_resonant = sym.resonant;
        auto symnames = nlohmann::ordered_json::array();
        for (const auto& s : symbols) symnames.push_back(s.str());
        rep.tables["symbols"] = symnames;
        rep.tables["symbolic_resonant"] = sym.resonant;
        rep.tables["symbolic_witnesses"] = witnesses_json(sym);
        rep.tables["symbolic_note"] =
            "exact over formal algebraically independent parameters; sound and "
            "complete up to the order bound";
    } else {
        rep.tables["symbolic_note"] =
            "symbolic checker applies to the gamma family only; numeric check on "
            "the computed spectrum below";
    }

    auto A = to_complex(linear_part(in.spec.map));
    EigenDecomposition ed = eigen_decompose(A);
    ResonanceReport num = check_resonance_numeric(ed.values, order, tol);
    auto vals = nlohmann::ordered_json::array();
    for (const auto& a : ed.values) vals.push_back(complex_str(a));
    rep.tables["eigenvalues"] = vals;
    rep.tables["numeric_resonant"] = num.resonant;
    rep.tables["numeric_witnesses"] = witnesses_json(num);
    if (!num.caveats.empty()) rep.tables["caveats"] = num.caveats;
    rep.tables["order_checked"] = order;
    rep.floats["numeric_min_gap"] = num.min_gap;
    rep.floats["tol"] = tol;

    bool resonant = symbolic_resonant || num.resonant;
    rep.verdict = resonant ? (num.resonant && !(have_symbolic && symbolic_resonant)
                                  ? "resonant-numeric"
                                  : "resonant")
                           : "non-resonant";
    write_output(o.out, rep.to_text());
    return resonant ? kExitNegative : kExitOk;
}

// -------------------------------------------------------------- linearize

nlohmann::ordered_json truncated_map_json(const TruncatedMap& t) {
    auto comps = nlohmann::ordered_json::array();
    for (const auto& p : t.comps) comps.push_back(p.str());
    return comps;
}

int run_linearize(const CommonOpts& o, int trunc, double tol) {
    require_report_format(o, "linearize");
    MapInput in = resolve_map(o);
    Report rep;
    rep.command = "linearize";
    rep.input_digest =
        digest_of(in, "trunc=" + std::to_string(trunc) + ";tol=" + double_str(tol));
    try {
        LinearizationResult res = poincare_dulac(in.spec.map, trunc, tol);
        rep.verdict = "linearized";
        auto vals = nlohmann::ordered_json::array();
        for (const auto& a : res.eigenvalues) vals.push_back(complex_str(a));
        rep.tables["eigenvalues"] = vals;
        rep.tables["U"] = truncated_map_json(res.U);
        rep.tables["U_inverse"] = truncated_map_json(res.U_inverse);
        rep.tables["order"] = res.order;
        rep.floats["residual"] = res.residual;
        rep.floats["min_denominator"] = res.min_denominator;
        rep.tables["min_denominator_order"] = res.min_denominator_order;
        rep.floats["tol"] = tol;
        write_output(o.out, rep.to_text());
        return kExitOk;
    } catch (const ResonanceError& e) {
        rep.verdict = "resonant";
        rep.tables["error"] = e.what();
        write_output(o.out, rep.to_text());
        return kExitNegative;
    } catch (const EigenbasisError& e) {
        rep.verdict = "not-diagonalizable";
        rep.tables["error"] = e.what();
        write_output(o.out, rep.to_text());
        return kExitNegative;
    } catch (const ConvergenceError& e) {
        rep.verdict = "not-converged";
        rep.tables["error"] = e.what();
        rep.floats["residual"] = e.residual();
        write_output(o.out, rep.to_text());
        return kExitNegative;
    }
}

// ------------------------------------------------------- verify-linearize

int run_verify_linearize(const CommonOpts& o, int trunc, double tol, int samples,
                         double radius, int n_max, uint64_t seed, double dev_tol) {
    require_report_format(o, "verify-linearize");
    MapInput in = resolve_map(o);
    Report rep;
    rep.command = "verify-linearize";
    rep.input_digest = digest_of(
        in, "trunc=" + std::to_string(trunc) + ";tol=" + double_str(tol) +
                ";samples=" + std::to_string(samples) + ";radius=" + double_str(radius) +
                ";n=" + std::to_string(n_max) + ";seed=" + std::to_string(seed));
    try {
        LinearizationResult res = poincare_dulac(in.spec.map, trunc, tol);
        LinearizationVerification ver =
            verify_linearization(in.spec.map, res, samples, radius, n_max, seed);
        bool ok = ver.max_deviation < dev_tol && ver.linear_part_is_identity;
        rep.verdict = ok ? "verified" : "deviation-above-tolerance";
        rep.floats["max_deviation"] = ver.max_deviation;
        rep.floats["deviation_tol"] = dev_tol;
        rep.floats["residual"] = res.residual;
        rep.floats["residual_recheck"] = ver.residual_recheck;
        rep.tables["linear_part_is_identity"] = ver.linear_part_is_identity;
        rep.tables["samples"] = samples;
        rep.tables["n_max"] = n_max;
        rep.floats["radius"] = radius;
        if (!ver.notes.empty()) rep.tables["notes"] = ver.notes;
        write_output(o.out, rep.to_text());
        return ok ? kExitOk : kExitNegative;
    } catch (const ResonanceError& e) {
        rep.verdict = "resonant";
        rep.tables["error"] = e.what();
        write_output(o.out, rep.to_text());
        return kExitNegative;
    } catch (const EigenbasisError& e) {
        rep.verdict = "not-diagonalizable";
        rep.tables["error"] = e.what();
        write_output(o.out, rep.to_text());
        return kExitNegative;
    } catch (const ConvergenceError& e) {
        rep.verdict = "not-converged";
        rep.tables["error"] = e.what();
        write_output(o.out, rep.to_text());
        return kExitNegative;
    }
}

// --------------------------------------------------- demo-theorem-4-3

int run_demo(const CommonOpts& o, int d, int n, int trunc, double tol) {
    require_report_format(o, "demo-theorem-4-3");
    CommonOpts opts = o;
    if (opts.map_file.empty() && opts.lambda_csv.empty()) opts.gamma_d = d;
    MapInput in = resolve_map(opts);

    Report rep;
    rep.command = "demo-theorem-4-3";
    rep.input_digest = digest_of(
        in, "d=" + std::to_string(d) + ";n=" + std::to_string(n) +
                ";trunc=" + std::to_string(trunc) + ";tol=" + double_str(tol));

    // 1. degree growth
    DegreeSequence seq = degree_sequence(in.spec.map, n);
    GrowthClass growth = classify_growth(seq);
    bool growing_linear = growth.kind == GrowthClass::Kind::Linear && growth.slope > 0;
    rep.tables["degrees"] = degrees_table(seq);
    rep.tables["growth"] = growth_json(growth);
    StrictAlgebraicityReport sar = strict_algebraicity_report(in.spec.map, n);
    rep.tables["strict_algebraicity"] = sar.verdict_text;

    // 2. non-resonance of the spectrum (formal parameters, exact)
    int dim = in.spec.map.dim();
    ResonanceReport sym = check_resonance_symbolic(eigen_symbols_gamma_d(dim), 12);
    rep.tables["symbolic_resonant"] = sym.resonant;
    rep.tables["resonance_order_checked"] = sym.order_checked;

    // 3. truncated linearization + orbit check
    std::string failure;
    double residual = -1, max_dev = -1;
    try {
        LinearizationResult res = poincare_dulac(in.spec.map, trunc, tol);
        LinearizationVerification ver =
            verify_linearization(in.spec.map, res, 20, 0.1, 20, 2024);
        residual = res.residual;
        max_dev = ver.max_deviation;
        rep.floats["linearization_residual"] = res.residual;
        rep.floats["linearization_tol"] = tol;
        rep.floats["orbit_check_max_deviation"] = ver.max_deviation;
        rep.tables["linearization_order"] = trunc;
        auto vals = nlohmann::ordered_json::array();
        for (const auto& a : res.eigenvalues) vals.push_back(complex_str(a));
        rep.tables["eigenvalues"] = vals;
    } catch (const Error& e) {
        failure = e.what();
        rep.tables["linearization_error"] = failure;
    }

    bool pass = growing_linear && !sym.resonant && failure.empty() && residual < tol &&
                max_dev >= 0 && max_dev < 1e-6;
    rep.verdict = pass ? "demo-passed" : "demo-failed";
    std::ostringstream narrative;
    narrative
        << "degree of the n-th iterate grows linearly through N=" << n
        << " (unboundedness beyond the computed range is extrapolated, not proved), "
        << "while the spectrum at the fixed point is non-resonant to order 12 and a "
        << "degree-" << trunc
        << " truncated conjugacy transforms the map to its linear part with residual "
        << (residual >= 0 ? double_str(residual) : "n/a")
        << " and orbit-check deviation "
        << (max_dev >= 0 ? double_str(max_dev) : "n/a")
        << ": computable evidence that the map is holomorphically linearizable but not "
        << "conjugate to a linear map by any polynomial automorphism";
    rep.tables["narrative"] = narrative.str();
    write_output(o.out, rep.to_text());
    return pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial automorphisms: degree growth, contraction evidence, "
                 "resonance, truncated linearization"};
    app.require_subcommand(1);

    CommonOpts o_degseq, o_classify, o_orbit, o_contract, o_jacobian, o_eigen,
        o_resonance, o_linearize, o_verify, o_demo;

    int degseq_n = 25;
    auto* c_degseq = app.add_subcommand("degseq", "degrees of f^1..f^N");
    add_map_options(c_degseq, o_degseq);
    add_output_options(c_degseq, o_degseq);
    c_degseq->add_option("--n", degseq_n, "number of iterates");

    int classify_n = 12;
    auto* c_classify = app.add_subcommand("classify", "degree-growth classification");
    add_map_options(c_classify, o_classify);
    add_output_options(c_classify, o_classify);
    c_classify->add_option("--n", classify_n, "number of iterates");

    std::string orbit_x0 = "1,1,1", orbit_norm = "sup";
    int orbit_n = 50;
    bool orbit_float = false;
    auto* c_orbit = app.add_subcommand("orbit", "orbit of a point under f");
    add_map_options(c_orbit, o_orbit);
    add_output_options(c_orbit, o_orbit);
    c_orbit->add_option("--x0", orbit_x0, "start point (comma-separated)");
    c_orbit->add_option("--n", orbit_n, "number of steps");
    c_orbit->add_option("--norm", orbit_norm, "sup | euclidean | wsup:w1,w2,...");
    c_orbit->add_flag("--keep-params", orbit_float,
                      "float mode: parameters bound as floats instead of exact rationals");

    int contract_samples = 100, contract_n = 200;
    double contract_radius = 10.0, contract_eps = 1e-9;
    uint64_t contract_seed = 1;
    std::string contract_norm = "sup", contract_x0;
    auto* c_contract = app.add_subcommand("contract", "contraction evidence");
    add_map_options(c_contract, o_contract);
    add_output_options(c_contract, o_contract);
    c_contract->add_option("--samples", contract_samples, "sampled start points");
    c_contract->add_option("--radius", contract_radius, "sup-ball radius for samples");
    c_contract->add_option("--n", contract_n, "max iterations per orbit");
    c_contract->add_option("--eps", contract_eps, "convergence threshold");
    c_contract->add_option("--seed", contract_seed, "sampling seed");
    c_contract->add_option("--norm", contract_norm, "norm for orbits");
    c_contract->add_option("--x0", contract_x0,
                           "exact rational start for the proof-inequality check "
                           "(gamma3-shaped maps; default 1,1,1)");

    auto* c_jacobian = app.add_subcommand("jacobian", "symbolic Jacobian and determinant");
    add_map_options(c_jacobian, o_jacobian);
    add_output_options(c_jacobian, o_jacobian);

    auto* c_eigen = app.add_subcommand("eigen", "eigenvalues of the differential at 0");
    add_map_options(c_eigen, o_eigen);
    add_output_options(c_eigen, o_eigen);

    int res_order = 12;
    double res_tol = 1e-10;
    auto* c_resonance = app.add_subcommand("resonance", "resonance relations among eigenvalues");
    add_map_options(c_resonance, o_resonance);
    add_output_options(c_resonance, o_resonance);
    c_resonance->add_option("--order", res_order, "max multi-index total degree");
    c_resonance->add_option("--tol", res_tol, "numeric coincidence tolerance");

    int lin_trunc = 8;
    double lin_tol = 1e-9;
    auto* c_linearize = app.add_subcommand("linearize", "truncated linearizing conjugacy");
    add_map_options(c_linearize, o_linearize);
    add_output_options(c_linearize, o_linearize);
    c_linearize->add_option("--trunc", lin_trunc, "truncation order N");
    c_linearize->add_option("--tol", lin_tol, "residual tolerance");

    int ver_trunc = 8, ver_samples = 20, ver_n = 20;
    double ver_tol = 1e-9, ver_radius = 0.1, ver_dev_tol = 1e-6;
    uint64_t ver_seed = 2024;
    auto* c_verify = app.add_subcommand("verify-linearize",
                                        "orbit check of the truncated conjugacy");
    add_map_options(c_verify, o_verify);
    add_output_options(c_verify, o_verify);
    c_verify->add_option("--trunc", ver_trunc, "truncation order N");
    c_verify->add_option("--tol", ver_tol, "residual tolerance");
    c_verify->add_option("--samples", ver_samples, "sampled start points");
    c_verify->add_option("--radius", ver_radius, "sup-ball radius for samples");
    c_verify->add_option("--n", ver_n, "orbit length per sample");
    c_verify->add_option("--seed", ver_seed, "sampling seed");
    c_verify->add_option("--dev-tol", ver_dev_tol, "max allowed orbit deviation");

    int demo_d = 3, demo_n = 25, demo_trunc = 8;
    double demo_tol = 1e-9;
    auto* c_demo = app.add_subcommand(
        "demo-theorem-4-3",
        "end-to-end: unbounded degree growth plus successful truncated linearization");
    add_map_options(c_demo, o_demo);
    add_output_options(c_demo, o_demo);
    c_demo->add_option("--d", demo_d, "dimension of the gamma family");
    c_demo->add_option("--n", demo_n, "degree-table length");
    c_demo->add_option("--trunc", demo_trunc, "truncation order N");
    c_demo->add_option("--tol", demo_tol, "residual tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (c_degseq->parsed()) return run_degseq(o_degseq, degseq_n);
        if (c_classify->parsed()) return run_classify(o_classify, classify_n);
        if (c_orbit->parsed())
            return run_orbit(o_orbit, orbit_x0, orbit_n, orbit_norm, orbit_float);
        if (c_contract->parsed())
            return run_contract(o_contract, contract_samples, contract_radius, contract_n,
                                contract_eps, contract_seed, contract_norm, contract_x0);
        if (c_jacobian->parsed()) return run_jacobian(o_jacobian);
        if (c_eigen->parsed()) return run_eigen(o_eigen);
        if (c_resonance->parsed()) return run_resonance(o_resonance, res_order, res_tol);
        if (c_linearize->parsed()) return run_linearize(o_linearize, lin_trunc, lin_tol);
        if (c_verify->parsed())
            return run_verify_linearize(o_verify, ver_trunc, ver_tol, ver_samples,
                                        ver_radius, ver_n, ver_seed, ver_dev_tol);
        if (c_demo->parsed()) return run_demo(o_demo, demo_d, demo_n, demo_trunc, demo_tol);
    } catch (const Error& e) {
        std::cerr << "polydyn: error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "polydyn: internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

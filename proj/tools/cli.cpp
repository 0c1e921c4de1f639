#include "cli.hpp"

#include "supertube/error.hpp"
#include "supertube/io/json.hpp"
#include "supertube/random.hpp"
#include "supertube/superalg/charfn.hpp"
#include "supertube/tubegeom/tube.hpp"
#include "supertube/verify/suites.hpp"
#include "supertube/zeta/zeta.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace supertube::cli {

using io::Json;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t budget = 1'000'000'000;
    unsigned workers = 1;
    unsigned chunks = 64;
    std::uint64_t samples = 1'000'000;
    std::vector<std::string> tol;
    std::string format = "json";
    std::string out;
};

// A finished report in all three renderings.
struct Report {
    Json json;
    std::ostringstream text;
    std::ostringstream csv;
    int code = kOk;
};

verify::SuiteConfig suite_config(const Globals& g) {
    verify::SuiteConfig c;
    c.seed = g.seed;
    c.workers = g.workers;
    c.budget = g.budget;
    c.mc_samples = g.samples;
    c.mc_chunks = g.chunks;
    for (const auto& item : g.tol) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("--tol expects NAME=VALUE, got \"" + item + "\"");
        const std::string name = item.substr(0, eq);
        (void)c.tolerance(name);  // rejects unknown names
        try {
            c.tolerances[name] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("--tol " + name + ": not a number");
        }
    }
    return c;
}

Json header(const std::string& command, const Globals& g) {
    Json h;
    h["command"] = command;
    h["seed"] = g.seed;
    h["chunks"] = g.chunks;
    return h;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

// ---------------------------------------------------------------- tube

tubegeom::WeightProfile parse_profile(const std::string& text) {
    tubegeom::WeightProfile w;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("--weighted expects t:value pairs, got \"" + item + "\"");
        try {
            w.t.push_back(std::stod(item.substr(0, colon)));
            w.value.push_back(std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ParseError("--weighted: malformed pair \"" + item + "\"");
        }
    }
    if (w.t.size() < 2) throw ParseError("--weighted needs at least two t:value pairs");
    for (std::size_t i = 1; i < w.t.size(); ++i)
        if (!(w.t[i] > w.t[i - 1])) throw ParseError("--weighted: t values must increase");
    return w;
}

void tube_parametric(Report& r, const Globals& g, const tubegeom::ParametricSurface& s, const std::vector<double>& hs,
                     bool weyl, bool mc, const std::string& weighted) {
    const verify::SuiteConfig cfg = suite_config(g);
    const double quad_tol = cfg.tolerance("quadrature"), sigma_tol = cfg.tolerance("mc_sigma");
    const tubegeom::TubePolynomial w = tubegeom::weyl_coefficients(s);
    tubegeom::MonteCarloOptions mco;
    mco.chunks = g.chunks;
    mco.workers = g.workers;
    r.json["surface_dim"] = s.dim();
    r.json["focal_bound"] = std::isinf(s.focal_bound()) ? Json(nullptr) : Json(s.focal_bound());
    r.json["samples"] = mc ? g.samples : 0;
    Json rows = Json::array(), warnings = Json::array();
    r.csv << "h,polynomial,quadrature,quadrature_error,mc_estimate,mc_stderr,polynomial_integral\n";
    std::uint64_t stream = 0;
    for (double h : hs) {
        Json row;
        row["h"] = h;
        const tubegeom::HalfTube ht = tubegeom::half_tube_volume(s, h);
        if (ht.beyond_focal) {
            const std::string msg = "h = " + fmt(h) + " reaches the focal bound " + fmt(s.focal_bound()) +
                                    "; the tube polynomial need not describe the tube";
            warnings.push_back(msg);
        }
        const double poly = w.evaluate(h);
        row["polynomial"] = poly;
        row["quadrature"] = ht.quadrature;
        row["quadrature_error"] = ht.error;
        row["residual"] = std::abs(poly - ht.quadrature);
        row["tolerance"] = quad_tol;
        bool ok = std::abs(poly - ht.quadrature) < quad_tol || ht.beyond_focal;
        std::string mc_est, mc_err, integral;
        if (mc) {
            const auto m = tubegeom::monte_carlo_tube_volume(s, h, static_cast<long>(g.samples), g.seed + 1000 * ++stream, mco);
            const double target = w.integral(h);
            const double sig = m.stderr_ > 0 ? std::abs(m.estimate - target) / m.stderr_ : std::abs(m.estimate - target);
            row["mc_estimate"] = m.estimate;
            row["mc_stderr"] = m.stderr_;
            row["polynomial_integral"] = target;
            row["mc_sigmas"] = sig;
            row["mc_sigma_tolerance"] = sigma_tol;
            if (!ht.beyond_focal && !(sig < sigma_tol) && m.stderr_ > 0) ok = false;
            mc_est = fmt(m.estimate);
            mc_err = fmt(m.stderr_);
            integral = fmt(target);
        }
        row["pass"] = ok;
        if (!ok) r.code = kVerificationFailure;
        rows.push_back(row);
        r.csv << fmt(h) << "," << fmt(poly) << "," << fmt(ht.quadrature) << "," << fmt(ht.error) << "," << mc_est << ","
              << mc_err << "," << integral << "\n";
        r.text << "h=" << fmt(h) << "  polynomial " << fmt(poly) << "  quadrature " << fmt(ht.quadrature);
        if (mc) r.text << "  MC " << mc_est << " +- " << mc_err << " (polynomial integral " << integral << ")";
        r.text << (ok ? "  ok" : "  FAIL") << "\n";
    }
    r.json["rows"] = rows;
    if (weyl) {
        Json wj;
        wj["c"] = w.c;
        wj["errors"] = w.errors;
        wj["euler_estimate"] = w.euler_estimate();
        wj["gauss_map_degree"] = w.gauss_map_degree();
        r.text << "Weyl coefficients:";
        for (double c : w.c) r.text << " " << fmt(c);
        r.text << "\n";
        if (s.dim() == 2) {
            const double chi = std::round(w.euler_estimate()) + 0.0;
            const double tol = cfg.tolerance("identity");
            Json checks = Json::array();
            for (double h : hs) {
                const double lhs = tubegeom::half_tube_volume(s, h).quadrature +
                                   tubegeom::half_tube_volume(s, -h).quadrature - 2 * w.c[0];
                const double res = std::abs(lhs - 4 * std::numbers::pi * chi * h * h);
                const bool ok = res < tol;
                if (!ok) r.code = kVerificationFailure;
                checks.push_back(Json{{"h", h}, {"chi", chi}, {"residual", res}, {"tolerance", tol}, {"pass", ok}});
                r.text << "two-sided identity h=" << fmt(h) << " chi=" << chi << " residual " << fmt(res)
                       << (ok ? "  ok" : "  FAIL") << "\n";
            }
            wj["two_sided_identity"] = checks;
        }
        r.json["weyl"] = wj;
    }
    if (!weighted.empty()) {
        const auto profile = parse_profile(weighted);
        const auto wi = tubegeom::weighted_integral(s, profile, static_cast<long>(g.samples), g.seed + 1000 * ++stream, mco);
        const double sig = wi.lhs_stderr > 0 ? std::abs(wi.lhs - wi.rhs) / wi.lhs_stderr : std::abs(wi.lhs - wi.rhs);
        const bool ok = wi.lhs_stderr > 0 ? sig < sigma_tol : sig < 1e-12;
        if (!ok) r.code = kVerificationFailure;
        r.json["weighted"] = Json{{"profile", weighted},   {"lhs", wi.lhs},   {"lhs_stderr", wi.lhs_stderr},
                                  {"rhs", wi.rhs},         {"rhs_error", wi.rhs_error}, {"sigmas", sig},
                                  {"sigma_tolerance", sigma_tol}, {"pass", ok}};
        r.text << "weighted: MC " << fmt(wi.lhs) << " +- " << fmt(wi.lhs_stderr) << "  quadrature " << fmt(wi.rhs)
               << (ok ? "  ok" : "  FAIL") << "\n";
    }
    r.json["warnings"] = warnings;
    for (const auto& wmsg : warnings) r.text << "warning: " << wmsg.get<std::string>() << "\n";
}

void tube_level_set(Report& r, const Globals& g, const tubegeom::LevelSetSurface& s) {
    const verify::SuiteConfig cfg = suite_config(g);
    const double tol = cfg.tolerance("eq12");
    Rng rng(g.seed, 0x7475626cULL);
    Json rows = Json::array();
    r.csv << "point,H,A_vol,A_mcurv,eq12_remainder\n";
    const int m = s.phi().nvars();
    for (int attempt = 0; attempt < 200 && rows.size() < 10; ++attempt) {
        Eigen::VectorXd x(m);
        for (int i = 0; i < m; ++i) x[i] = rng.uniform(-2, 2);
        const auto p = tubegeom::project_to_surface(s, x);
        if (!p.converged) continue;
        try {
            const auto lc = tubegeom::local_char_poly_dual(s, p.foot, tol);
            Json row;
            row["point"] = std::vector<double>(p.foot.data(), p.foot.data() + m);
            row["H"] = tubegeom::mean_curvature(s, p.foot);
            row["A_vol"] = tubegeom::dual_density_vol(s, p.foot);
            row["A_mcurv"] = tubegeom::dual_density_mcurv(s, p.foot);
            row["reduced_char_poly"] = lc.reduced;
            row["eq12_remainder"] = lc.remainder;
            row["tolerance"] = tol;
            rows.push_back(row);
            std::string pt;
            for (int i = 0; i < m; ++i) pt += (i ? " " : "") + fmt(p.foot[i]);
            r.csv << pt << "," << fmt(row["H"].get<double>()) << "," << fmt(row["A_vol"].get<double>()) << ","
                  << fmt(row["A_mcurv"].get<double>()) << "," << fmt(lc.remainder) << "\n";
            r.text << "x=(" << pt << ")  H " << fmt(row["H"].get<double>()) << "  remainder " << fmt(lc.remainder)
                   << "\n";
        } catch (const SingularError&) {
            continue;
        } catch (const IdentityViolation& e) {
            r.code = kVerificationFailure;
            rows.push_back(Json{{"error", e.what()}});
            r.text << "FAIL " << e.what() << "\n";
        }
    }
    if (rows.empty()) throw DomainError("no regular surface points found near [-2, 2]^" + std::to_string(m));
    r.json["rows"] = rows;
}

Report cmd_tube(const Globals& g, const std::string& path, const std::vector<double>& hs, bool weyl, bool mc,
                const std::string& weighted) {
    const io::SurfaceSpec spec = io::surface_from_json(io::read_document(path));
    Report r;
    r.json = header("tube", g);
    r.json["kind"] = spec.kind;
    if (spec.parametric) {
        if (hs.empty() && !weyl && weighted.empty()) throw ParseError("tube: give h values, --weyl or --weighted");
        tube_parametric(r, g, *spec.parametric, hs, weyl, mc, weighted);
    } else {
        if (mc || !weighted.empty() || weyl) throw DomainError("tube volumes need a parametric surface (sphere or torus)");
        tube_level_set(r, g, *spec.level_set);
    }
    r.json["pass"] = r.code == kOk;
    return r;
}

// --------------------------------------------------------------- super

std::string dim_text(superalg::SuperDim d) { return std::to_string(d.p) + "|" + std::to_string(d.q); }

Report cmd_super(const Globals& g, const std::string& path, bool ber, bool chr, bool dual, bool berpm, bool props) {
    const superalg::SuperMatrix a = io::supermatrix_from_json(io::read_document(path));
    if (!ber && !chr && !dual && !berpm && !props) ber = chr = true;
    Report r;
    r.json = header("super", g);
    r.json["dim"] = {a.dim().p, a.dim().q};
    r.json["generators"] = a.generators();
    r.text << "supermatrix of dimension " << dim_text(a.dim()) << " over " << a.generators() << " generators\n";
    auto verdict = [&](Json& j, const std::string& name, bool ok) {
        j[name] = ok;
        if (!ok) r.code = kVerificationFailure;
        r.text << "  " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    };
    if (ber) {
        const auto b = superalg::berezinian(a);
        r.json["ber"] = Json{{"value", io::to_json(b)}, {"text", superalg::to_string(b)}};
        r.text << "Ber = " << superalg::to_string(b) << "\n";
    }
    if (chr) {
        Json cj;
        const int p = a.dim().p, q = a.dim().q;
        if (a.scalar_bodied()) {
            const auto c = superalg::char_function_exact(a);
            cj = io::to_json(c);
            r.text << "Ber(1+tA) = " << exact::to_string(c.value) << "\n";
            const int order = p + q + 4;
            verdict(cj, "series_matches_supertraces",
                    c.series.truncated(order) == superalg::char_series(a, order).to_scalar());
            verdict(cj, "recurrence_past_numerator",
                    exact::linear_recurrence_check(c.series.coeffs(), c.value.den(), c.value.num_degree() + 1));
            verdict(cj, "raw_degree_bounds", c.raw_num_degree <= p + p * q && c.raw_den_degree <= q + p * q);
        } else {
            const auto raw = superalg::char_function_raw(a);
            Json num = Json::array(), den = Json::array();
            for (const auto& e : raw.num.coeffs()) num.push_back(io::to_json(e));
            for (const auto& e : raw.den.coeffs()) den.push_back(io::to_json(e));
            cj["raw_num"] = num;
            cj["raw_den"] = den;
            cj["raw_degrees"] = {raw.num.degree(), raw.den.degree()};
            const int order = p + q + p * q;
            const auto series = superalg::char_series(a, order);
            Json sj = Json::array();
            for (const auto& e : series.coeffs()) sj.push_back(superalg::to_string(e));
            cj["series"] = sj;
            r.text << "raw fraction degrees " << raw.num.degree() << "/" << raw.den.degree() << "\n";
            verdict(cj, "raw_degree_bounds", raw.num.degree() <= p + p * q && raw.den.degree() <= q + p * q);
            verdict(cj, "raw_series_matches_supertraces", superalg::expand(raw, order) == series);
        }
        r.json["char"] = cj;
    }
    if (dual) {
        Json terms = Json::array();
        r.text << "at infinity:";
        for (const auto& t : superalg::char_dual_series(a, 6)) {
            terms.push_back(Json{{"exponent", t.exponent}, {"coeff", superalg::to_string(t.coeff)}});
            r.text << " [t^" << t.exponent << "] " << superalg::to_string(t.coeff);
        }
        r.text << "\n";
        r.json["dual"] = terms;
    }
    if (berpm) {
        if (!a.scalar_bodied()) throw DomainError("--berpm needs a scalar-bodied matrix");
        const auto c = superalg::char_function_exact(a);
        const auto b = superalg::ber_plus_minus(c);
        Json bj{{"ber_plus", io::to_json(b.ber_plus)}, {"ber_minus", io::to_json(b.ber_minus)}, {"resultant", io::to_json(b.res)}};
        r.text << "Ber+ = " << exact::to_string(b.ber_plus) << ", Ber- = " << exact::to_string(b.ber_minus)
               << ", resultant = " << exact::to_string(b.res) << "\n";
        if (sgn(b.res) != 0 && sgn(b.ber_minus) != 0)
            verdict(bj, "ratio_equals_ber", b.ber_plus / b.ber_minus == superalg::berezinian(a).body());
        r.json["berpm"] = bj;
    }
    if (props) {
        const auto cfg = suite_config(g);
        Json pj = Json::array();
        for (const std::string name : {"prop3", "prop4"}) {
            const auto s = verify::run_suite(name, cfg);
            pj.push_back(Json{{"suite", name}, {"cases", s.cases()}, {"pass", s.passed()}});
            r.text << name << ": " << s.cases() << " cases " << (s.passed() ? "ok" : "FAIL") << "\n";
            if (!s.passed()) r.code = kVerificationFailure;
        }
        r.json["props"] = pj;
    }
    r.csv << "field,value\n";
    if (r.json.contains("ber")) r.csv << "ber," << r.json["ber"]["text"].get<std::string>() << "\n";
    if (r.json.contains("char") && r.json["char"].contains("text"))
        r.csv << "char," << r.json["char"]["text"].get<std::string>() << "\n";
    r.json["pass"] = r.code == kOk;
    return r;
}

// ---------------------------------------------------------------- zeta

Report cmd_zeta(const Globals& g, const std::string& path, int K, const std::vector<int>& rational, bool realize,
                int holdout) {
    const zeta::PrimePolyVariety v = io::variety_from_json(io::read_document(path));
    if (K < 1) throw ParseError("zeta: K must be at least 1");
    if (holdout < 0) throw ParseError("zeta: --holdout must be nonnegative");
    const bool fit = !rational.empty();
    if ((realize || holdout > 0) && !fit) throw ParseError("zeta: --realize and --holdout need --rational");
    if (fit && K < rational[0] + rational[1] + 2)
        throw ParseError("zeta: --rational " + std::to_string(rational[0]) + " " + std::to_string(rational[1]) +
                         " needs K >= " + std::to_string(rational[0] + rational[1] + 2));
    for (int k = 1; k <= K + holdout; ++k) {
        const std::uint64_t cost = zeta::count_cost(v, k);
        if (cost > g.budget)
            throw BudgetError("counting nu_" + std::to_string(k) + " needs " + std::to_string(cost) +
                                  " evaluations, budget is " + std::to_string(g.budget),
                              cost);
    }
    zeta::CountOptions opts;
    opts.budget = g.budget;
    opts.workers = g.workers;
    opts.chunks = g.chunks;
    zeta::ZetaResult zr = zeta::compute_zeta(v, K, opts);

    Report r;
    r.json = header("zeta", g);
    r.json["budget"] = g.budget;
    r.json["variety"] = io::to_json(v);
    r.json["text"] = zeta::to_string(v);
    r.json["counts"] = zr.counts;
    r.json["series"] = io::to_json(zr.series);
    r.json["integral"] = zr.integral;
    r.text << zeta::to_string(v) << "\n";
    r.csv << "k,count\n";
    for (int k = 1; k <= K; ++k) {
        r.text << "  nu_" << k << " = " << zr.counts[static_cast<std::size_t>(k - 1)] << "\n";
        r.csv << k << "," << zr.counts[static_cast<std::size_t>(k - 1)] << "\n";
    }
    r.text << "  series coefficients integral: " << (zr.integral ? "yes" : "NO") << "\n";
    if (!zr.integral) r.code = kVerificationFailure;
    if (fit) {
        try {
            zr.rational = zeta::zeta_rational(zr, rational[0], rational[1]);
        } catch (const NotRationalError& e) {
            r.json["rational"] = nullptr;
            r.json["rational_error"] = e.what();
            r.text << "  " << e.what() << "\n";
            r.code = kVerificationFailure;
        }
    }
    if (zr.rational) {
        r.json["rational"] = io::to_json(*zr.rational);
        r.text << "  Z(t) = " << exact::to_string(*zr.rational) << "\n";
        const auto pred = zeta::predict_counts(*zr.rational, K + holdout);
        Json pj = Json::array();
        for (const auto& c : pred.counts) pj.push_back(io::to_json(c));
        r.json["predicted"] = pj;
        r.json["predicted_plausible"] = pred.plausible;
        if (!pred.plausible) r.code = kVerificationFailure;
        if (holdout > 0) {
            Json hj = Json::array();
            bool all = true;
            for (int k = K + 1; k <= K + holdout; ++k) {
                const std::uint64_t brute = zeta::count_points(v, k, opts);
                const auto& p = pred.counts[static_cast<std::size_t>(k - 1)];
                const bool ok = p == exact::Rational(exact::Integer(static_cast<unsigned long>(brute)));
                all = all && ok;
                hj.push_back(Json{{"k", k}, {"brute_force", brute}, {"predicted", io::to_json(p)}, {"pass", ok}});
                r.text << "  held out nu_" << k << ": brute force " << brute << ", predicted " << exact::to_string(p)
                       << (ok ? "  ok" : "  FAIL") << "\n";
            }
            r.json["holdout"] = hj;
            r.json["holdout_pass"] = all;
            if (!all) r.code = kVerificationFailure;
        }
        if (realize) {
            const auto m = zeta::zeta_realize(*zr.rational);
            r.json["realization"] = io::to_json(m);
            r.text << "  realized on a " << dim_text(m.dim()) << " superspace\n";
        }
    }
    r.json["pass"] = r.code == kOk;
    return r;
}

// -------------------------------------------------------------- verify

Report cmd_verify(const Globals& g, const std::string& which) {
    std::vector<std::string> names;
    if (which == "all") {
        names = verify::suite_names();
    } else {
        const auto& all = verify::suite_names();
        if (std::find(all.begin(), all.end(), which) == all.end()) {
            std::string list;
            for (const auto& n : all) list += " " + n;
            throw ParseError("unknown suite \"" + which + "\"; choose all or one of:" + list);
        }
        names = {which};
    }
    const auto cfg = suite_config(g);
    Report r;
    r.json = header("verify", g);
    r.json["samples"] = g.samples;
    r.json["budget"] = g.budget;
    Json suites = Json::array();
    r.csv << "suite,label,cases,residual,tolerance,pass\n";
    for (const auto& name : names) {
        const auto s = verify::run_suite(name, cfg);
        Json rows = Json::array();
        for (const auto& row : s.rows) {
            rows.push_back(Json{{"label", row.label},
                                {"cases", row.cases},
                                {"residual", row.residual},
                                {"tolerance", row.tolerance},
                                {"pass", row.passed}});
            r.csv << name << ",\"" << row.label << "\"," << row.cases << "," << fmt(row.residual) << ","
                  << fmt(row.tolerance) << "," << (row.passed ? "pass" : "fail") << "\n";
        }
        suites.push_back(Json{{"suite", s.name},
                              {"identity", s.identity},
                              {"cases", s.cases()},
                              {"max_residual", s.max_residual()},
                              {"pass", s.passed()},
                              {"rows", rows}});
        r.text << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.identity << " (" << s.cases()
               << " cases, max residual " << fmt(s.max_residual()) << ")\n";
        for (const auto& row : s.rows)
            if (!row.passed)
                r.text << "    failing: " << row.label << " residual " << fmt(row.residual) << " tolerance "
                       << fmt(row.tolerance) << "\n";
        if (!s.passed()) r.code = kVerificationFailure;
    }
    r.json["suites"] = suites;
    r.json["pass"] = r.code == kOk;
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tube formulas, Berezinians and zeta functions with built-in identity checks", "supertube"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "seed for every randomized step");
    app.add_option("--budget", g.budget, "evaluation cap for point counting");
    app.add_option("--workers", g.workers, "worker threads; results do not depend on it")->check(CLI::Range(1u, 256u));
    app.add_option("--chunks", g.chunks, "work chunks for Monte Carlo and counting")->check(CLI::Range(1u, 1u << 20));
    app.add_option("--samples", g.samples, "Monte Carlo samples")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    app.add_option("--tol", g.tol, "tolerance override NAME=VALUE");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", g.out, "write the report to a file");

    auto* tube = app.add_subcommand("tube", "tube volumes of a surface spec");
    std::string tube_path, weighted;
    std::vector<double> hs;
    bool weyl = false, mc = false;
    tube->add_option("surface", tube_path, "surface JSON")->required();
    tube->add_option("offsets", hs, "offsets h (space or comma separated)")->delimiter(',');
    tube->add_flag("--weyl", weyl, "Weyl coefficients and the two-sided identity");
    tube->add_flag("--mc", mc, "Monte Carlo tube volumes");
    tube->add_option("--weighted", weighted, "weight profile t:value,... for the weighted integral");

    auto* super = app.add_subcommand("super", "Berezinian and characteristic function of a supermatrix");
    std::string matrix_path;
    bool ber = false, chr = false, dual = false, berpm = false, props = false;
    super->add_option("matrix", matrix_path, "supermatrix JSON")->required();
    super->add_flag("--ber", ber);
    super->add_flag("--char", chr);
    super->add_flag("--dual", dual);
    super->add_flag("--berpm", berpm);
    super->add_flag("--props", props);

    auto* zeta_cmd = app.add_subcommand("zeta", "point counts and zeta function of a variety");
    std::string variety_path;
    int K = 0, holdout = 0;
    std::vector<int> rational;
    bool realize = false;
    zeta_cmd->add_option("variety", variety_path, "variety JSON")->required();
    zeta_cmd->add_option("K", K, "number of counts nu_1..nu_K")->required();
    zeta_cmd->add_option("--rational", rational, "pmax qmax")->expected(2);
    zeta_cmd->add_flag("--realize", realize);
    zeta_cmd->add_option("--holdout", holdout, "extra counts checked against the prediction");

    auto* verify_cmd = app.add_subcommand("verify", "run identity suites");
    std::string suite;
    verify_cmd->add_option("suite", suite, "suite name or all")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    Report report;
    try {
        if (tube->parsed())
            report = cmd_tube(g, tube_path, hs, weyl, mc, weighted);
        else if (super->parsed())
            report = cmd_super(g, matrix_path, ber, chr, dual, berpm, props);
        else if (zeta_cmd->parsed())
            report = cmd_zeta(g, variety_path, K, rational, realize, holdout);
        else
            report = cmd_verify(g, suite);
    } catch (const BudgetError& e) {
        err << "budget refusal: " << e.what() << " (required " << e.required() << ")\n";
        return kBudgetRefusal;
    } catch (const IdentityViolation& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const NotRationalError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    std::string body;
    if (g.format == "json")
        body = report.json.dump(2) + "\n";
    else if (g.format == "csv")
        body = report.csv.str();
    else
        body = report.text.str();
    if (g.out.empty()) {
        out << body;
    } else {
        std::ofstream file(g.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << g.out << "\n";
            return kInputError;
        }
        file << body;
    }
    if (report.code == kVerificationFailure) err << "verification failure (see report)\n";
    return report.code;
}

}  // namespace supertube::cli

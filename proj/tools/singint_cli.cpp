// Batch front end: estimates, scales, finiteness verdicts, oracle
// comparisons, critical exponents, theta sampling, regularization,
// stability probes, distribution functions, and named validation suites.
//
// Exit codes: 0 finite / 3 infinite / 2 finiteness disagreement / 1 error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "singint/serialize.hpp"

namespace {

using namespace singint;

constexpr int kExitFinite = 0;
constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitInfinite = 3;

// Inline JSON or @path indirection for structured flag values.
std::string load_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open " + arg.substr(1));
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;
}

void emit(const json& payload, const RunConfig& cfg, const std::string& input_material,
          const std::string& out_path) {
    json doc{{"config", run_config_to_json(cfg)},
             {"input_hash", content_hash(input_material)},
             {"result", payload}};
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << doc.dump(2) << "\n";
    }
}

ExponentPair parse_pair(const std::string& eps, const std::string& delta) {
    return {Rational::parse(eps), Rational::parse(delta)};
}

// ---- named suites (abridged versions of the acceptance checks) ----

int suite_ratios() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    ExponentPair pair{Rational(1, 3), Rational(7, 5)};
    int n_ok = 0, total = 60;
    double rmin = kInf, rmax = 0.0;
    for (int i = 0; i < total; ++i) {
        std::vector<cplx> rts;
        for (int j = 0; j < 3; ++j) rts.emplace_back(unit(rng) * 0.9, unit(rng) * 0.9);
        ComplexPoly Q = ComplexPoly::from_roots(rts);
        ComplexPoly P({cplx(unit(rng) + 1.5), cplx(unit(rng))});
        SizeEstimate e = estimate(P, Q, pair, 2.0);
        ARPExpr R{{P}, {Q}, pair};
        OracleResult o = integrate_disk(R, 2.0, 1e-2);
        if (e.infinite() || o.diverging) continue;
        double ratio = o.value / e.value;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        ++n_ok;
    }
    bool pass = n_ok > total / 2 && rmax / rmin <= 100.0;
    std::printf("ratios: %s (n=%d ratio range [%.3g, %.3g])\n", pass ? "PASS" : "FAIL", n_ok,
                rmin, rmax);
    return pass ? kExitFinite : kExitError;
}

int suite_quadratic() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.2, 1.0);
    double eps = 0.5, delta = 1.2, lambda = 1.0;
    double rmin = kInf, rmax = 0.0;
    bool pass = true;
    for (int i = 0; i < 20; ++i) {
        cplx a(unit(rng), unit(rng)), b(unit(rng), unit(rng)), c(unit(rng), unit(rng));
        double closed = example_closed_form(a, b, c, eps, delta, lambda);
        // integrand |z - c|^eps / |a z^2 - b z|^delta
        ComplexPoly P({-c, cplx(1.0)});
        ComplexPoly Q({cplx(0.0), -b, a});
        ARPExpr R{{P}, {Q}, {Rational(1, 2), Rational(6, 5)}};
        OracleResult o = integrate_disk(R, lambda, 1e-2);
        if (o.diverging) {
            pass = false;
            continue;
        }
        double ratio = o.value / closed;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        pass = pass && ratio >= 1.0 / 50.0 && ratio <= 50.0;
    }
    std::printf("quadratic: %s (ratio range [%.3g, %.3g])\n", pass ? "PASS" : "FAIL", rmin, rmax);
    return pass ? kExitFinite : kExitError;
}

int suite_torus() {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    bool pass = true;
    for (double delta : {0.3, 0.7})
        for (int i = 0; i < 20; ++i) {
            std::vector<cplx> a;
            int J = 1 + static_cast<int>(unit(rng) * 3) % 3;
            for (int j = 0; j < J; ++j) a.emplace_back(unit(rng), unit(rng));
            double alg = theta_denominator_size(a, delta);
            OracleResult o = integrate_torus(a, delta, 1e-2);
            double ratio = o.value / alg;
            pass = pass && ratio >= 0.1 && ratio <= 10.0;
        }
    std::printf("torus: %s\n", pass ? "PASS" : "FAIL");
    return pass ? kExitFinite : kExitError;
}

int suite_sweep() {
    ExponentPair pair{Rational(0), Rational(3, 2)};
    std::vector<std::pair<double, OracleResult>> fam;
    std::vector<double> sweep;
    for (double t : {1e-1, 1e-2, 1e-3, 1e-4}) {
        ComplexPoly Q = ComplexPoly::from_roots({cplx(0.0), cplx(t), cplx(1.0)});
        SizeEstimate e = estimate(ComplexPoly({cplx(1.0)}), Q, pair, 4.0);
        ARPExpr R{{ComplexPoly({cplx(1.0)})}, {Q}, pair};
        fam.emplace_back(e.value, integrate_disk(R, 4.0, 1e-2));
        sweep.push_back(t);
    }
    EquivalenceReport rep = compare(fam, sweep);
    bool pass = std::abs(rep.trend_stat) < 0.3;
    std::printf("sweep: %s (trend=%.3f ratios [%.3g, %.3g])\n", pass ? "PASS" : "FAIL",
                rep.trend_stat, rep.ratio_min, rep.ratio_max);
    return pass ? kExitFinite : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singular-integral size estimator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string p_arg, q_arg, qs_arg, eps_arg = "0", delta_arg = "1", out_path, germ_arg,
                family_arg, fmt = "json";
    double lambda = 1.0, lo = 0.1, hi = 1.9, tol_d = 0.01, r_radius = 1.0, s_gate = 0.5;
    std::uint64_t seed = 1;
    double root_tol = 0.0;
    int d_init = 4, n_samples = 200000;
    long budget = 100000000;
    std::vector<double> mus, alphas{0.1, 0.5, 1.0}, radii{0.3, 0.3}, c_grid;
    std::string mode = "continuity", suite_name;
    double delta_real = std::numeric_limits<double>::quiet_NaN();
    double i_value = std::numeric_limits<double>::quiet_NaN();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--tol", root_tol, "root clustering tolerance (0 = default)");
        cmd->add_option("--format", fmt, "json|csv");
    };

    auto* c_est = app.add_subcommand("estimate", "algebraic size estimate");
    c_est->add_option("--P", p_arg, "numerator polynomial JSON or @file")->required();
    c_est->add_option("--Q", q_arg, "denominator polynomial JSON or @file")->required();
    c_est->add_option("--eps", eps_arg, "epsilon as p/q");
    c_est->add_option("--delta", delta_arg, "delta as p/q");
    c_est->add_option("--lambda", lambda, "disk radius");
    add_common(c_est);

    auto* c_scales = app.add_subcommand("scales", "cluster-scale table of Q's roots");
    c_scales->add_option("--Q", q_arg)->required();
    add_common(c_scales);

    auto* c_fin = app.add_subcommand("finiteness", "exact finiteness verdict");
    c_fin->add_option("--P", p_arg)->required();
    c_fin->add_option("--Q", q_arg)->required();
    c_fin->add_option("--eps", eps_arg);
    c_fin->add_option("--delta", delta_arg);
    add_common(c_fin);

    auto* c_cmp = app.add_subcommand("compare", "estimator vs disk oracles over a family");
    c_cmp->add_option("--family", family_arg, "family spec JSON or @file")->required();
    add_common(c_cmp);

    auto* c_lct = app.add_subcommand("lct", "critical exponent delta_0");
    c_lct->add_option("--germ", germ_arg)->required();
    c_lct->add_option("--lo", lo);
    c_lct->add_option("--hi", hi);
    c_lct->add_option("--tol-delta", tol_d);
    add_common(c_lct);

    auto* c_theta = app.add_subcommand("theta-sample", "grid infimum of theta integrals");
    c_theta->add_option("--P", p_arg)->required();
    c_theta->add_option("--Qs", qs_arg, "JSON array of polynomials")->required();
    c_theta->add_option("--eps", eps_arg);
    c_theta->add_option("--delta", delta_arg);
    c_theta->add_option("--lambda", lambda);
    c_theta->add_option("--d-init", d_init);
    c_theta->add_option("--s-gate", s_gate);
    add_common(c_theta);

    auto* c_reg = app.add_subcommand("regularize", "mu-regularization trace");
    c_reg->add_option("--P", p_arg)->required();
    c_reg->add_option("--Q", q_arg)->required();
    c_reg->add_option("--eps", eps_arg);
    c_reg->add_option("--delta", delta_arg);
    c_reg->add_option("--lambda", lambda);
    c_reg->add_option("--mus", mus, "decreasing mu schedule");
    c_reg->add_option("--budget", budget, "max integrand evaluations");
    add_common(c_reg);

    auto* c_stab = app.add_subcommand("stability", "continuity / perturbation probes");
    c_stab->add_option("--family", family_arg, "germ family JSON or @file")->required();
    c_stab->add_option("--mode", mode, "continuity|perturbation");
    c_stab->add_option("--delta-real", delta_real)->required();
    c_stab->add_option("--radii", radii);
    c_stab->add_option("--c-grid", c_grid);
    add_common(c_stab);

    auto* c_dist = app.add_subcommand("distfn", "sublevel-set volumes + Chebychev bounds");
    c_dist->add_option("--germ", germ_arg)->required();
    c_dist->add_option("--alphas", alphas);
    c_dist->add_option("--r", r_radius);
    c_dist->add_option("--samples", n_samples);
    c_dist->add_option("--delta-real", delta_real);
    c_dist->add_option("--I", i_value, "finite integral value for the bound");
    add_common(c_dist);

    auto* c_suite = app.add_subcommand("suite", "named validation suite");
    c_suite->add_option("name", suite_name, "ratios|quadratic|torus|sweep")->required();

    CLI11_PARSE(app, argc, argv);
    cfg.seed = seed;
    cfg.root_tol = root_tol;
    cfg.lambda = lambda;
    cfg.tol_delta = tol_d;

    try {
        if (app.got_subcommand(c_est)) {
            cfg.command = "estimate";
            std::string ps = load_arg(p_arg), qs = load_arg(q_arg);
            ComplexPoly P = poly_from_json(json::parse(ps));
            ComplexPoly Q = poly_from_json(json::parse(qs));
            ExponentPair pair = parse_pair(eps_arg, delta_arg);
            double tol = root_tol > 0.0 ? root_tol : default_root_tol(Q);
            SizeEstimate e = estimate(P, Q, pair, lambda, tol);
            emit(size_estimate_to_json(e), cfg, ps + qs + eps_arg + delta_arg, out_path);
            return e.infinite() ? kExitInfinite : kExitFinite;
        }
        if (app.got_subcommand(c_scales)) {
            cfg.command = "scales";
            std::string qs = load_arg(q_arg);
            ComplexPoly Q = poly_from_json(json::parse(qs));
            double tol = root_tol > 0.0 ? root_tol : default_root_tol(Q);
            ScaleTable t = scale_table(roots(Q, tol));
            emit(scale_table_to_json(t), cfg, qs, out_path);
            return kExitFinite;
        }
        if (app.got_subcommand(c_fin)) {
            cfg.command = "finiteness";
            std::string ps = load_arg(p_arg), qs = load_arg(q_arg);
            ComplexPoly P = poly_from_json(json::parse(ps));
            ComplexPoly Q = poly_from_json(json::parse(qs));
            bool fin = is_finite(P, Q, parse_pair(eps_arg, delta_arg));
            emit(json{{"finite", fin}}, cfg, ps + qs + eps_arg + delta_arg, out_path);
            return fin ? kExitFinite : kExitInfinite;
        }
        if (app.got_subcommand(c_cmp)) {
            cfg.command = "compare";
            std::string fs = load_arg(family_arg);
            json spec = json::parse(fs);
            ExponentPair pair = parse_pair(spec.value("eps", "0"), spec.value("delta", "1"));
            double lam = spec.value("lambda", 1.0);
            std::vector<std::pair<double, OracleResult>> fam;
            std::vector<double> sweep;
            if (spec.contains("t_values")) {
                // planted-gap sweep Q_t = z (z - t) (z - 1)
                for (double t : spec.at("t_values")) {
                    ComplexPoly Q = ComplexPoly::from_roots({cplx(0.0), cplx(t), cplx(1.0)});
                    ComplexPoly P({cplx(1.0)});
                    SizeEstimate e = estimate(P, Q, pair, lam);
                    ARPExpr R{{P}, {Q}, pair};
                    fam.emplace_back(e.value, integrate_disk(R, lam, 1e-2));
                    sweep.push_back(t);
                }
            } else {
                if (!spec.contains("instances") || spec.at("instances").empty())
                    throw Error("compare: family spec has no instances");
                for (const auto& inst : spec.at("instances")) {
                    ComplexPoly P = poly_from_json(inst.at("P"));
                    ComplexPoly Q = poly_from_json(inst.at("Q"));
                    SizeEstimate e = estimate(P, Q, pair, lam);
                    ARPExpr R{{P}, {Q}, pair};
                    fam.emplace_back(e.value, integrate_disk(R, lam, 1e-2));
                }
            }
            EquivalenceReport rep = compare(fam, sweep);
            emit(equivalence_report_to_json(rep), cfg, fs, out_path);
            if (fmt == "csv" || !out_path.empty()) {
                std::ofstream csv(out_path.empty() ? "compare.csv" : out_path + ".csv");
                csv << equivalence_report_to_csv(rep);
            }
            return kExitFinite;
        }
        if (app.got_subcommand(c_lct)) {
            cfg.command = "lct";
            std::string gs = load_arg(germ_arg);
            Germ g = germ_from_json(json::parse(gs));
            double d0 = critical_exponent(g, {lo, hi}, tol_d);
            emit(json{{"delta_0", d0}}, cfg, gs, out_path);
            return kExitFinite;
        }
        if (app.got_subcommand(c_theta)) {
            cfg.command = "theta-sample";
            std::string ps = load_arg(p_arg), qss = load_arg(qs_arg);
            ComplexPoly P = poly_from_json(json::parse(ps));
            std::vector<ComplexPoly> Qs;
            for (const auto& qj : json::parse(qss)) Qs.push_back(poly_from_json(qj));
            auto [inf_v, grid] =
                sample_theta_integral(P, Qs, parse_pair(eps_arg, delta_arg), lambda, d_init,
                                      s_gate);
            emit(theta_grid_to_json(grid, inf_v), cfg, ps + qss, out_path);
            return std::isinf(inf_v) ? kExitInfinite : kExitFinite;
        }
        if (app.got_subcommand(c_reg)) {
            cfg.command = "regularize";
            std::string ps = load_arg(p_arg), qs = load_arg(q_arg);
            ARPExpr R{{poly_from_json(json::parse(ps))},
                      {poly_from_json(json::parse(qs))},
                      parse_pair(eps_arg, delta_arg)};
            if (mus.empty()) mus = {0.1, 0.05, 0.025, 0.0125, 0.00625};
            RegularizeResult res = regularize_integral(R, mus, lambda, budget);
            json trace = json::array();
            for (auto [mu, v] : res.trace) trace.push_back({mu, v});
            emit(json{{"limit", extended_to_json(res.limit)},
                      {"diverging", res.diverging},
                      {"trace", trace}},
                 cfg, ps + qs, out_path);
            return res.diverging ? kExitInfinite : kExitFinite;
        }
        if (app.got_subcommand(c_stab)) {
            cfg.command = "stability";
            std::string fs = load_arg(family_arg);
            GermFamily fam = germ_family_from_json(json::parse(fs));
            if (mode == "continuity") {
                if (c_grid.empty()) c_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
                ContinuityReport rep =
                    continuity_probe(fam, delta_real, radii, c_grid, 200000, seed);
                json vals = json::array();
                for (std::size_t i = 0; i < rep.c_values.size(); ++i)
                    vals.push_back({rep.c_values[i], extended_to_json(rep.integrals[i])});
                emit(json{{"verdict", rep.pass ? "PASS" : "FAIL"},
                          {"variation_coarse", rep.variation_coarse},
                          {"variation_fine", rep.variation_fine},
                          {"profile", vals}},
                     cfg, fs, out_path);
                return rep.pass ? kExitFinite : kExitError;
            }
            Germ base = fam.at(cplx(0.0));
            PerturbationReport rep = perturbation_probe({base}, delta_real, {0.2, 0.1, 0.05, 0.02},
                                                        4, seed, radii);
            json devs = json::array();
            for (std::size_t i = 0; i < rep.rho_values.size(); ++i)
                devs.push_back({rep.rho_values[i], rep.sup_deviation[i]});
            emit(json{{"verdict", rep.pass ? "PASS" : "FAIL"},
                      {"base_value", rep.base_value},
                      {"deviation", devs}},
                 cfg, fs, out_path);
            return rep.pass ? kExitFinite : kExitError;
        }
        if (app.got_subcommand(c_dist)) {
            cfg.command = "distfn";
            std::string gs = load_arg(germ_arg);
            Germ g = germ_from_json(json::parse(gs));
            auto samples =
                distribution_mu({g}, alphas, r_radius, n_samples, seed, delta_real, i_value);
            json rows = json::array();
            for (const auto& s : samples)
                rows.push_back({{"alpha", s.alpha},
                                {"volume", s.volume},
                                {"stderr", s.stderr_},
                                {"bound", std::isnan(s.bound) ? json(nullptr) : json(s.bound)}});
            emit(rows, cfg, gs, out_path);
            return kExitFinite;
        }
        if (app.got_subcommand(c_suite)) {
            if (suite_name == "ratios") return suite_ratios();
            if (suite_name == "quadratic") return suite_quadratic();
            if (suite_name == "torus") return suite_torus();
            if (suite_name == "sweep") return suite_sweep();
            std::cerr << "unknown suite: " << suite_name << "\n";
            return kExitError;
        }
    } catch (const MixedFinitenessDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

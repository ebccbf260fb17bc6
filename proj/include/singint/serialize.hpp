#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "singint/estimator.hpp"
#include "singint/oracle.hpp"
#include "singint/polynomial.hpp"
#include "singint/sampling.hpp"
#include "singint/scales.hpp"
#include "singint/stability.hpp"

namespace singint {

using json = nlohmann::json;

// Polynomials travel as ascending coefficient lists of [re, im] pairs.
inline json poly_to_json(const ComplexPoly& p) {
    json a = json::array();
    for (const cplx& c : p.coeffs()) a.push_back({c.real(), c.imag()});
    return a;
}

inline ComplexPoly poly_from_json(const json& j) {
    std::vector<cplx> c;
    for (const auto& e : j) {
        if (e.is_number())
            c.emplace_back(e.get<double>(), 0.0);
        else
            c.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return ComplexPoly(std::move(c));
}

inline json complex_to_json(cplx z) { return json{z.real(), z.imag()}; }

// +inf serializes as the string "inf" (JSON has no infinity literal).
inline json extended_to_json(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

inline json size_estimate_to_json(const SizeEstimate& e) {
    json b = json::array();
    for (const auto& c : e.breakdown)
        b.push_back({{"root", complex_to_json(c.root)},
                     {"nu", c.nu},
                     {"k", c.k},
                     {"phi", extended_to_json(c.phi)},
                     {"contribution", extended_to_json(c.contribution)}});
    return json{{"value", extended_to_json(e.value)}, {"lambda", e.lambda}, {"breakdown", b}};
}

inline json scale_table_to_json(const ScaleTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.roots.size(); ++i)
        rows.push_back({{"root", complex_to_json(t.roots[i])}, {"scales", t.scales[i]}});
    return json{{"method", t.method}, {"rows", rows}};
}

inline json oracle_result_to_json(const OracleResult& r) {
    return json{{"value", r.value},          {"stderr", r.stderr_},
                {"diverging", r.diverging},  {"growth_exponent", r.growth_exponent},
                {"scheme", r.scheme},        {"seed", r.seed}};
}

inline json equivalence_report_to_json(const EquivalenceReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"id", s.id},
                           {"algebraic", s.algebraic},
                           {"oracle", s.oracle},
                           {"ratio", s.ratio},
                           {"sweep", s.sweep}});
    return json{{"samples", samples},
                {"ratio_min", r.ratio_min},
                {"ratio_max", r.ratio_max},
                {"trend_stat", r.trend_stat},
                {"joint_infinite", r.joint_infinite}};
}

inline std::string equivalence_report_to_csv(const EquivalenceReport& r) {
    std::ostringstream os;
    os << "instance_id,algebraic,oracle,ratio,sweep_param\n";
    for (const auto& s : r.samples)
        os << s.id << "," << s.algebraic << "," << s.oracle << "," << s.ratio << "," << s.sweep
           << "\n";
    return os.str();
}

inline json theta_grid_to_json(const ThetaGrid& g, double inf_value) {
    json profile = json::array();
    for (std::size_t i = 0; i < g.points.size(); ++i)
        profile.push_back({g.points[i], extended_to_json(g.values[i])});
    return json{{"d", g.d},
                {"inf", extended_to_json(inf_value)},
                {"profile", profile},
                {"stabilized", g.stabilized}};
}

inline json germ_to_json(const Germ& g) {
    json terms = json::array();
    for (const auto& t : g.terms)
        terms.push_back({{"exp", t.exp}, {"coef", complex_to_json(t.coef)}});
    return json{{"n", g.n}, {"terms", terms}};
}

inline Germ germ_from_json(const json& j) {
    Germ g;
    g.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) {
        Germ::Term term;
        term.exp = t.at("exp").get<std::vector<int>>();
        term.coef = cplx(t.at("coef").at(0).get<double>(), t.at("coef").at(1).get<double>());
        if (static_cast<int>(term.exp.size()) != g.n)
            throw Error("germ_from_json: exponent arity mismatch");
        g.terms.push_back(term);
    }
    return g;
}

inline GermFamily germ_family_from_json(const json& j) {
    GermFamily f;
    f.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) {
        GermFamily::Term term;
        term.zexp = t.at("exp").get<std::vector<int>>();
        term.cexp = t.value("cexp", 0);
        term.coef = cplx(t.at("coef").at(0).get<double>(), t.at("coef").at(1).get<double>());
        f.terms.push_back(term);
    }
    return f;
}

// Reproducibility header embedded in every CLI output file.
struct RunConfig {
    std::uint64_t seed = 0;
    double root_tol = 0.0;  // 0: per-input default
    double rel_target = 1e-2;
    double tol_delta = 1e-2;
    double lambda = 1.0;
    std::string command;
};

inline json run_config_to_json(const RunConfig& c) {
    return json{{"seed", c.seed},           {"root_tol", c.root_tol},
                {"rel_target", c.rel_target}, {"tol_delta", c.tol_delta},
                {"lambda", c.lambda},       {"command", c.command}};
}

// FNV-1a content hash of the raw input material, for output headers.
inline std::string content_hash(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace singint

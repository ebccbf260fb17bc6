#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "singint/errors.hpp"
#include "singint/estimator.hpp"
#include "singint/oracle.hpp"
#include "singint/polynomial.hpp"
#include "singint/rational.hpp"

namespace singint {

// Multivariate polynomial germ at 0 in n <= 3 variables, stored as a sparse
// term list. Polynomial truncations stand in for the power series.
struct Germ {
    struct Term {
        std::vector<int> exp;  // length n
        cplx coef;
    };
    int n = 1;
    std::vector<Term> terms;

    cplx operator()(const std::vector<cplx>& z) const {
        cplx acc(0.0);
        for (const auto& t : terms) {
            cplx m = t.coef;
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < t.exp[static_cast<std::size_t>(i)]; ++e)
                    m *= z[static_cast<std::size_t>(i)];
            acc += m;
        }
        return acc;
    }

    double max_coef() const {
        double m = 0.0;
        for (const auto& t : terms) m = std::max(m, std::abs(t.coef));
        return m;
    }

    bool is_zero() const { return max_coef() == 0.0; }

    // The univariate polynomial z_n -> f(z', z_n) at fixed z'.
    ComplexPoly slice_last(const std::vector<cplx>& z_prime) const {
        std::vector<cplx> c;
        for (const auto& t : terms) {
            cplx m = t.coef;
            for (int i = 0; i < n - 1; ++i)
                for (int e = 0; e < t.exp[static_cast<std::size_t>(i)]; ++e)
                    m *= z_prime[static_cast<std::size_t>(i)];
            std::size_t d = static_cast<std::size_t>(t.exp[static_cast<std::size_t>(n - 1)]);
            if (c.size() <= d) c.resize(d + 1, cplx(0.0));
            c[d] += m;
        }
        return ComplexPoly(std::move(c));
    }
};

// One-parameter family of germs (parameter arity 1): terms in (z, c).
struct GermFamily {
    struct Term {
        std::vector<int> zexp;
        int cexp = 0;
        cplx coef;
    };
    int n = 1;
    std::vector<Term> terms;

    Germ at(cplx c) const {
        Germ g;
        g.n = n;
        for (const auto& t : terms) {
            cplx m = t.coef;
            for (int e = 0; e < t.cexp; ++e) m *= c;
            g.terms.push_back({t.zexp, m});
        }
        return g;
    }
};

// Per-slice Weierstrass polynomials along a z' grid.
struct WeierstrassData {
    int degree = 0;
    std::vector<cplx> grid;                  // z' sample points (n = 2)
    std::vector<std::vector<cplx>> polys;    // monic coefficients, ascending
    std::vector<double> residual;            // max |f(z', root)| over the claimed roots
    std::vector<double> gate_norm;           // |||Q(z',Z) - Z^N||| per sample
    double max_coeff_jump = 0.0;             // continuity check between adjacent samples
};

// Minimal total degree carrying a nonzero coefficient; for polynomial germs
// this equals the minimal vanishing order along lines.
inline int vanishing_order_multi(const Germ& f) {
    double scale = f.max_coef();
    if (scale == 0.0) throw ZeroGerm("vanishing_order_multi: zero germ");
    int best = std::numeric_limits<int>::max();
    for (const auto& t : f.terms) {
        if (std::abs(t.coef) <= 1e-14 * scale) continue;
        int d = 0;
        for (int e : t.exp) d += e;
        best = std::min(best, d);
    }
    return best;
}

// Integrability ceiling 2n/N from the lowest vanishing order of the list.
inline Rational delta_upper_bound(const std::vector<Germ>& fs, int n) {
    int N = std::numeric_limits<int>::max();
    for (const auto& f : fs)
        if (!f.is_zero()) N = std::min(N, vanishing_order_multi(f));
    if (N == std::numeric_limits<int>::max()) throw AllZero("delta_upper_bound: all germs zero");
    return Rational(2 * n, N);
}

namespace detail {

// Apply a 2x2 unitary substitution z = U w to a two-variable germ.
inline Germ rotate2(const Germ& f, const std::array<cplx, 4>& u) {
    // Expand (u00 w1 + u01 w2)^a (u10 w1 + u11 w2)^b term by term.
    Germ out;
    out.n = 2;
    std::vector<std::vector<cplx>> acc;  // acc[i][j]: coefficient of w1^i w2^j
    for (const auto& t : f.terms) {
        int a = t.exp[0], b = t.exp[1];
        std::vector<cplx> pa(static_cast<std::size_t>(a) + 1), pb(static_cast<std::size_t>(b) + 1);
        auto binom_row = [](int m, cplx x, cplx y, std::vector<cplx>& row) {
            // row[k] = C(m,k) x^{m-k} y^k
            double c = 1.0;
            for (int k = 0; k <= m; ++k) {
                cplx v(c);
                for (int e = 0; e < m - k; ++e) v *= x;
                for (int e = 0; e < k; ++e) v *= y;
                row[static_cast<std::size_t>(k)] = v;
                c = c * (m - k) / (k + 1.0);
            }
        };
        binom_row(a, u[0], u[1], pa);
        binom_row(b, u[2], u[3], pb);
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                int e1 = (a - i) + (b - j);
                int e2 = i + j;
                if (acc.size() <= static_cast<std::size_t>(e1)) acc.resize(e1 + 1);
                if (acc[static_cast<std::size_t>(e1)].size() <= static_cast<std::size_t>(e2))
                    acc[static_cast<std::size_t>(e1)].resize(e2 + 1, cplx(0.0));
                acc[static_cast<std::size_t>(e1)][static_cast<std::size_t>(e2)] +=
                    t.coef * pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)];
            }
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < acc[i].size(); ++j)
            if (std::abs(acc[i][j]) > 1e-13)
                out.terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, acc[i][j]});
    return out;
}

inline std::array<cplx, 4> random_unitary2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double th = 2.0 * M_PI * unit(rng);
    double ph = 2.0 * M_PI * unit(rng);
    cplx c = std::cos(th), s = std::sin(th) * std::polar(1.0, ph);
    return {c, -std::conj(s), s, std::conj(c)};
}

}  // namespace detail

// Numerical Weierstrass preparation for n = 2: per-slice root finding on a
// circle of z1 samples, monic assembly, residual and gate norms, with a
// seeded coordinate rotation retried when the central slice degenerates.
inline WeierstrassData weierstrass_prepare(Germ f, std::pair<double, double> radii, int grid_size,
                                           std::uint64_t seed = 12345) {
    if (f.n != 2) throw Error("weierstrass_prepare: n = 2 only");
    std::mt19937_64 rng(seed);
    int attempts = 0;
    ComplexPoly central = f.slice_last({cplx(0.0)});
    while ((central.is_zero() || central.degree() < 1 ||
            std::abs(central.coeff(0)) > 1e-12 * (1.0 + central.coeff_norm())) &&
           attempts < 5) {
        // f(0, z_n) identically zero or not vanishing at z_n = 0: rotate.
        if (!central.is_zero() && std::abs(central(cplx(0.0))) > 1e-12 * (1.0 + central.coeff_norm()))
            throw Error("weierstrass_prepare: f(0) != 0, not a germ at a zero");
        f = detail::rotate2(f, detail::random_unitary2(rng));
        central = f.slice_last({cplx(0.0)});
        ++attempts;
    }
    if (central.is_zero() || central.degree() < 1)
        throw NoFiniteOrder("weierstrass_prepare: no finite vanishing order after rotations");
    int N = vanishing_order(central, cplx(0.0));
    if (N < 1) throw Error("weierstrass_prepare: f(0, z_n) does not vanish at 0");

    auto build = [&](double r1, double r2, WeierstrassData& out) {
        out = WeierstrassData{};
        out.degree = N;
        for (int j = 0; j < grid_size; ++j) {
            cplx z1 = std::polar(r1 / 2.0, 2.0 * M_PI * j / grid_size);
            ComplexPoly q = f.slice_last({z1});
            if (q.is_zero() || q.degree() < 1) return false;
            RootSet s = roots(q, default_root_tol(q));
            std::vector<cplx> inside;
            for (const cplx& root : s.expanded())
                if (std::abs(root) < r2) inside.push_back(root);
            if (static_cast<int>(inside.size()) != N) return false;
            ComplexPoly Q = ComplexPoly::from_roots(inside);
            double res = 0.0;
            for (const cplx& root : inside) res = std::max(res, std::abs(f({z1, root})));
            std::vector<cplx> zn(static_cast<std::size_t>(N) + 1, cplx(0.0));
            zn.back() = cplx(1.0);
            out.grid.push_back(z1);
            out.polys.push_back(Q.coeffs());
            out.residual.push_back(res);
            out.gate_norm.push_back((Q - ComplexPoly(zn)).coeff_norm());
        }
        for (std::size_t j = 0; j < out.polys.size(); ++j) {
            const auto& a = out.polys[j];
            const auto& b = out.polys[(j + 1) % out.polys.size()];
            double jump = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) jump += std::abs(a[k] - b[k]);
            out.max_coeff_jump = std::max(out.max_coeff_jump, jump);
        }
        return true;
    };

    WeierstrassData out;
    if (build(radii.first, radii.second, out)) return out;
    // roots grow sublinearly in r1 (e.g. like sqrt), so shrink r1 only
    if (build(radii.first / 4.0, radii.second, out)) return out;
    throw RootCountMismatch("weierstrass_prepare: roots escape |z_n| < r_n on the grid");
}

// Iterated 2D estimate with the dyadic profile and a power-law finiteness
// verdict (abstention band +-0.05 around the 2D integrability threshold).
struct IteratedResult {
    double value = 0.0;  // +inf when the verdict is infinite
    std::string verdict;  // "finite" | "infinite" | "abstain"
    double profile_exponent = 0.0;  // fitted s in E(t) ~ t^s
    std::vector<std::pair<double, double>> profile;  // (t, mean inner integral)
};

namespace detail {

// Nearest nondegenerate rational to a double exponent for the estimator.
inline Rational rationalize_exponent(double x, int N) {
    const std::int64_t den = 720720;  // lcm(1..13): clears all small-denominator lines
    Rational r(static_cast<std::int64_t>(std::llround(x * den)), den);
    ExponentPair pair{Rational(0), r};
    for (int tries = 0; tries < 8 && !nondegenerate(pair, 0, N); ++tries) {
        r = r + Rational(1, 10000019);  // prime denominator, off every small line
        pair.delta = r;
    }
    return r;
}

// Inner pure-power integral of the slice over a disk, retrying with an
// enlarged domain when slice roots fall outside the half disk.
inline double inner_slice_size(const ComplexPoly& q, double delta, double r2) {
    if (q.is_zero()) return kInf;
    if (q.degree() == 0) {
        double c = std::abs(q.coeff(0));
        return c == 0.0 ? kInf : std::pow(c, -delta) * M_PI * r2 * r2;
    }
    Rational d = rationalize_exponent(delta, q.degree());
    double lambda = 2.0 * r2;
    for (int tries = 0; tries < 6; ++tries) {
        try {
            return estimate_pure(q, d, lambda).value;
        } catch (const RootsOutsideHalfDisk&) {
            lambda *= 2.0;
        }
    }
    throw RootsOutsideHalfDisk("inner_slice_size: slice roots far outside the domain");
}

}  // namespace detail

inline IteratedResult iterated_estimate_2d(const Germ& f, double delta,
                                           std::pair<double, double> radii, int grid_size) {
    if (f.n != 2) throw Error("iterated_estimate_2d: n = 2 only");
    Rational ceiling = delta_upper_bound({f}, 2);
    if (!(delta < ceiling.value()))
        throw RangeViolation("iterated_estimate_2d: delta >= 2n/N ceiling");
    double r1 = radii.first, r2 = radii.second;

    IteratedResult out;
    const int kLevels = 14;
    int angles = std::max(2, grid_size / kLevels);
    bool any_inf = false;
    for (int l = 0; l < kLevels; ++l) {
        double t = r1 * std::pow(2.0, -l) * 0.75;  // representative annulus radius
        double acc = 0.0;
        int finite_ct = 0;
        for (int a = 0; a < angles; ++a) {
            cplx z1 = std::polar(t, 2.0 * M_PI * (a + 0.31) / angles);
            double v = detail::inner_slice_size(f.slice_last({z1}), delta, r2);
            if (std::isinf(v)) {
                any_inf = true;
            } else {
                acc += v;
                ++finite_ct;
            }
        }
        out.profile.emplace_back(t, finite_ct > 0 ? acc / finite_ct : kInf);
    }

    // fit E(t) ~ t^s over the deepest levels
    std::vector<double> lx, ly;
    for (std::size_t i = out.profile.size() - 8; i < out.profile.size(); ++i) {
        if (!std::isfinite(out.profile[i].second) || out.profile[i].second <= 0.0) continue;
        lx.push_back(std::log(out.profile[i].first));
        ly.push_back(std::log(out.profile[i].second));
    }
    double s = lx.size() >= 4 ? detail::ls_slope(lx, ly) : 0.0;
    out.profile_exponent = s;

    if (any_inf || s < -2.0 - 0.05) {
        out.verdict = "infinite";
        out.value = kInf;
        return out;
    }
    if (s <= -2.0 + 0.05) {
        out.verdict = "abstain";
        out.value = kInf;
        return out;
    }
    out.verdict = "finite";
    // sum E(t) over dyadic annuli of area pi r1^2 (3/4) 4^{-l}, plus the
    // geometric tail below the deepest level
    double total = 0.0;
    for (int l = 0; l < kLevels; ++l) {
        double area = M_PI * r1 * r1 * 0.75 * std::pow(4.0, -l);
        double e = out.profile[static_cast<std::size_t>(l)].second;
        if (std::isfinite(e)) total += e * area;
    }
    double q = std::pow(2.0, -(s + 2.0));  // annulus contributions scale by t^{s+2}
    if (q < 1.0) {
        double last = out.profile.back().second * M_PI * r1 * r1 * 0.75 * std::pow(4.0, -(kLevels - 1));
        total += last * q / (1.0 - q);
    }
    out.value = total;
    return out;
}

// Critical exponent delta_0 = sup { delta : the integral is finite }.
// n = 1 with a pure power of the coordinate is answered exactly; otherwise
// bisection on the finiteness verdict.
inline double critical_exponent(const Germ& f, std::pair<double, double> bracket, double tol_d) {
    if (f.is_zero()) throw ZeroGerm("critical_exponent: zero germ");
    auto finite_at = [&](double delta) -> bool {
        if (f.n == 1) {
            ComplexPoly q = f.slice_last({});
            Rational d = detail::rationalize_exponent(delta, std::max(q.degree(), 1));
            for (int tries = 0; tries < 5; ++tries) {
                try {
                    return is_finite(ComplexPoly({cplx(1.0)}), q, ExponentPair{Rational(0), d});
                } catch (const Degenerate&) {
                    d = d + Rational(1, 10000019);
                }
            }
            throw Degenerate("critical_exponent: could not avoid the degenerate line");
        }
        if (f.n == 2) {
            try {
                IteratedResult r = iterated_estimate_2d(f, delta, {0.3, 0.3}, 32);
                return r.profile_exponent > -2.0;  // fit sign decides inside the bisection
            } catch (const RangeViolation&) {
                return false;  // delta >= 2n/N: divergent by the vanishing-order bound
            }
        }
        throw CaseNotCovered("critical_exponent: n = 3 not supported");
    };

    if (f.n == 1) {
        // exact shortcut: delta_0 = 2 / (multiplicity at 0)
        ComplexPoly q = f.slice_last({});
        int m = vanishing_order(q, cplx(0.0));
        if (m >= 1) return 2.0 / m;
        return kInf;  // q(0) != 0: no singularity at the origin
    }

    double lo = bracket.first, hi = bracket.second;
    if (!finite_at(lo) || finite_at(hi))
        throw BracketInvalid("critical_exponent: bracket endpoints have the wrong verdicts");
    while (hi - lo > tol_d) {
        double mid = 0.5 * (lo + hi);
        if (finite_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Continuity probe along a one-parameter family: I(c) on the grid and on
// its midpoint refinement; PASS when everything is finite and the maximal
// adjacent relative variation shrinks under refinement.
struct ContinuityReport {
    std::vector<double> c_values;
    std::vector<double> integrals;
    double variation_coarse = 0.0;
    double variation_fine = 0.0;
    bool pass = false;
};

inline ContinuityReport continuity_probe(const GermFamily& family, double delta,
                                         const std::vector<double>& radii,
                                         const std::vector<double>& c_grid, int oracle_budget,
                                         std::uint64_t seed = 99) {
    int n = family.n;
    auto I_of = [&](double c) -> double {
        Germ g = family.at(cplx(c));
        if (g.is_zero()) return kInf;
        if (n == 1) {
            ComplexPoly q = g.slice_last({});
            if (q.degree() < 1) {
                double a = std::abs(q.coeff(0));
                return a == 0.0 ? kInf
                               : std::pow(a, -delta) * M_PI * radii[0] * radii[0];
            }
            return detail::inner_slice_size(q, delta, radii[0]);
        }
        if (n == 2) {
            IteratedResult r = iterated_estimate_2d(g, delta, {radii[0], radii[1]}, 32);
            return r.verdict == "finite" ? r.value : kInf;
        }
        // n = 3: Monte Carlo with common random numbers across the c grid
        auto sum_sq = [&](const std::vector<cplx>& z) { return std::norm(g(z)); };
        OracleResult r = integrate_polydisk_mc(sum_sq, delta, radii,
                                               std::min(oracle_budget, 200000), seed);
        return r.diverging ? kInf : r.value;
    };

    double base = I_of(0.0);
    if (std::isinf(base)) throw BaseDiverges("continuity_probe: I(0) infinite");

    auto run = [&](const std::vector<double>& grid, ContinuityReport& rep, double& variation) {
        std::vector<double> vals;
        for (double c : grid) vals.push_back(I_of(c));
        variation = 0.0;
        bool all_finite = true;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            if (!std::isfinite(vals[i]) || !std::isfinite(vals[i + 1])) {
                all_finite = false;
                continue;
            }
            variation = std::max(variation, std::abs(vals[i + 1] - vals[i]) /
                                                std::max(vals[i], 1e-300));
        }
        rep.c_values = grid;
        rep.integrals = vals;
        return all_finite;
    };

    ContinuityReport rep;
    bool ok_coarse = run(c_grid, rep, rep.variation_coarse);
    std::vector<double> fine;
    for (std::size_t i = 0; i + 1 < c_grid.size(); ++i) {
        fine.push_back(c_grid[i]);
        fine.push_back(0.5 * (c_grid[i] + c_grid[i + 1]));
    }
    fine.push_back(c_grid.back());
    ContinuityReport rep_fine;
    bool ok_fine = run(fine, rep_fine, rep.variation_fine);
    rep.c_values = rep_fine.c_values;
    rep.integrals = rep_fine.integrals;
    // refinement halves the spacing, so a continuous profile roughly halves
    // the adjacent variation; require a strict decrease with slack
    rep.pass = ok_coarse && ok_fine &&
               (rep.variation_fine <= 0.75 * rep.variation_coarse + 1e-9);
    return rep;
}

// Random-perturbation probe for continuity of f -> I(f).
struct PerturbationReport {
    std::vector<double> rho_values;
    std::vector<double> sup_deviation;  // per rho, over the random perturbations
    double base_value = 0.0;
    bool pass = false;
};

inline PerturbationReport perturbation_probe(const std::vector<Germ>& fs, double delta,
                                             const std::vector<double>& rho_grid,
                                             int n_perturbations, std::uint64_t seed,
                                             const std::vector<double>& radii) {
    if (fs.empty()) throw AllZero("perturbation_probe: empty germ list");
    int n = fs.front().n;
    if (n > 3) throw CaseNotCovered("perturbation_probe: n > 3");
    if (n == 3) {
        Rational bound = delta_upper_bound(fs, 3);
        // n = 3 coverage stops at delta < 4/N = (2/3)*(2n/N)
        if (!(delta < bound.value() * 2.0 / 3.0))
            throw CaseNotCovered("perturbation_probe: n = 3 with delta >= 4/N is open");
    }
    int max_deg = 1;
    for (const auto& f : fs)
        for (const auto& t : f.terms) {
            int d = 0;
            for (int e : t.exp) d += e;
            max_deg = std::max(max_deg, d);
        }

    auto I_of = [&](const std::vector<Germ>& gs) {
        auto sum_sq = [&](const std::vector<cplx>& z) {
            double s = 0.0;
            for (const auto& g : gs) s += std::norm(g(z));
            return s;
        };
        OracleResult r = integrate_polydisk_mc(sum_sq, delta, radii, 120000, seed);
        return r.diverging ? kInf : r.value;
    };

    PerturbationReport rep;
    rep.base_value = I_of(fs);
    if (std::isinf(rep.base_value)) throw BaseDiverges("perturbation_probe: I(f) infinite");

    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // exponent list up to degree max_deg + 1
    std::vector<std::vector<int>> exps;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto enumerate = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            exps.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    enumerate(enumerate, 0, max_deg + 1);

    for (double rho : rho_grid) {
        double sup_dev = 0.0;
        for (int t = 0; t < n_perturbations; ++t) {
            std::vector<Germ> gs = fs;
            double scale = rho / static_cast<double>(exps.size());
            Germ pert;
            pert.n = n;
            for (const auto& ex : exps) {
                cplx c = std::polar(scale * unit(rng), 2.0 * M_PI * unit(rng));
                pert.terms.push_back({ex, c});
            }
            for (auto& tm : pert.terms) gs.front().terms.push_back(tm);
            double v = I_of(gs);
            double dev = std::isinf(v) ? kInf
                                       : std::abs(v - rep.base_value) / rep.base_value;
            sup_dev = std::max(sup_dev, dev);
        }
        rep.rho_values.push_back(rho);
        rep.sup_deviation.push_back(sup_dev);
    }
    // deviations must shrink from the largest to the smallest rho
    double first = rep.sup_deviation.front(), last = rep.sup_deviation.back();
    rep.pass = std::isfinite(last) && (last <= 0.5 * first + 0.05);
    return rep;
}

// Sublevel-set volumes mu_f(alpha, r) with the alpha^delta * I Chebychev
// bound attached when a finite I is supplied.
struct DistributionSample {
    double alpha = 0.0;
    double volume = 0.0;
    double stderr_ = 0.0;
    double bound = std::numeric_limits<double>::quiet_NaN();  // alpha^delta * I
};

inline std::vector<DistributionSample> distribution_mu(
    const std::vector<Germ>& fs, const std::vector<double>& alphas, double r, int n_samples,
    std::uint64_t seed, double delta = std::numeric_limits<double>::quiet_NaN(),
    double I_value = std::numeric_limits<double>::quiet_NaN()) {
    if (fs.empty()) throw AllZero("distribution_mu: empty germ list");
    int n = fs.front().n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double vol = 1.0;
    for (int i = 0; i < n; ++i) vol *= M_PI * r * r;

    // one sample pass shared by every alpha (common random numbers)
    std::vector<double> magnitudes(static_cast<std::size_t>(n_samples));
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n_samples; ++i) {
        for (int j = 0; j < n; ++j)
            z[static_cast<std::size_t>(j)] =
                std::polar(r * std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng));
        double s = 0.0;
        for (const auto& f : fs) s += std::norm(f(z));
        magnitudes[static_cast<std::size_t>(i)] = std::sqrt(s);
    }

    std::vector<DistributionSample> out;
    for (double alpha : alphas) {
        int hits = 0;
        for (double m : magnitudes)
            if (m < alpha) ++hits;
        double p = static_cast<double>(hits) / n_samples;
        DistributionSample s;
        s.alpha = alpha;
        s.volume = vol * p;
        s.stderr_ = vol * std::sqrt(std::max(p * (1.0 - p), 1e-12) / n_samples);
        if (std::isfinite(delta) && std::isfinite(I_value))
            s.bound = std::pow(alpha, delta) * I_value;
        out.push_back(s);
    }
    return out;
}

}  // namespace singint

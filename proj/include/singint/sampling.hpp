#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "singint/arp.hpp"
#include "singint/errors.hpp"
#include "singint/estimator.hpp"
#include "singint/oracle.hpp"
#include "singint/polynomial.hpp"

namespace singint {

// Lattice {k/d} theta grid with the inner-integral profile attached.
struct ThetaGrid {
    int d = 0;
    std::vector<std::vector<double>> points;  // each of length J (theta_1 fixed to 0)
    std::vector<double> values;               // inner integral per grid point
    bool stabilized = false;
};

struct RegularizeResult {
    double limit = 0.0;
    bool diverging = false;
    std::vector<std::pair<double, double>> trace;  // (mu, value)
};

namespace detail {

// Bounded-integrand polar quadrature over B_Lambda, graded around the given
// centers (same cell layout as the disk oracle, lighter settings: the
// callers only integrate regularized or summed denominators, which are
// bounded). Returns the value and adds the evaluation count to `evals`.
inline double polar_integral(const std::function<double(cplx)>& f, std::vector<cplx> centers,
                             double lambda, long& evals, int m = 256, int octaves = 40) {
    if (centers.empty()) centers.push_back(cplx(0.0));
    const double ln2 = std::log(2.0);
    double total = 0.0;
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        cplx alpha = centers[ci];
        double r_out = lambda + std::abs(alpha);
        for (int k = 0; k < octaves; ++k) {
            double t_hi = std::log(r_out) - k * ln2;
            for (int g = 0; g < 4; ++g) {
                double t = t_hi - ln2 * 0.5 * (1.0 - kGL4x[g]);
                double r = std::exp(t);
                double wr = kGL4w[g] * (ln2 / 2.0) * r * r;
                for (int a = 0; a < m; ++a) {
                    double th = 2.0 * M_PI * (a + 0.5) / m;
                    cplx z = alpha + std::polar(r, th);
                    if (std::abs(z) > lambda) continue;
                    bool mine = true;
                    for (std::size_t cj = 0; cj < centers.size(); ++cj) {
                        if (cj == ci) continue;
                        double dj = std::abs(z - centers[cj]);
                        if (dj < r || (dj == r && cj < ci)) {
                            mine = false;
                            break;
                        }
                    }
                    if (!mine) continue;
                    ++evals;
                    double v = f(z);
                    if (std::isfinite(v)) total += v * wr * (2.0 * M_PI / m);
                }
            }
        }
    }
    return total;
}

}  // namespace detail

// mu-regularization trace: integrals of
//   (sum |P_i|^2)^{eps/2} / ((sum |Q_j|) + mu)^delta
// over B_Lambda along a decreasing mu schedule. The trace must be
// nondecreasing (monotone convergence); the limit is the last value unless
// the values keep growing as a power of mu, which reads as divergence.
inline RegularizeResult regularize_integral(const ARPExpr& R, const std::vector<double>& mus,
                                            double lambda, long oracle_budget) {
    for (std::size_t i = 0; i + 1 < mus.size(); ++i)
        if (!(mus[i] > mus[i + 1]) || !(mus[i + 1] > 0.0))
            throw Error("regularize_integral: mu schedule must strictly decrease to 0");
    double root_tol = 1e-9;
    for (const auto& q : R.denominator_terms) root_tol = std::max(root_tol, default_root_tol(q));
    std::vector<cplx> centers = detail::denominator_centers(R, root_tol);

    RegularizeResult out;
    long evals = 0;
    double eps = R.pair.eps.value(), delta = R.pair.delta.value();
    for (double mu : mus) {
        auto f = [&](cplx z) {
            double num2 = 0.0, den = 0.0;
            for (const auto& p : R.numerator_terms) num2 += std::norm(p(z));
            for (const auto& q : R.denominator_terms) den += std::abs(q(z));
            if (R.denominator_terms.empty()) den = 1.0;
            return std::pow(num2, eps / 2.0) / std::pow(den + mu, delta);
        };
        double v = detail::polar_integral(f, centers, lambda, evals);
        if (!out.trace.empty() && v < out.trace.back().second * (1.0 - 1e-6))
            throw Error("regularize_integral: trace decreased as mu decreased");
        out.trace.emplace_back(mu, v);
        if (evals > oracle_budget)
            throw OracleBudgetExhausted("regularize_integral: evaluation budget exhausted");
    }
    // power-law fit of value against mu over the final step of the schedule:
    // a convergent trace flattens there (the early coarse-mu points still
    // carry the transient and would bias a longer fit), while polynomial
    // divergence keeps the tail slope at -s
    std::vector<double> lx, ly;
    for (std::size_t i = out.trace.size() >= 2 ? out.trace.size() - 2 : 0; i < out.trace.size();
         ++i) {
        lx.push_back(std::log(out.trace[i].first));
        ly.push_back(std::log(std::max(out.trace[i].second, 1e-300)));
    }
    double slope = detail::ls_slope(lx, ly);
    if (slope < -0.05) {
        out.diverging = true;
        out.limit = kInf;
    } else {
        out.limit = out.trace.back().second;
    }
    return out;
}

// Inner theta integral int_{B_Lambda} |P|^eps / |sum Q_j e^{2 pi i th_j}|^delta dV
// at one theta, through the estimator when the combined polynomial has
// simple roots in the half disk, through the disk oracle otherwise.
inline double theta_inner_integral(const ComplexPoly& P, const std::vector<ComplexPoly>& Qs,
                                   const ExponentPair& pair, double lambda,
                                   const std::vector<double>& theta) {
    ComplexPoly q_theta;
    for (std::size_t j = 0; j < Qs.size(); ++j)
        q_theta = q_theta + Qs[j] * std::polar(1.0, 2.0 * M_PI * theta[j]);
    if (q_theta.is_zero()) return kInf;
    try {
        return estimate(P, q_theta, pair, lambda).value;
    } catch (const Error&) {
        ARPExpr R{{P}, {q_theta}, pair};
        OracleResult r = integrate_disk(R, lambda, 1e-2);
        return r.diverging ? kInf : r.value;
    }
}

// Lower-bound side of the sampling comparison: the integral with the
// pointwise-larger denominator sum |Q_1| + ... + |Q_J|.
inline double sum_denominator_integral(const ComplexPoly& P, const std::vector<ComplexPoly>& Qs,
                                       const ExponentPair& pair, double lambda) {
    std::vector<cplx> centers;
    for (const auto& q : Qs)
        if (!q.is_zero() && q.degree() >= 1)
            for (const auto& e : roots(q, default_root_tol(q)).entries)
                centers.push_back(e.location);
    double eps = pair.eps.value(), delta = pair.delta.value();
    auto f = [&](cplx z) {
        double den = 0.0;
        for (const auto& q : Qs) den += std::abs(q(z));
        if (den == 0.0) return 0.0;
        return std::pow(std::abs(P(z)), eps) / std::pow(den, delta);
    };
    long evals = 0;
    return detail::polar_integral(f, centers, lambda, evals);
}

// Grid infimum over {d theta = 0} = {k/d}^J with d doubled from d_init
// until the inf moves by < 10%. theta_1 is rotated to 0 (a common phase
// does not change |sum Q_j e^{2 pi i theta_j}|). delta >= 1 is first
// reduced by Q_j -> Q_j^A, delta -> delta/A with A = ceil(delta) + 1.
inline std::pair<double, ThetaGrid> sample_theta_integral(const ComplexPoly& P,
                                                          std::vector<ComplexPoly> Qs,
                                                          ExponentPair pair, double lambda,
                                                          int d_init, double s_gate = 0.5) {
    std::size_t J = Qs.size();
    if (J == 0) throw Error("sample_theta_integral: empty denominator list");
    if (pair.delta >= Rational(1)) {
        std::int64_t A = pair.delta.num() / pair.delta.den() + 2;  // ceil(delta) + 1 for delta >= 1
        for (auto& q : Qs) q = q.pow(static_cast<int>(A));
        pair.delta = pair.delta / Rational(A);
    }
    // Coefficient-norm gate on the leading denominator term.
    {
        int n1 = Qs[0].degree();
        std::vector<cplx> zn(static_cast<std::size_t>(n1) + 1, cplx(0.0));
        zn.back() = cplx(1.0);
        if ((Qs[0] - ComplexPoly(zn)).coeff_norm() >= s_gate / (2.0 * static_cast<double>(J)))
            throw NormConditionViolated("sample_theta_integral: |||Q_1 - Z^N||| >= s/(2J)");
    }

    auto grid_inf = [&](int d, ThetaGrid& grid) {
        grid = ThetaGrid{};
        grid.d = d;
        double inf = kInf;
        std::vector<int> idx(J - 1, 0);
        while (true) {
            std::vector<double> theta(J, 0.0);
            for (std::size_t j = 1; j < J; ++j)
                theta[j] = static_cast<double>(idx[j - 1]) / d;
            double v = theta_inner_integral(P, Qs, pair, lambda, theta);
            grid.points.push_back(theta);
            grid.values.push_back(v);
            inf = std::min(inf, v);
            // odometer over the J-1 free coordinates; wrap-around ends the scan
            std::size_t j = 0;
            while (j < J - 1 && ++idx[j] == d) idx[j++] = 0;
            if (j == J - 1) break;  // wrapped (or J == 1: single point)
        }
        return inf;
    };

    ThetaGrid grid;
    int d = std::max(1, d_init);
    double inf = grid_inf(d, grid);
    const int kDCap = 1 << 12;
    while (d < kDCap) {
        ThetaGrid next_grid;
        int next_d = 2 * d;
        double next_inf = grid_inf(next_d, next_grid);
        double prev = inf;
        d = next_d;
        inf = next_inf;
        grid = std::move(next_grid);
        if (std::isinf(prev) && std::isinf(next_inf)) {
            grid.stabilized = true;  // agreeing infinite infs under doubling
            return {inf, grid};
        }
        if (std::isfinite(next_inf) &&
            std::abs(next_inf - prev) < 0.10 * std::max(next_inf, 1e-300)) {
            grid.stabilized = true;
            return {inf, grid};
        }
    }
    if (!grid.stabilized) throw NoStabilization("sample_theta_integral: d cap reached");
    return {inf, grid};
}

}  // namespace singint

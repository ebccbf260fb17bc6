#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "singint/errors.hpp"
#include "singint/polynomial.hpp"
#include "singint/rational.hpp"
#include "singint/scales.hpp"

namespace singint {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Right-hand side of the cluster-scale size formula, with the per-(root,
// nu, k) contributions kept for diagnostics and the dilation-law checks.
struct SizeEstimate {
    double value = 0.0;  // +inf allowed
    double lambda = 1.0;
    struct Contribution {
        cplx root;
        int nu;
        int k;
        double phi;
        double contribution;
    };
    std::vector<Contribution> breakdown;

    bool infinite() const { return std::isinf(value); }
};

// True iff nu*eps + 2 - (N-k)*delta != 0 for all 0 <= nu <= M, 0 <= k <= N.
// Exact rational arithmetic; the excluded lines are where the size formulas
// would need log corrections.
inline bool nondegenerate(const ExponentPair& pair, int M, int N) {
    for (int nu = 0; nu <= M; ++nu)
        for (int k = 0; k <= N; ++k) {
            Rational lhs = Rational(nu) * pair.eps + Rational(2) - Rational(N - k) * pair.delta;
            if (lhs.is_zero()) return false;
        }
    return true;
}

// The index k_nu: -1 if nu*eps + 2 > N*delta, else the unique k with
// (N-k-1)*delta < nu*eps + 2 < (N-k)*delta.
inline int k_index(int nu, const ExponentPair& pair, int N) {
    Rational t = Rational(nu) * pair.eps + Rational(2);
    if (t > Rational(N) * pair.delta) return -1;
    for (int k = 0; k <= N - 1; ++k) {
        Rational lo = Rational(N - k - 1) * pair.delta;
        Rational hi = Rational(N - k) * pair.delta;
        if (t == lo || t == hi) throw Degenerate("k_index: exponent pair on an excluded line");
        if (lo < t && t < hi) return k;
    }
    throw Degenerate("k_index: exponent pair on an excluded line");
}

// Phi_{nu,k}(alpha) from the local scale row. Zero scales with positive
// exponents give Phi = 0, which the callers turn into an infinite
// contribution on the reciprocal path.
inline double phi(int nu, int k, const std::vector<double>& scales, double lambda,
                  const ExponentPair& pair) {
    int N = static_cast<int>(scales.size());
    double eps = pair.eps.value(), delta = pair.delta.value();
    if (k < 0) return std::pow(lambda, N * delta - (nu * eps + 2.0));
    double e = (N - k) * delta - (nu * eps + 2.0);
    double base = scales[static_cast<std::size_t>(k)];
    double v = (base == 0.0 && e > 0.0) ? 0.0 : std::pow(base, e);
    for (int i = 0; i < k; ++i) v *= std::pow(scales[static_cast<std::size_t>(i)], delta);
    return v;
}

namespace detail {

inline double rpow(double x, double e) {
    if (x == 0.0) {
        if (e > 0.0) return 0.0;
        if (e < 0.0) return kInf;
        return 1.0;
    }
    return std::pow(x, e);
}

// nu values at alpha where P^(nu)(alpha) is nonzero under relative Taylor
// thresholding, paired with the actual derivative magnitude.
inline std::vector<std::pair<int, double>> nonzero_derivative_orders(const ComplexPoly& p,
                                                                    cplx alpha, double tol) {
    std::vector<cplx> t = p.taylor_at(alpha);
    double scale = 0.0;
    for (const cplx& x : t) scale = std::max(scale, std::abs(x));
    std::vector<std::pair<int, double>> out;
    double fact = 1.0;
    for (std::size_t nu = 0; nu < t.size(); ++nu) {
        if (nu > 0) fact *= static_cast<double>(nu);
        if (std::abs(t[nu]) > tol * scale) out.emplace_back(static_cast<int>(nu),
                                                           std::abs(t[nu]) * fact);
    }
    return out;
}

}  // namespace detail

// Main size estimate: sum over roots alpha of Q and derivative orders nu
// with P^(nu)(alpha) != 0 of |P^(nu)(alpha)|^eps / Phi_{nu,k_nu}(alpha).
// Q is normalized to monic internally (value adjusted by |lead|^{-delta});
// all roots must lie in the half disk B_{Lambda/2}.
inline SizeEstimate estimate(const ComplexPoly& P, const ComplexPoly& Q, const ExponentPair& pair,
                             double lambda, double tol, double deriv_tol = 1e-8) {
    SizeEstimate out;
    out.lambda = lambda;
    if (P.is_zero()) return out;  // documented edge: value 0, not an error

    double eps = pair.eps.value(), delta = pair.delta.value();
    if (Q.degree() == 0) {
        // Constant-denominator shortcut; never reaches the root finder.
        double acc = 0.0;
        for (auto [nu, mag] : detail::nonzero_derivative_orders(P, cplx(0.0), deriv_tol))
            acc += std::pow(mag, eps) * std::pow(lambda, nu * eps + 2.0);
        out.value = acc / std::pow(std::abs(Q.leading()), delta);
        return out;
    }

    int M = P.degree();
    int N = Q.degree();
    if (!nondegenerate(pair, M, N))
        throw DegenerateExponents("estimate: (eps, delta) on an excluded line");

    RootSet s = roots(Q, tol);
    for (const auto& e : s.entries)
        if (std::abs(e.location) > lambda / 2.0 + 1e-9)
            throw RootsOutsideHalfDisk("estimate: root outside B_{Lambda/2}");

    ScaleTable table = scale_table(s);
    double lead_corr = std::pow(std::abs(Q.leading()), -delta);
    double total = 0.0;
    for (std::size_t ri = 0; ri < table.roots.size(); ++ri) {
        const auto& row = table.scales[ri];
        for (auto [nu, mag] : detail::nonzero_derivative_orders(P, table.roots[ri], deriv_tol)) {
            int k = k_index(nu, pair, N);
            double ph = phi(nu, k, row, lambda, pair);
            double contrib = (ph == 0.0) ? kInf : std::pow(mag, eps) / ph * lead_corr;
            out.breakdown.push_back({table.roots[ri], nu, k, ph, contrib});
            total += contrib;
        }
    }
    out.value = total;
    return out;
}

inline SizeEstimate estimate(const ComplexPoly& P, const ComplexPoly& Q, const ExponentPair& pair,
                             double lambda) {
    return estimate(P, Q, pair, lambda, default_root_tol(Q));
}

// Exact finiteness: finite iff m(alpha)*delta - nu(alpha)*eps < 2 for every
// distinct root alpha, with m the clustered multiplicity and nu the
// vanishing order of P at alpha. Equality raises Degenerate.
inline bool is_finite(const ComplexPoly& P, const ComplexPoly& Q, const ExponentPair& pair,
                      double tol) {
    if (P.is_zero()) throw ZeroPolynomial("is_finite: P is identically zero");
    if (Q.degree() == 0) return true;
    RootSet s = roots(Q, tol);
    bool finite = true;
    for (const auto& e : s.entries) {
        int nu = vanishing_order(P, e.location);
        Rational slack = Rational(2) - Rational(e.multiplicity) * pair.delta +
                         Rational(nu) * pair.eps;
        if (slack.is_zero()) throw Degenerate("is_finite: boundary case m*delta - nu*eps = 2");
        if (slack < Rational(0)) finite = false;
    }
    return finite;
}

inline bool is_finite(const ComplexPoly& P, const ComplexPoly& Q, const ExponentPair& pair) {
    return is_finite(P, Q, pair, default_root_tol(Q));
}

// Pure-denominator form: Lambda^{2-N*delta} when N*delta < 2, otherwise the
// per-root sum with the single index k_0 from (N-k_0-1)delta < 2 < (N-k_0)delta.
inline SizeEstimate estimate_pure(const ComplexPoly& Q, const Rational& delta, double lambda,
                                  double tol) {
    ExponentPair pair{Rational(0), delta};
    SizeEstimate out;
    out.lambda = lambda;
    int N = Q.degree();
    double d = delta.value();
    if (Rational(N) * delta == Rational(2))
        throw DegenerateExponents("estimate_pure: N*delta = 2");
    double lead_corr = std::pow(std::abs(Q.leading()), -d);
    RootSet s = roots(Q, tol);
    for (const auto& e : s.entries)
        if (std::abs(e.location) > lambda / 2.0 + 1e-9)
            throw RootsOutsideHalfDisk("estimate_pure: root outside B_{Lambda/2}");
    if (Rational(N) * delta < Rational(2)) {
        out.value = lead_corr * std::pow(lambda, 2.0 - N * d);
        out.breakdown.push_back({cplx(0.0), 0, -1, std::pow(lambda, N * d - 2.0), out.value});
        return out;
    }
    int k0 = k_index(0, pair, N);
    ScaleTable table = scale_table(s);
    double total = 0.0;
    for (std::size_t ri = 0; ri < table.roots.size(); ++ri) {
        double ph = phi(0, k0, table.scales[ri], lambda, pair);
        double contrib = (ph == 0.0) ? kInf : lead_corr / ph;
        out.breakdown.push_back({table.roots[ri], 0, k0, ph, contrib});
        total += contrib;
    }
    out.value = total;
    return out;
}

inline SizeEstimate estimate_pure(const ComplexPoly& Q, const Rational& delta, double lambda) {
    return estimate_pure(Q, delta, lambda, default_root_tol(Q));
}

// Root-symmetric form: double sum over nu = 0..M and k = -1..N-2 of the
// per-root reciprocals. Valid only for simple roots.
inline SizeEstimate estimate_symmetric(const ComplexPoly& P, const ComplexPoly& Q,
                                       const ExponentPair& pair, double lambda, double tol) {
    SizeEstimate out;
    out.lambda = lambda;
    if (P.is_zero()) return out;
    int M = P.degree();
    int N = Q.degree();
    if (!nondegenerate(pair, M, N))
        throw DegenerateExponents("estimate_symmetric: degenerate exponents");
    RootSet s = roots(Q, tol);
    for (const auto& e : s.entries) {
        if (e.multiplicity > 1) throw MultipleRoots("estimate_symmetric: multiple root");
        if (std::abs(e.location) > lambda / 2.0 + 1e-9)
            throw RootsOutsideHalfDisk("estimate_symmetric: root outside B_{Lambda/2}");
    }
    ScaleTable table = scale_table(s);
    double eps = pair.eps.value();
    double lead_corr = std::pow(std::abs(Q.leading()), -pair.delta.value());
    double total = 0.0;
    for (std::size_t ri = 0; ri < table.roots.size(); ++ri) {
        std::vector<cplx> taylor = P.taylor_at(table.roots[ri]);
        double fact = 1.0;
        for (int nu = 0; nu <= M; ++nu) {
            if (nu > 0) fact *= nu;
            double mag = std::abs(taylor[static_cast<std::size_t>(nu)]) * fact;
            if (mag == 0.0) continue;
            for (int k = -1; k <= N - 2; ++k) {
                double ph = phi(nu, k, table.scales[ri], lambda, pair);
                double contrib = (ph == 0.0) ? kInf : std::pow(mag, eps) / ph * lead_corr;
                out.breakdown.push_back({table.roots[ri], nu, k, ph, contrib});
                total += contrib;
            }
        }
    }
    out.value = total;
    return out;
}

inline SizeEstimate estimate_symmetric(const ComplexPoly& P, const ComplexPoly& Q,
                                       const ExponentPair& pair, double lambda) {
    return estimate_symmetric(P, Q, pair, lambda, default_root_tol(Q));
}

// Sup-circle form: sup of |P|^eps over the circle |z-alpha| = L_k(alpha)
// (radius Lambda for k = -1), sampled at equispaced points. Requires
// nu*eps + 2 < N*delta throughout, i.e. M*eps + 2 < N*delta.
inline SizeEstimate estimate_supform(const ComplexPoly& P, const ComplexPoly& Q,
                                     const ExponentPair& pair, double lambda, int circle_samples,
                                     double tol) {
    int M = P.is_zero() ? 0 : P.degree();
    int N = Q.degree();
    if (!(Rational(M) * pair.eps + Rational(2) < Rational(N) * pair.delta))
        throw RangeViolation("estimate_supform: requires M*eps + 2 < N*delta");
    SizeEstimate out;
    out.lambda = lambda;
    if (P.is_zero()) return out;
    RootSet s = roots(Q, tol);
    for (const auto& e : s.entries) {
        if (e.multiplicity > 1) throw MultipleRoots("estimate_supform: multiple root");
        if (std::abs(e.location) > lambda / 2.0 + 1e-9)
            throw RootsOutsideHalfDisk("estimate_supform: root outside B_{Lambda/2}");
    }
    ScaleTable table = scale_table(s);
    double eps = pair.eps.value(), delta = pair.delta.value();
    double lead_corr = std::pow(std::abs(Q.leading()), -delta);
    double total = 0.0;
    for (std::size_t ri = 0; ri < table.roots.size(); ++ri) {
        const auto& row = table.scales[ri];
        for (int k = -1; k <= N - 2; ++k) {
            double radius = (k < 0) ? lambda : row[static_cast<std::size_t>(k)];
            double sup = 0.0;
            for (int i = 0; i < circle_samples; ++i) {
                cplx z = table.roots[ri] + radius * std::polar(1.0, 2.0 * M_PI * i / circle_samples);
                sup = std::max(sup, std::pow(std::abs(P(z)), eps));
            }
            double denom =
                (k < 0) ? std::pow(lambda, N * delta - 2.0)
                        : detail::rpow(radius, (N - k) * delta - 2.0) *
                              [&] {
                                  double pr = 1.0;
                                  for (int i = 0; i < k; ++i)
                                      pr *= std::pow(row[static_cast<std::size_t>(i)], delta);
                                  return pr;
                              }();
            double contrib = (denom == 0.0) ? kInf : sup / denom * lead_corr;
            out.breakdown.push_back({table.roots[ri], -1, k, denom, contrib});
            total += contrib;
        }
    }
    out.value = total;
    return out;
}

inline SizeEstimate estimate_supform(const ComplexPoly& P, const ComplexPoly& Q,
                                     const ExponentPair& pair, double lambda,
                                     int circle_samples = 256) {
    return estimate_supform(P, Q, pair, lambda, circle_samples, default_root_tol(Q));
}

// Closed-form size of int_0^Lambda r^p / prod (r + L_i)^delta dr/r for a
// nonincreasing scale list ending in 0, with c*Lambda >= L_0.
inline double radial_size(double p, double delta, double lambda, const std::vector<double>& L,
                          double c = 0.5) {
    int N = static_cast<int>(L.size());
    if (N < 1 || L.back() != 0.0) throw ScaleOrderViolation("radial_size: last scale must be 0");
    for (int i = 0; i + 1 < N; ++i)
        if (L[static_cast<std::size_t>(i)] < L[static_cast<std::size_t>(i) + 1])
            throw ScaleOrderViolation("radial_size: scales must be nonincreasing");
    if (!(c < 1.0) || L.front() > c * lambda)
        throw ScaleOrderViolation("radial_size: need L_0 <= c*Lambda with c < 1");
    for (int k = 0; k <= N; ++k)
        if (std::abs(p - (N - k) * delta) < 1e-12)
            throw DegenerateExponents("radial_size: p = (N-k)*delta");
    if (p > N * delta) return std::pow(lambda, p - N * delta);
    // the k with (N-k-1)*delta < p < (N-k)*delta
    int k = N - static_cast<int>(std::ceil(p / delta));
    double denom = detail::rpow(L[static_cast<std::size_t>(k)], (N - k) * delta - p);
    for (int i = 0; i < k; ++i) denom *= detail::rpow(L[static_cast<std::size_t>(i)], delta);
    return denom == 0.0 ? kInf : 1.0 / denom;
}

// Algebraic side of the circle-integral size: sum |a_nu|^eps. The analytic
// side lives in the oracle module.
inline double circle_size(const ComplexPoly& P, double eps, double interval_length,
                          double lambda_min = 1e-3) {
    if (interval_length < lambda_min)
        throw RangeViolation("circle_size: interval shorter than lambda_min");
    double s = 0.0;
    for (const cplx& a : P.coeffs()) s += std::pow(std::abs(a), eps);
    return s;
}

// Regularized size formula, implemented exactly as printed and flagged
// experimental: the kappa exponents are validated empirically by the
// mu-sweep gate in the acceptance suite, not trusted.
inline double regularized_estimate(const ComplexPoly& P, const ComplexPoly& Q,
                                   const ExponentPair& pair, double mu, double lambda,
                                   double tol, double deriv_tol = 1e-8) {
    (void)lambda;
    int M = P.is_zero() ? 0 : P.degree();
    int N = Q.degree();
    if (!(Rational(M) * pair.eps + Rational(2) < pair.delta * Rational(N)))
        throw RangeViolation("regularized_estimate: outside the stated regime");
    double eps = pair.eps.value(), delta = pair.delta.value();
    RootSet s = roots(Q, tol);
    ScaleTable table = scale_table(s);
    double total = 0.0;
    for (std::size_t ri = 0; ri < table.roots.size(); ++ri) {
        const auto& row = table.scales[ri];
        for (auto [nu, mag] : detail::nonzero_derivative_orders(P, table.roots[ri], deriv_tol)) {
            double prod = 1.0;
            for (int k = 0; k <= N - 1; ++k) {
                double kappa = (k <= N - 2)
                                   ? (nu * eps + 2.0) / ((N - k - 1.0) * (N - k))
                                   : (delta - nu);
                double base = std::pow(mu, N) +
                              std::pow(row[static_cast<std::size_t>(k)], N - k);
                prod *= std::pow(base, -kappa);
            }
            total += std::pow(mag, eps) * prod;
        }
    }
    return total;
}

inline double regularized_estimate(const ComplexPoly& P, const ComplexPoly& Q,
                                   const ExponentPair& pair, double mu, double lambda) {
    return regularized_estimate(P, Q, pair, mu, lambda, default_root_tol(Q));
}

}  // namespace singint

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "singint/arp.hpp"
#include "singint/errors.hpp"
#include "singint/estimator.hpp"
#include "singint/polynomial.hpp"

namespace singint {

// Numerical ground truth for one integral. Divergence is a flag plus a
// fitted growth exponent, never a huge float: a sampler cannot certify
// infinity, only exhibit geometric growth under refinement.
struct OracleResult {
    double value = 0.0;
    double stderr_ = 0.0;  // 0 for deterministic schemes
    bool diverging = false;
    double growth_exponent = 0.0;  // > 0 when diverging
    std::string scheme;
    std::uint64_t seed = 0;
};

// Paired (algebraic, oracle) samples over a family. Ratios are computed on
// jointly finite samples only; joint-infiniteness agreement must be total.
struct EquivalenceReport {
    struct Sample {
        int id;
        double algebraic;
        double oracle;
        double ratio;
        double sweep;
    };
    std::vector<Sample> samples;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double trend_stat = 0.0;  // Pearson correlation of log ratio vs log sweep
    int joint_infinite = 0;
};

namespace detail {

// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double den = n * sxx - sx * sx;
    return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    if (n < 2) return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

// 4-point Gauss-Legendre on [-1, 1].
constexpr double kGL4x[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                             0.8611363115940526};
constexpr double kGL4w[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                             0.3478548451374538};

// Geometric-annulus decay fit: given per-level sums c_k (k increasing
// toward the singular point, levels shrinking by factor 2), fit the dyadic
// decay rate d with c_k ~ 2^{-d k} over the deepest usable window.
// d <= threshold reads as divergence (d < 0 is geometric growth).
struct DecayFit {
    bool usable = false;
    double d = 0.0;
};

inline DecayFit fit_decay(const std::vector<double>& c, int window = 16) {
    std::vector<double> xs, ys;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0 && static_cast<int>(xs.size()) < window;
         --k) {
        double v = c[static_cast<std::size_t>(k)];
        if (v > 0.0 && std::isfinite(v)) {
            xs.push_back(static_cast<double>(k));
            ys.push_back(std::log2(v));
        } else if (!xs.empty()) {
            break;  // keep the window contiguous from the deep end
        }
    }
    DecayFit out;
    if (xs.size() < 6) return out;  // integrand dead near the center; no verdict
    out.usable = true;
    out.d = -ls_slope(xs, ys);
    return out;
}

constexpr double kDivergenceDecayThreshold = 0.02;

// Common zeros of the denominator terms: roots of the first term filtered
// by near-vanishing of the full sum of squares.
inline std::vector<cplx> denominator_centers(const ARPExpr& R, double tol) {
    std::vector<cplx> centers;
    for (const auto& q : R.denominator_terms) {
        if (q.is_zero() || q.degree() < 1) continue;
        RootSet s = roots(q, tol);
        double scale = 0.0;
        for (const auto& t : R.denominator_terms) scale = std::max(scale, t.coeff_norm());
        for (const auto& e : s.entries) {
            double den2 = 0.0;
            for (const auto& t : R.denominator_terms) den2 += std::norm(t(e.location));
            // Newton-polish so the polar grid is centered on the root to far
            // better than the deepest annulus radius.
            if (std::sqrt(den2) <= 1e-5 * (1.0 + scale))
                centers.push_back(polish_root(q, e.location, e.multiplicity));
        }
        break;  // common zeros are a subset of the first nonconstant term's roots
    }
    return centers;
}

// Admissible angular set on the circle |z - alpha| = r: intersection of
// constraints of the form cos(theta - phi) <= A (disk membership and Voronoi
// nearest-center conditions are all of this shape). Kept as a list of plain
// intervals inside [0, 2 pi].
struct ArcSet {
    std::vector<std::pair<double, double>> iv;

    static ArcSet full() { return ArcSet{{{0.0, 2.0 * M_PI}}}; }

    // intersect with {theta : cos(theta - phi) <= A}
    void constrain(double phi, double A) {
        if (A >= 1.0) return;
        if (A <= -1.0) {
            iv.clear();
            return;
        }
        double c = std::acos(A);
        double s = phi + c;                 // allowed arc [s, s + len]
        double len = 2.0 * M_PI - 2.0 * c;
        s = std::fmod(s, 2.0 * M_PI);
        if (s < 0.0) s += 2.0 * M_PI;
        std::vector<std::pair<double, double>> next;
        for (const auto& [a, b] : iv) {
            for (double shift : {s - 2.0 * M_PI, s}) {
                double lo = std::max(a, shift);
                double hi = std::min(b, shift + len);
                if (hi > lo) next.emplace_back(lo, hi);
            }
        }
        iv = std::move(next);
    }
};

}  // namespace detail

// Deterministic disk oracle: Voronoi cells around the denominator zeros,
// polar grid per cell with geometrically graded radii toward the center,
// Gauss-Legendre in log-radius, midpoint in angle over the exact admissible
// arcs (disk clipping and Voronoi membership are resolved analytically, so
// the integrand seen by the quadrature is smooth). Angular resolution is
// doubled until the value moves by less than rel_target; divergence is
// read off the decay of the innermost annulus sums.
inline OracleResult integrate_disk(const ARPExpr& R, double lambda, double rel_target) {
    OracleResult out;
    double root_tol = 1e-9;
    for (const auto& q : R.denominator_terms) root_tol = std::max(root_tol, default_root_tol(q));
    std::vector<cplx> centers = detail::denominator_centers(R, root_tol);
    out.scheme = centers.empty() ? "tensor" : "voronoi-polar";
    if (centers.empty()) centers.push_back(cplx(0.0));

    // 48 octaves reach r ~ 4e-15; a double root there has |Q| ~ 1e-29, still
    // three decades above the compensated-evaluation noise floor ~1e-32.
    const int kOctaves = 48;
    const double ln2 = std::log(2.0);

    // One full pass at angular resolution m; per-cell annulus sums retained
    // for the divergence fit.
    auto pass = [&](int m, std::vector<std::vector<double>>& annuli) {
        double total = 0.0;
        annuli.assign(centers.size(), std::vector<double>(kOctaves, 0.0));
        for (std::size_t ci = 0; ci < centers.size(); ++ci) {
            cplx alpha = centers[ci];
            double ra = std::abs(alpha);
            double r_out = lambda + ra;

            // Radii where an angular constraint opens or closes: the arc
            // length is only C^{1/2} there, so radial panels must not
            // straddle them.
            std::vector<double> kinks;
            if (ra > 1e-14) {
                kinks.push_back(lambda - ra);
                kinks.push_back(lambda + ra);
            }
            for (std::size_t cj = 0; cj < centers.size(); ++cj)
                if (cj != ci) kinks.push_back(0.5 * std::abs(centers[cj] - alpha));

            // Admissible arcs at distance r from alpha.
            auto arcs_at = [&](double r) {
                detail::ArcSet set = detail::ArcSet::full();
                if (ra > 1e-14) {
                    // |alpha + r e^{i theta}| <= lambda
                    double A = (lambda * lambda - ra * ra - r * r) / (2.0 * r * ra);
                    set.constrain(std::arg(alpha), A);
                } else if (r > lambda) {
                    set.iv.clear();
                }
                for (std::size_t cj = 0; cj < centers.size() && !set.iv.empty(); ++cj) {
                    if (cj == ci) continue;
                    cplx beta = centers[cj] - alpha;
                    // |z - c_j| >= r  <=>  cos(theta - arg beta) <= |beta| / (2r)
                    set.constrain(std::arg(beta), std::abs(beta) / (2.0 * r));
                }
                return set;
            };

            // Ring integral at radius r: exact-arc midpoint rule.
            auto ring = [&](double r) {
                double acc = 0.0;
                detail::ArcSet set = arcs_at(r);
                for (const auto& [a, b] : set.iv) {
                    int n = std::max(1, static_cast<int>(std::ceil(m * (b - a) / (2.0 * M_PI))));
                    double w = (b - a) / n;
                    for (int i = 0; i < n; ++i) {
                        cplx z = alpha + std::polar(r, a + (i + 0.5) * w);
                        double f = R(z);
                        if (std::isfinite(f)) acc += f * w;
                    }
                }
                return acc;
            };

            for (int k = 0; k < kOctaves; ++k) {
                double t_hi = std::log(r_out) - k * ln2;
                double t_lo = t_hi - ln2;
                // split the octave at any interior kink radius
                std::vector<double> ts{t_lo};
                for (double rk : kinks) {
                    if (rk <= 0.0) continue;
                    double tk = std::log(rk);
                    if (tk > t_lo + 1e-13 && tk < t_hi - 1e-13) ts.push_back(tk);
                }
                ts.push_back(t_hi);
                std::sort(ts.begin(), ts.end());

                double c_k = 0.0;
                for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
                    double mid = 0.5 * (ts[s] + ts[s + 1]);
                    double half = 0.5 * (ts[s + 1] - ts[s]);
                    for (int g = 0; g < 4; ++g) {
                        double t = mid + half * detail::kGL4x[g];
                        double r = std::exp(t);
                        // dA = r dr dtheta = r^2 dt dtheta
                        c_k += detail::kGL4w[g] * half * r * r * ring(r);
                    }
                }
                annuli[ci][static_cast<std::size_t>(k)] = c_k;
                total += c_k;
                if (c_k > 1e100) break;  // geometric blowup; deeper levels overflow
            }
        }
        return total;
    };

    std::vector<std::vector<double>> annuli;
    int m = 64;
    double value = pass(m, annuli);
    for (; m < 1024; ) {
        m *= 2;
        double next = pass(m, annuli);
        double prev = value;
        value = next;
        if (std::abs(next - prev) <= rel_target * std::max(std::abs(next), 1e-300)) break;
    }

    double converged = 0.0;
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        detail::DecayFit fit = detail::fit_decay(annuli[ci]);
        double cell = 0.0;
        for (double c : annuli[ci]) cell += c;
        if (fit.usable && fit.d <= detail::kDivergenceDecayThreshold) {
            out.diverging = true;
            out.growth_exponent = std::max(out.growth_exponent, std::max(-fit.d, 0.01));
            // report only the outer, settled part of the cell
            cell = 0.0;
            for (int k = 0; k < kOctaves / 2; ++k) cell += annuli[ci][static_cast<std::size_t>(k)];
        } else if (fit.usable) {
            // geometric tail below the resolved annuli
            double q = std::pow(2.0, -fit.d);
            cell += annuli[ci].back() * q / (1.0 - q);
        }
        converged += cell;
    }
    out.value = converged;
    return out;
}

// Importance-sampled Monte Carlo on the disk: mixture of the uniform law on
// B_Lambda and per-center radial power laws matched to the local
// singularity exponent m(alpha)*delta - nu(alpha)*eps.
inline OracleResult integrate_disk_mc(const ARPExpr& R, double lambda, int n_samples,
                                      std::uint64_t seed) {
    OracleResult out;
    out.scheme = "qmc";
    out.seed = seed;

    double root_tol = 1e-9;
    for (const auto& q : R.denominator_terms) root_tol = std::max(root_tol, default_root_tol(q));
    std::vector<cplx> centers = detail::denominator_centers(R, root_tol);

    // Radial exponent a of each proposal component: density ~ r^{a-2} dA on
    // |z - alpha| <= Rj, i.e. P(r < t) = (t/Rj)^a. Matched so that f/q stays
    // bounded near the center, clipped to (0, 2].
    struct Component {
        cplx alpha;
        double a;
        double R;
    };
    std::vector<Component> comps;
    for (const cplx& alpha : centers) {
        int m_ord = std::numeric_limits<int>::max();
        for (const auto& q : R.denominator_terms)
            if (!q.is_zero()) m_ord = std::min(m_ord, vanishing_order(q, alpha));
        int nu = std::numeric_limits<int>::max();
        for (const auto& p : R.numerator_terms)
            if (!p.is_zero()) nu = std::min(nu, vanishing_order(p, alpha));
        if (nu == std::numeric_limits<int>::max()) nu = 0;
        double sing = m_ord * R.pair.delta.value() - nu * R.pair.eps.value();
        double a = std::clamp(2.0 - sing, 0.05, 2.0);
        comps.push_back({alpha, a, lambda + std::abs(alpha)});
    }

    double w_uniform = comps.empty() ? 1.0 : 0.5;
    double w_comp = comps.empty() ? 0.0 : 0.5 / static_cast<double>(comps.size());
    double area = M_PI * lambda * lambda;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto density = [&](cplx z) {
        double q = (std::abs(z) <= lambda) ? w_uniform / area : 0.0;
        for (const auto& c : comps) {
            double r = std::abs(z - c.alpha);
            if (r <= c.R && r > 0.0)
                q += w_comp * c.a * std::pow(r, c.a - 2.0) / (2.0 * M_PI * std::pow(c.R, c.a));
        }
        return q;
    };

    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        double pick = unit(rng);
        cplx z;
        if (pick < w_uniform || comps.empty()) {
            double r = lambda * std::sqrt(unit(rng));
            z = std::polar(r, 2.0 * M_PI * unit(rng));
        } else {
            const auto& c = comps[std::min(
                comps.size() - 1,
                static_cast<std::size_t>((pick - w_uniform) / std::max(w_comp, 1e-300)))];
            double r = c.R * std::pow(unit(rng), 1.0 / c.a);
            z = c.alpha + std::polar(r, 2.0 * M_PI * unit(rng));
        }
        double x = 0.0;
        if (std::abs(z) <= lambda) {
            double f = R(z);
            double q = density(z);
            if (std::isfinite(f) && q > 0.0) x = f / q;
        }
        sum += x;
        sum2 += x * x;
    }
    double n = static_cast<double>(n_samples);
    out.value = sum / n;
    double var = std::max(0.0, sum2 / n - out.value * out.value);
    out.stderr_ = std::sqrt(var / n);
    return out;
}

// 1D oracle for int_0^Lambda r^p / prod (r + L_i)^delta dr/r: geometric
// panels toward 0, Gauss-Legendre in log r, decay-fitted divergence.
inline OracleResult integrate_radial(double p, double delta, const std::vector<double>& L,
                                     double lambda, double rel_target, int octaves = 60) {
    (void)rel_target;  // the fixed grading already over-resolves the 1D integrand
    OracleResult out;
    out.scheme = "radial";
    const double ln2 = std::log(2.0);
    std::vector<double> panel(static_cast<std::size_t>(octaves), 0.0);
    for (int k = 0; k < octaves; ++k) {
        double t_hi = std::log(lambda) - k * ln2;
        double c_k = 0.0;
        for (int g = 0; g < 4; ++g) {
            double t = t_hi - ln2 * 0.5 * (1.0 - detail::kGL4x[g]);
            double r = std::exp(t);
            double f = std::pow(r, p);
            for (double Li : L) f /= std::pow(r + Li, delta);
            c_k += detail::kGL4w[g] * (ln2 / 2.0) * f;  // dr/r = dt
        }
        panel[static_cast<std::size_t>(k)] = c_k;
        if (c_k > 1e100) break;
    }
    double total = 0.0;
    for (double c : panel) total += c;
    detail::DecayFit fit = detail::fit_decay(panel);
    if (fit.usable && fit.d <= detail::kDivergenceDecayThreshold) {
        out.diverging = true;
        out.growth_exponent = std::max(-fit.d, 0.01);
        total = 0.0;
        for (int k = 0; k < octaves / 2; ++k) total += panel[static_cast<std::size_t>(k)];
    } else if (fit.usable) {
        double q = std::pow(2.0, -fit.d);
        total += panel.back() * q / (1.0 - q);
    }
    out.value = total;
    return out;
}

// int over the interval of |P(e^{i theta})|^eps d theta; midpoint rule with
// doubling (the integrand is continuous, with at worst |theta|^eps cusps).
inline OracleResult integrate_circle(const ComplexPoly& P, double eps, double start,
                                     double length) {
    OracleResult out;
    out.scheme = "circle";
    auto eval = [&](int n) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double th = start + length * (i + 0.5) / n;
            s += std::pow(std::abs(P(std::polar(1.0, th))), eps);
        }
        return s * length / n;
    };
    int n = 256;
    double v = eval(n);
    while (n < (1 << 18)) {
        n *= 2;
        double next = eval(n);
        double prev = v;
        v = next;
        if (std::abs(next - prev) <= 1e-5 * std::max(std::abs(next), 1e-300)) break;
    }
    out.value = v;
    return out;
}

namespace detail {

// Graded 1D torus integral of phi -> |b + a e^{2 pi i phi}|^{-delta} over a
// full period, panels refined geometrically toward the minimizing angle.
inline double torus_pair_integral(cplx b, cplx a, double delta) {
    if (std::abs(a) == 0.0) {
        double m = std::abs(b);
        return m == 0.0 ? kInf : std::pow(m, -delta);
    }
    // minimizing phase: a e^{2 pi i phi0} points opposite b (any phase if b=0)
    double phi0 = 0.0;
    if (std::abs(b) > 0.0) phi0 = std::arg(-b / a) / (2.0 * M_PI);
    auto g = [&](double phi) {
        double m = std::abs(b + a * std::polar(1.0, 2.0 * M_PI * phi));
        return m == 0.0 ? 0.0 : std::pow(m, -delta);
    };
    const int kLevels = 48;
    double total = 0.0;
    double inner_last = 0.0;
    // two graded half-periods on either side of phi0
    for (int side = 0; side < 2; ++side) {
        double width = 0.5;
        for (int k = 0; k < kLevels; ++k) {
            double hi = width, lo = width / 2.0;
            double c_k = 0.0;
            for (int gg = 0; gg < 4; ++gg) {
                double x = lo + (hi - lo) * 0.5 * (1.0 + kGL4x[gg]);
                double phi = phi0 + (side == 0 ? x : -x);
                c_k += kGL4w[gg] * (hi - lo) / 2.0 * g(phi);
            }
            total += c_k;
            if (k == kLevels - 1) inner_last = c_k;
            width = lo;
        }
        // remaining gap [0, 2^-kLevels): integrand ~ x^{-delta}, delta < 1
        double scale = std::pow(2.0, 1.0 - delta) - 1.0;
        if (scale > 0.0) total += inner_last / scale;
    }
    return total;
}

}  // namespace detail

// Torus integral of |sum a_j e^{2 pi i theta_j}|^{-delta}, J <= 3: one
// theta rotated away exactly, the rest by graded/tensor quadrature.
inline OracleResult integrate_torus(const std::vector<cplx>& a, double delta, double rel_target) {
    if (!(delta > 0.0 && delta < 1.0)) throw RangeViolation("integrate_torus: need 0 < delta < 1");
    if (a.empty() || a.size() > 3) throw RangeViolation("integrate_torus: need 1 <= J <= 3");
    OracleResult out;
    out.scheme = "torus";
    bool all_zero = true;
    for (const cplx& x : a) all_zero = all_zero && std::abs(x) == 0.0;
    if (all_zero) {
        out.diverging = true;
        out.growth_exponent = delta;
        return out;
    }
    if (a.size() == 1) {
        out.value = std::pow(std::abs(a[0]), -delta);
        return out;
    }
    if (a.size() == 2) {
        out.value = detail::torus_pair_integral(a[0], a[1], delta);
        return out;
    }
    // J = 3: outer midpoint in theta_3, graded inner pair integral.
    auto eval = [&](int n3) {
        double s = 0.0;
        for (int i = 0; i < n3; ++i) {
            double phi3 = (i + 0.5) / n3;
            cplx b = a[0] + a[2] * std::polar(1.0, 2.0 * M_PI * phi3);
            s += detail::torus_pair_integral(b, a[1], delta);
        }
        return s / n3;
    };
    int n3 = 128;
    double v = eval(n3);
    while (n3 < 2048) {
        n3 *= 2;
        double next = eval(n3);
        double prev = v;
        v = next;
        if (std::abs(next - prev) <= std::max(rel_target, 1e-3) * std::abs(next)) break;
    }
    out.value = v;
    return out;
}

// Plain-MC companion for the torus (two-scheme agreement checks).
inline OracleResult integrate_torus_mc(const std::vector<cplx>& a, double delta, int n_samples,
                                       std::uint64_t seed) {
    if (!(delta > 0.0 && delta < 1.0))
        throw RangeViolation("integrate_torus_mc: need 0 < delta < 1");
    OracleResult out;
    out.scheme = "torus";
    out.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        cplx s(0.0);
        for (const cplx& x : a) s += x * std::polar(1.0, 2.0 * M_PI * unit(rng));
        double m = std::abs(s);
        double f = m == 0.0 ? 0.0 : std::pow(m, -delta);
        sum += f;
        sum2 += f * f;
    }
    double n = static_cast<double>(n_samples);
    out.value = sum / n;
    out.stderr_ = std::sqrt(std::max(0.0, sum2 / n - out.value * out.value) / n);
    return out;
}

// Monte Carlo over a polydisk for 1/(sum |f_j|^2)^{delta/2}, stratified in
// dyadic shells of max_i |z_i|/r_i so that divergence at the origin shows
// up as non-decaying shell sums.
//
// `sum_sq` evaluates sum_j |f_j(z)|^2 at a point of the polydisk.
inline OracleResult integrate_polydisk_mc(
    const std::function<double(const std::vector<cplx>&)>& sum_sq, double delta,
    const std::vector<double>& radii, int n_samples, std::uint64_t seed) {
    OracleResult out;
    out.scheme = "polydisk-mc";
    out.seed = seed;
    int n = static_cast<int>(radii.size());
    const int kShells = 18;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double vol0 = 1.0;
    for (double r : radii) vol0 *= M_PI * r * r;

    int per_shell = std::max(200, n_samples / kShells);
    std::vector<double> shell_val(kShells, 0.0), shell_var(kShells, 0.0);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int l = 0; l < kShells; ++l) {
        double scale = std::pow(2.0, -l);
        double vol_l = vol0 * std::pow(scale, 2 * n);
        double sum = 0.0, sum2 = 0.0;
        for (int i = 0; i < per_shell; ++i) {
            double t = 0.0;
            for (int j = 0; j < n; ++j) {
                double r = std::sqrt(unit(rng));
                z[static_cast<std::size_t>(j)] =
                    std::polar(r * radii[static_cast<std::size_t>(j)] * scale,
                               2.0 * M_PI * unit(rng));
                t = std::max(t, r);
            }
            // keep only the outer shell of the scaled polydisk
            double g = 0.0;
            if (t > 0.5) {
                double s2 = sum_sq(z);
                g = s2 == 0.0 ? 0.0 : std::pow(s2, -delta / 2.0);
            }
            sum += g;
            sum2 += g * g;
        }
        double mean = sum / per_shell;
        shell_val[static_cast<std::size_t>(l)] = vol_l * mean;
        double var = std::max(0.0, sum2 / per_shell - mean * mean);
        shell_var[static_cast<std::size_t>(l)] = vol_l * vol_l * var / per_shell;
    }

    double total = 0.0, var = 0.0;
    for (int l = 0; l < kShells; ++l) {
        total += shell_val[static_cast<std::size_t>(l)];
        var += shell_var[static_cast<std::size_t>(l)];
    }
    detail::DecayFit fit = detail::fit_decay(shell_val, 10);
    if (fit.usable && fit.d <= 0.05) {
        out.diverging = true;
        out.growth_exponent = std::max(-fit.d, 0.01);
        total = 0.0;
        for (int l = 0; l < kShells / 2; ++l) total += shell_val[static_cast<std::size_t>(l)];
    } else if (fit.usable && fit.d > 0.1) {
        double q = std::pow(2.0, -fit.d);
        total += shell_val.back() * q / (1.0 - q);
    }
    out.value = total;
    out.stderr_ = std::sqrt(var);
    return out;
}

// Ratio statistics for a family of (algebraic value, oracle result) pairs.
// Any sample where exactly one side is infinite is a hard failure.
inline EquivalenceReport compare(const std::vector<std::pair<double, OracleResult>>& family,
                                 const std::vector<double>& sweep = {}) {
    if (family.empty()) throw Error("compare: empty family");
    EquivalenceReport rep;
    std::vector<double> log_ratio, log_sweep;
    for (std::size_t i = 0; i < family.size(); ++i) {
        double alg = family[i].first;
        const OracleResult& orc = family[i].second;
        bool alg_inf = std::isinf(alg);
        if (alg_inf != orc.diverging)
            throw MixedFinitenessDisagreement("compare: finiteness verdicts disagree at sample " +
                                              std::to_string(i));
        if (alg_inf) {
            ++rep.joint_infinite;
            continue;
        }
        double ratio = orc.value / alg;
        double sw = i < sweep.size() ? sweep[i] : 0.0;
        rep.samples.push_back({static_cast<int>(i), alg, orc.value, ratio, sw});
        if (ratio > 0.0 && std::isfinite(ratio)) {
            log_ratio.push_back(std::log(ratio));
            if (i < sweep.size() && sw > 0.0) log_sweep.push_back(std::log(sw));
        }
    }
    if (!rep.samples.empty()) {
        rep.ratio_min = rep.samples.front().ratio;
        rep.ratio_max = rep.samples.front().ratio;
        for (const auto& s : rep.samples) {
            rep.ratio_min = std::min(rep.ratio_min, s.ratio);
            rep.ratio_max = std::max(rep.ratio_max, s.ratio);
        }
    }
    if (log_sweep.size() == log_ratio.size() && log_sweep.size() >= 2)
        rep.trend_stat = detail::pearson(log_sweep, log_ratio);
    return rep;
}

}  // namespace singint

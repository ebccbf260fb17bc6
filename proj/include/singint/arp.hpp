#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "singint/errors.hpp"
#include "singint/estimator.hpp"
#include "singint/polynomial.hpp"
#include "singint/rational.hpp"

namespace singint {

// Absolute rational power (sum |P_i|^2)^{eps/2} / (sum |Q_j|^2)^{delta/2}.
// An empty denominator list means denominator 1 (absolute polynomial power).
struct ARPExpr {
    std::vector<ComplexPoly> numerator_terms;
    std::vector<ComplexPoly> denominator_terms;
    ExponentPair pair;

    // Raw strict-domain evaluation; no removable-singularity handling.
    // Compensated Horner keeps |Q| accurate deep into root neighborhoods,
    // which the quadrature oracles rely on for divergence detection.
    double operator()(cplx z) const {
        double num2 = 0.0, den2 = 0.0;
        for (const auto& p : numerator_terms) num2 += std::norm(detail::eval_accurate(p, z));
        for (const auto& q : denominator_terms) den2 += std::norm(detail::eval_accurate(q, z));
        if (denominator_terms.empty()) den2 = 1.0;
        double num = std::pow(num2, pair.eps.value() / 2.0);
        double den = std::pow(den2, pair.delta.value() / 2.0);
        if (den == 0.0) return num == 0.0 ? std::numeric_limits<double>::quiet_NaN() : kInf;
        return num / den;
    }
};

// Evaluation with the continuous extension at common zeros: cancel the
// shared |z - z0| power and return the limit value (possibly +inf).
inline double arp_eval(const ARPExpr& R, cplx z) {
    double num2 = 0.0, den2 = 0.0;
    for (const auto& p : R.numerator_terms) num2 += std::norm(detail::eval_accurate(p, z));
    for (const auto& q : R.denominator_terms) den2 += std::norm(detail::eval_accurate(q, z));
    if (R.denominator_terms.empty()) den2 = 1.0;
    if (den2 > 0.0) {
        return std::pow(num2, R.pair.eps.value() / 2.0) /
               std::pow(den2, R.pair.delta.value() / 2.0);
    }
    // All denominator terms vanish at z. Leading Taylor behavior:
    // sum |P_i|^2 ~ (sum over minimal-order terms |c_i|^2) |w|^{2p},
    // likewise for the denominator with order q; R ~ C |w|^{p*eps - q*delta}.
    auto leading = [&](const std::vector<ComplexPoly>& terms, int& order) {
        order = std::numeric_limits<int>::max();
        std::vector<cplx> lead;
        for (const auto& t : terms) {
            if (t.is_zero()) continue;
            std::vector<cplx> tay = t.taylor_at(z);
            double scale = 0.0;
            for (const cplx& x : tay) scale = std::max(scale, std::abs(x));
            int o = 0;
            while (o < static_cast<int>(tay.size()) &&
                   std::abs(tay[static_cast<std::size_t>(o)]) <= 1e-10 * scale)
                ++o;
            if (o < order) {
                order = o;
                lead.clear();
            }
            if (o == order) lead.push_back(tay[static_cast<std::size_t>(o)]);
        }
        double c2 = 0.0;
        for (const cplx& c : lead) c2 += std::norm(c);
        return c2;
    };
    int p = 0, q = 0;
    double cnum = leading(R.numerator_terms, p);
    double cden = leading(R.denominator_terms, q);
    double exponent = p * R.pair.eps.value() - q * R.pair.delta.value();
    if (cnum == 0.0) return 0.0;  // numerator identically-ish zero at z
    if (exponent > 1e-12) return 0.0;
    if (exponent < -1e-12) return kInf;
    return std::pow(cnum, R.pair.eps.value() / 2.0) / std::pow(cden, R.pair.delta.value() / 2.0);
}

// Rewrite with a common outer exponent 1/D: eps = A/D, delta = B/D turns
// into numerator terms P_i^A and denominator terms Q_j^B, both under 1/D.
// Size-equivalent with constants depending only on term counts and (A, B).
inline ARPExpr normalize_sharp(const ARPExpr& R) {
    std::int64_t d = std::lcm(R.pair.eps.den(), R.pair.delta.den());
    std::int64_t a = R.pair.eps.num() * (d / R.pair.eps.den());
    std::int64_t b = R.pair.delta.num() * (d / R.pair.delta.den());
    ARPExpr out;
    out.pair = {Rational(1, d), Rational(1, d)};
    for (const auto& p : R.numerator_terms) out.numerator_terms.push_back(p.pow(static_cast<int>(a)));
    for (const auto& q : R.denominator_terms)
        out.denominator_terms.push_back(q.pow(static_cast<int>(b)));
    return out;
}

// Algebraic side of the theta-reduction of a multi-term denominator:
// the torus integral of |sum a_j e^{2 pi i theta_j}|^{-delta} is of size
// (sum |a_j|)^{-delta} for 0 < delta < 1.
inline double theta_denominator_size(const std::vector<cplx>& a, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw RangeViolation("theta_denominator_size: need 0 < delta < 1");
    double s = 0.0;
    for (const cplx& x : a) s += std::abs(x);
    return s == 0.0 ? kInf : std::pow(s, -delta);
}

// Size of int |z-c|^eps / |a z^2 - b z|^delta dV over B_Lambda, in closed
// form, for 1 < delta, 2*delta - eps < 2. Infinite exactly when b = 0 and
// c != 0.
inline double example_closed_form(cplx a, cplx b, cplx c, double eps, double delta,
                                  double lambda) {
    if (!(delta > 1.0) || !(2.0 * delta - eps < 2.0))
        throw RangeViolation("example_closed_form: need 1 < delta and 2*delta - eps < 2");
    double A = std::abs(a), B = std::abs(b), C = std::abs(c);
    if (A == 0.0 && B == 0.0 && C == 0.0)
        throw RangeViolation("example_closed_form: (a, b, c) = (0, 0, 0)");
    if (B == 0.0) {
        if (C != 0.0) return kInf;
        return std::pow(A, -delta) * std::pow(lambda, -2.0 * delta + 2.0 + eps);
    }
    double mix = lambda * A + B;
    return std::pow(mix, -delta) * std::pow(lambda, -delta + 2.0 + eps) +
           std::pow(lambda / mix, 2.0 - delta) * std::pow(B, -2.0 * delta + 2.0) *
               std::pow(C, eps);
}

// Numeric value of the simple-root controlling expression: the symmetric
// form of the size estimate at Lambda = 1, behind the coefficient-norm gate
// |||Q - Z^N||| < s_gate.
inline double simple_root_size(const ComplexPoly& P, const ComplexPoly& Q,
                               const ExponentPair& pair, double s_gate = 0.5) {
    int N = Q.degree();
    std::vector<cplx> zn(static_cast<std::size_t>(N) + 1, cplx(0.0));
    zn.back() = cplx(1.0);
    double gate = (Q - ComplexPoly(zn)).coeff_norm();
    if (gate >= s_gate) throw NormGateViolated("simple_root_size: |||Q - Z^N||| >= s_gate");
    return estimate_symmetric(P, Q, pair, 1.0).value;  // throws MultipleRoots if clustered
}

}  // namespace singint

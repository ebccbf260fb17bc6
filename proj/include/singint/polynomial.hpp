#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "singint/errors.hpp"

namespace singint {

using cplx = std::complex<double>;

// Univariate polynomial over complex coefficients, ascending by degree.
// The zero polynomial is the empty coefficient list; its degree is undefined
// (degree() throws rather than returning -1).
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ComplexPoly constant(cplx a) { return ComplexPoly({a}); }
    static ComplexPoly identity() { return ComplexPoly({cplx(0.0), cplx(1.0)}); }

    // Monic product prod (z - r) over the given roots.
    static ComplexPoly from_roots(const std::vector<cplx>& roots) {
        ComplexPoly p({cplx(1.0)});
        for (const cplx& r : roots) p = p * ComplexPoly({-r, cplx(1.0)});
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (c_.empty()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<cplx>& coeffs() const { return c_; }
    cplx coeff(std::size_t i) const { return i < c_.size() ? c_[i] : cplx(0.0); }
    cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }

    // Horner evaluation.
    cplx operator()(cplx z) const {
        cplx acc(0.0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    ComplexPoly derivative(int order = 1) const {
        std::vector<cplx> d = c_;
        for (int o = 0; o < order; ++o) {
            if (d.size() <= 1) return ComplexPoly();
            std::vector<cplx> next(d.size() - 1);
            for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<double>(i);
            d = std::move(next);
        }
        return ComplexPoly(std::move(d));
    }

    // Coefficient 1-norm |||q||| = sum |a_i|, used by all norm gates.
    double coeff_norm() const {
        double s = 0.0;
        for (const cplx& a : c_) s += std::abs(a);
        return s;
    }

    // Taylor coefficients of p at alpha: p(z) = sum t_k (z - alpha)^k.
    // Repeated synthetic division, numerically adequate for degree <= ~20.
    std::vector<cplx> taylor_at(cplx alpha) const {
        std::vector<cplx> work = c_;
        std::vector<cplx> out;
        out.reserve(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            // divide work by (z - alpha); remainder is the next Taylor coefficient
            cplx rem(0.0);
            for (auto it = work.rbegin(); it != work.rend(); ++it) {
                cplx t = *it + rem * alpha;
                *it = rem;
                rem = t;
            }
            out.push_back(rem);
            work.pop_back();  // the shifted-out top slot; work[0..] is the quotient
        }
        return out;
    }

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
        std::vector<cplx> s(std::max(a.c_.size(), b.c_.size()), cplx(0.0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) s[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) s[i] += b.c_[i];
        return ComplexPoly(std::move(s));
    }
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
        return a + (b * cplx(-1.0));
    }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return ComplexPoly();
        std::vector<cplx> p(a.c_.size() + b.c_.size() - 1, cplx(0.0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
        return ComplexPoly(std::move(p));
    }
    friend ComplexPoly operator*(const ComplexPoly& a, cplx s) {
        std::vector<cplx> p = a.c_;
        for (cplx& x : p) x *= s;
        return ComplexPoly(std::move(p));
    }
    friend ComplexPoly operator*(cplx s, const ComplexPoly& a) { return a * s; }

    ComplexPoly pow(int n) const {
        ComplexPoly out({cplx(1.0)});
        for (int i = 0; i < n; ++i) out = out * (*this);
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == cplx(0.0)) c_.pop_back();
    }

    std::vector<cplx> c_;
};

// Multiset of roots with multiplicities; locations of distinct entries are
// separated by more than the clustering tolerance used to build the set.
struct RootSet {
    struct Entry {
        cplx location;
        int multiplicity;
    };
    std::vector<Entry> entries;
    double tol = 0.0;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& e : entries) n += e.multiplicity;
        return n;
    }

    // Flat list with each root repeated by its multiplicity.
    std::vector<cplx> expanded() const {
        std::vector<cplx> out;
        out.reserve(static_cast<std::size_t>(total_multiplicity()));
        for (const auto& e : entries)
            for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.location);
        return out;
    }
};

inline double default_root_tol(const ComplexPoly& q) { return 1e-7 * (1.0 + q.coeff_norm()); }

namespace detail {

// Double-double helpers (error-free transformations). Plain Horner has an
// absolute noise floor ~ eps * |||q|||, which is fatal when integrating
// |q|^{-delta} within ~1e-8 of a multiple root: the true value h^m * C drops
// below the noise and the integrand reads as constant garbage. Compensated
// evaluation pushes the floor to ~1e-32 * |||q|||.
struct DD {
    double hi = 0.0, lo = 0.0;
};
inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}
inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return two_sum(s.hi, s.lo);
}
inline DD dd_mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
}

// Compensated complex Horner evaluation.
inline cplx eval_accurate(const ComplexPoly& p, cplx z) {
    const std::vector<cplx>& c = p.coeffs();
    if (c.empty()) return cplx(0.0);
    DD re{0.0, 0.0}, im{0.0, 0.0};
    double zr = z.real(), zi = z.imag();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        DD nre = dd_add(dd_add(dd_mul(re, zr), dd_mul(im, -zi)), DD{it->real(), 0.0});
        DD nim = dd_add(dd_add(dd_mul(re, zi), dd_mul(im, zr)), DD{it->imag(), 0.0});
        re = nre;
        im = nim;
    }
    return cplx(re.hi + re.lo, im.hi + im.lo);
}

// Newton polish of an approximate root of multiplicity m: iterate on the
// (m-1)-th derivative, whose root there is simple, with compensated
// residual evaluation.
inline cplx polish_root(const ComplexPoly& q, cplx x, int multiplicity) {
    ComplexPoly d = q.derivative(multiplicity - 1);
    if (d.is_zero() || d.degree() < 1) return x;
    ComplexPoly dp = d.derivative();
    for (int it = 0; it < 30; ++it) {
        cplx dv = dp(x);
        if (dv == cplx(0.0)) break;
        cplx step = eval_accurate(d, x) / dv;
        x -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
    }
    return x;
}

// Aberth-Ehrlich simultaneous iteration on the monic normalization.
inline std::vector<cplx> aberth_roots(const ComplexPoly& q, int max_iter = 600) {
    int n = q.degree();
    std::vector<cplx> a(q.coeffs());
    for (cplx& x : a) x /= q.leading();

    // Cauchy-style inclusion radius.
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;

    std::vector<cplx> z(n);
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n + 0.4;  // irrational-ish offset avoids symmetry traps
        z[i] = 0.7 * radius * std::polar(1.0, ang);
    }

    ComplexPoly p(a);
    ComplexPoly dp = p.derivative();
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx pv = p(z[i]);
            cplx dv = dp(z[i]);
            if (pv == cplx(0.0)) continue;
            cplx newton = (dv == cplx(0.0)) ? cplx(0.0) : pv / dv;
            cplx sum(0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            cplx denom = cplx(1.0) - newton * sum;
            cplx corr = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) return z;
    }
    // Accept if residuals are tiny anyway (multiple roots converge slowly
    // in the correction norm while the values are already fine).
    double scale = p.coeff_norm();
    for (int i = 0; i < n; ++i)
        if (std::abs(p(z[i])) > 1e-8 * scale * std::max(1.0, std::pow(std::abs(z[i]), n)))
            throw NonConvergence("root iteration budget exhausted");
    return z;
}

}  // namespace detail

// All complex roots of q, with roots closer than tol merged into a single
// entry at the cluster centroid carrying the cluster cardinality.
inline RootSet roots(const ComplexPoly& q, double tol) {
    if (q.is_zero() || q.degree() < 1) throw ZeroPolynomial("roots: need degree >= 1");
    std::vector<cplx> z = detail::aberth_roots(q);

    // Single-link clustering by the merge radius.
    int n = static_cast<int>(z.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= tol) parent[find(i)] = find(j);

    RootSet out;
    out.tol = tol;
    std::vector<int> seen(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (seen[r] < 0) {
            seen[r] = static_cast<int>(out.entries.size());
            out.entries.push_back({cplx(0.0), 0});
        }
        auto& e = out.entries[seen[r]];
        e.location += z[i];
        e.multiplicity += 1;
    }
    for (auto& e : out.entries) e.location /= static_cast<double>(e.multiplicity);
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

inline RootSet roots(const ComplexPoly& q) { return roots(q, default_root_tol(q)); }

// Coefficient-norm residual of the reconstruction prod (z-alpha)^m vs q/lead.
inline double reconstruction_residual(const ComplexPoly& q, const RootSet& s) {
    ComplexPoly rec = ComplexPoly::from_roots(s.expanded());
    ComplexPoly monic = q * (cplx(1.0) / q.leading());
    return (rec - monic).coeff_norm();
}

// Smallest nu with |p^(nu)(alpha)|/nu! above tol times the largest Taylor
// coefficient of p at alpha.
inline int vanishing_order(const ComplexPoly& p, cplx alpha, double tol) {
    if (p.is_zero()) throw ZeroPolynomial("vanishing_order of the zero polynomial");
    std::vector<cplx> t = p.taylor_at(alpha);
    double scale = 0.0;
    for (const cplx& x : t) scale = std::max(scale, std::abs(x));
    for (std::size_t k = 0; k < t.size(); ++k)
        if (std::abs(t[k]) > tol * scale) return static_cast<int>(k);
    return static_cast<int>(t.size()) - 1;  // unreachable for scale > 0
}

inline int vanishing_order(const ComplexPoly& p, cplx alpha) {
    return vanishing_order(p, alpha, 1e-8);
}

}  // namespace singint

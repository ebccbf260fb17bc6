#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "singint/errors.hpp"
#include "singint/polynomial.hpp"

namespace singint {

// Per-root local cluster scales L_0(alpha) >= ... >= L_{N-1}(alpha) = 0.
// L_k(alpha) is the smallest diameter of an (N-k)-element root sub-multiset
// containing alpha.
struct ScaleTable {
    std::vector<cplx> roots;                  // one row per distinct root of the set
    std::vector<std::vector<double>> scales;  // rows of length N
    std::string method;                       // "exact" | "greedy"

    const std::vector<double>& row_for(cplx alpha) const {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == alpha) return scales[i];
        throw Error("ScaleTable: root not in table");
    }
};

struct AbsoluteScales {
    std::vector<double> scales;  // L_k = min over roots of L_k(alpha)
};

namespace detail {

constexpr int kExactScaleGuard = 12;
constexpr int kDiscriminantGuard = 10;
constexpr int kTupleGuard = 8;

inline std::size_t root_index(const RootSet& s, cplx alpha) {
    for (std::size_t i = 0; i < s.entries.size(); ++i)
        if (s.entries[i].location == alpha) return i;
    throw Error("root not in RootSet");
}

}  // namespace detail

// Exact local scales by exhaustive enumeration over sub-multisets.
// Guarded at total multiplicity <= 12 (2^11 subsets of the other points).
inline std::vector<double> local_scales_exact(const RootSet& s, cplx alpha) {
    std::vector<cplx> pts = s.expanded();
    int n = static_cast<int>(pts.size());
    if (n > detail::kExactScaleGuard)
        throw TooLarge("local_scales_exact: N > 12, use the greedy variant");
    std::size_t ai = detail::root_index(s, alpha);
    // Move one copy of alpha to the front; enumerate subsets of the rest.
    std::vector<cplx> others;
    bool removed = false;
    for (const cplx& p : pts) {
        if (!removed && p == s.entries[ai].location) {
            removed = true;
            continue;
        }
        others.push_back(p);
    }
    int m = static_cast<int>(others.size());  // = n - 1

    // best[c] = min diameter over subsets of `others` of cardinality c,
    // together with alpha. Diameter needs all pairwise distances.
    std::vector<double> best(static_cast<std::size_t>(m) + 1,
                             std::numeric_limits<double>::infinity());
    best[0] = 0.0;
    std::vector<double> da(m);  // |alpha - others[i]|
    for (int i = 0; i < m; ++i) da[i] = std::abs(alpha - others[i]);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        int c = __builtin_popcount(mask);
        double diam = 0.0;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            diam = std::max(diam, da[i]);
            for (int j = i + 1; j < m; ++j)
                if (mask >> j & 1) diam = std::max(diam, std::abs(others[i] - others[j]));
        }
        best[c] = std::min(best[c], diam);
    }
    // Subset size n - k including alpha -> c = n - k - 1 others.
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) out[k] = best[static_cast<std::size_t>(n - k - 1)];
    return out;
}

// Farthest-first surrogate: order the other roots by decreasing distance to
// alpha (ties broken lexicographically on (re, im)) and return those
// distances. Within factor 2 of the exact table componentwise.
inline std::vector<double> local_scales_greedy(const RootSet& s, cplx alpha) {
    std::vector<cplx> pts = s.expanded();
    std::size_t ai = detail::root_index(s, alpha);
    std::vector<cplx> others;
    bool removed = false;
    for (const cplx& p : pts) {
        if (!removed && p == s.entries[ai].location) {
            removed = true;
            continue;
        }
        others.push_back(p);
    }
    std::sort(others.begin(), others.end(), [&](const cplx& a, const cplx& b) {
        double dA = std::abs(a - alpha), dB = std::abs(b - alpha);
        if (dA != dB) return dA > dB;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < others.size(); ++i) out[i] = std::abs(others[i] - alpha);
    out[pts.size() - 1] = 0.0;
    return out;
}

inline ScaleTable scale_table(const RootSet& s, bool force_greedy = false) {
    ScaleTable t;
    bool exact = !force_greedy && s.total_multiplicity() <= detail::kExactScaleGuard;
    t.method = exact ? "exact" : "greedy";
    for (const auto& e : s.entries) {
        t.roots.push_back(e.location);
        t.scales.push_back(exact ? local_scales_exact(s, e.location)
                                 : local_scales_greedy(s, e.location));
    }
    return t;
}

// Componentwise minimum of the local tables.
inline AbsoluteScales absolute_scales(const RootSet& s) {
    ScaleTable t = scale_table(s);
    AbsoluteScales out;
    out.scales.assign(t.scales.front().size(), std::numeric_limits<double>::infinity());
    for (const auto& row : t.scales)
        for (std::size_t k = 0; k < row.size(); ++k) out.scales[k] = std::min(out.scales[k], row[k]);
    return out;
}

// r-discriminant: the largest product of r pairwise-disjoint root distances.
inline double r_discriminant(const RootSet& s, int r) {
    std::vector<cplx> pts = s.expanded();
    int n = static_cast<int>(pts.size());
    if (2 * r > n) throw Error("r_discriminant: need 2r <= N");
    if (n > detail::kDiscriminantGuard) throw TooLarge("r_discriminant: N > 10");

    // The i/j order inside a pair and the order of the pairs do not change
    // the product, so enumerate sets of r disjoint unordered pairs.
    double best = 0.0;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int pairs_left, int from, double prod) -> void {
        if (pairs_left == 0) {
            best = std::max(best, prod);
            return;
        }
        // first free index from `from` anchors the next pair
        int i = from;
        while (i < n && used[i]) ++i;
        if (i == n) return;
        used[i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            self(self, pairs_left - 1, i + 1, prod * std::abs(pts[i] - pts[j]));
            used[j] = false;
        }
        used[i] = false;
        // the anchor may also sit out entirely
        self(self, pairs_left, i + 1, prod);
    };
    rec(rec, r, 0, 1.0);
    return best;
}

// Power-sum size functional: sum_r |sum_i gamma_i^r|^{1/r}, comparable to
// sum_i |gamma_i| with constants depending only on the count.
inline double power_sum_size(const std::vector<cplx>& gamma) {
    int n = static_cast<int>(gamma.size());
    double total = 0.0;
    for (int r = 1; r <= n; ++r) {
        cplx s(0.0);
        for (const cplx& g : gamma) s += std::pow(g, r);
        total += std::pow(std::abs(s), 1.0 / r);
    }
    return total;
}

// All ordered admissible 2r-tuple products prod (a_{i_v} - a_{j_v});
// these are exactly the roots of the tuple-product polynomial F_r.
inline std::vector<cplx> tuple_products(const RootSet& s, int r) {
    std::vector<cplx> pts = s.expanded();
    int n = static_cast<int>(pts.size());
    if (2 * r > n) throw Error("tuple_products: need 2r <= N");
    if (n > detail::kTupleGuard) throw TooLarge("tuple_products: N > 8");
    std::vector<cplx> out;
    std::vector<int> idx;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int depth, cplx prod) -> void {
        if (depth == r) {
            out.push_back(prod);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            for (int j = 0; j < n; ++j) {
                if (used[j]) continue;
                used[j] = true;
                self(self, depth + 1, prod * (pts[i] - pts[j]));
                used[j] = false;
            }
            used[i] = false;
        }
    };
    rec(rec, 0, cplx(1.0));
    return out;
}

// F_r(T) = prod over admissible tuples of (T - tuple product), expanded.
inline ComplexPoly f_r_poly(const RootSet& s, int r) {
    ComplexPoly f({cplx(1.0)});
    for (const cplx& g : tuple_products(s, r)) f = f * ComplexPoly({-g, cplx(1.0)});
    return f;
}

// sup over injective (k+1)-tuples of prod |alpha - alpha_{i_v}|: the product
// of the k+1 largest distances from alpha to the other roots (with
// multiplicity). Comparable to L_0(alpha)...L_k(alpha).
inline double sigma_scale_product(const RootSet& s, cplx alpha, int k) {
    std::vector<cplx> pts = s.expanded();
    int n = static_cast<int>(pts.size());
    if (k < 0 || k > n - 2) throw Error("sigma_scale_product: need 0 <= k <= N-2");
    if (n > detail::kTupleGuard) throw TooLarge("sigma_scale_product: N > 8");
    // Tuples index all N roots; alpha's own copies contribute zero factors,
    // so the sup picks the k+1 farthest entries of the full multiset.
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = std::abs(alpha - pts[i]);
    std::sort(d.rbegin(), d.rend());
    double prod = 1.0;
    for (int i = 0; i <= k; ++i) prod *= d[static_cast<std::size_t>(i)];
    return prod;
}

// Sum form of the same quantity: sum over ordered injective tuples, i.e.
// (k+1)! times the elementary symmetric polynomial e_{k+1} of the distances.
inline double sigma_scale_product_sum(const RootSet& s, cplx alpha, int k) {
    std::vector<cplx> pts = s.expanded();
    int n = static_cast<int>(pts.size());
    if (k < 0 || k > n - 2) throw Error("sigma_scale_product_sum: need 0 <= k <= N-2");
    if (n > detail::kTupleGuard) throw TooLarge("sigma_scale_product_sum: N > 8");
    std::vector<double> e(static_cast<std::size_t>(k) + 2, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        double di = std::abs(alpha - pts[i]);
        for (int j = std::min(k + 1, i + 1); j >= 1; --j) e[j] += e[j - 1] * di;
    }
    double fact = 1.0;
    for (int i = 2; i <= k + 1; ++i) fact *= i;
    return fact * e[static_cast<std::size_t>(k) + 1];
}

}  // namespace singint

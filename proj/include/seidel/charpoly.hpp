#pragma once

// Eigenvalues through the characteristic polynomial, independent of the
// Jacobi path. Intended as a test oracle for small orders only.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "seidel/symmetric_matrix.hpp"

namespace seidel {

inline constexpr std::size_t charpoly_max_order = 8;

// Polynomial coefficients, lowest degree first.
using Polynomial = std::vector<double>;

namespace poly {

inline std::size_t degree(const Polynomial& p) { return p.empty() ? 0 : p.size() - 1; }

inline double eval(const Polynomial& p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Polynomial derivative(const Polynomial& p) {
    if (p.size() <= 1) return {0.0};
    Polynomial d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

inline double max_abs_coefficient(const Polynomial& p) {
    double m = 0.0;
    for (auto c : p) m = std::max(m, std::abs(c));
    return m;
}

// Drops leading coefficients with |c| <= zero_tol, keeping at least one term.
inline void trim(Polynomial& p, double zero_tol) {
    while (p.size() > 1 && std::abs(p.back()) <= zero_tol) p.pop_back();
}

inline void normalize(Polynomial& p) {
    const double m = max_abs_coefficient(p);
    if (m > 0.0)
        for (auto& c : p) c /= m;
}

inline bool is_zero(const Polynomial& p, double zero_tol) {
    return std::all_of(p.begin(), p.end(), [&](double c) { return std::abs(c) <= zero_tol; });
}

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivisionResult divide(Polynomial num, const Polynomial& den) {
    if (den.empty() || den.back() == 0.0) throw std::invalid_argument("poly::divide: zero divisor");
    if (num.size() < den.size()) return {{0.0}, num};
    Polynomial q(num.size() - den.size() + 1, 0.0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const double coef = num[k + den.size() - 1] / den.back();
        q[k] = coef;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= coef * den[j];
    }
    if (den.size() == 1)
        num.assign(1, 0.0);
    else
        num.resize(den.size() - 1);
    return {q, num};
}

} // namespace poly

// Faddeev-LeVerrier: det(xI - M) as coefficients c_0..c_n with c_n = 1.
inline Polynomial characteristic_polynomial(const SymmetricMatrix& m) {
    const std::size_t n = m.order();
    Polynomial c(n + 1, 0.0);
    c[n] = 1.0;
    std::vector<double> a = m.dense();
    std::vector<double> mk(n * n, 0.0); // M_0 = 0
    std::vector<double> next(n * n, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * mk[l * n + j];
                next[i * n + j] = s + (i == j ? c[n - k + 1] : 0.0);
            }
        mk.swap(next);
        // c_{n-k} = -tr(A M_k) / k
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * mk[l * n + i];
        c[n - k] = -tr / static_cast<double>(k);
    }
    return c;
}

// Sturm chain p, p', -rem(p_{k-1}, p_k), ... with remainders below
// `zero_tol` (relative to the dividend) treated as exact zeros. The final
// entry is a constant multiple of gcd(p, p').
inline std::vector<Polynomial> sturm_chain(const Polynomial& p, double zero_tol = 1e-9) {
    std::vector<Polynomial> chain{p, poly::derivative(p)};
    poly::normalize(chain[1]);
    while (poly::degree(chain.back()) > 0) {
        const auto& prev = chain[chain.size() - 2];
        const auto& cur = chain.back();
        auto r = poly::divide(prev, cur).remainder;
        const double scale = std::max(poly::max_abs_coefficient(prev), poly::max_abs_coefficient(cur));
        if (poly::is_zero(r, zero_tol * scale)) break;
        for (auto& c : r) c = -c;
        poly::trim(r, zero_tol * scale * 1e-3);
        poly::normalize(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

// Number of sign changes of the chain at x; zeros are skipped.
inline int sturm_sign_changes(const std::vector<Polynomial>& chain, double x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const double v = poly::eval(q, x);
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

namespace detail {

// Distinct roots of p inside (lo, hi], located with Sturm counts and bisected
// down to `width`.
inline void isolate_roots(const std::vector<Polynomial>& chain, double lo, double hi, int v_lo, int v_hi, double width,
                          std::vector<double>& out) {
    const int count = v_lo - v_hi;
    if (count <= 0) return;
    if (hi - lo <= width) {
        out.insert(out.end(), static_cast<std::size_t>(count), 0.5 * (lo + hi));
        return;
    }
    if (count == 1) {
        while (hi - lo > width) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const int v_mid = sturm_sign_changes(chain, mid);
            if (v_lo - v_mid >= 1)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
        return;
    }
    const double mid = 0.5 * (lo + hi);
    const int v_mid = sturm_sign_changes(chain, mid);
    isolate_roots(chain, lo, mid, v_lo, v_mid, width, out);
    isolate_roots(chain, mid, hi, v_mid, v_hi, width, out);
}

// All real roots of p counted with multiplicity: p = q * g where
// g = gcd(p, p') and q = p / g is square-free, so roots(p) = roots(q) + roots(g).
inline void roots_with_multiplicity(Polynomial p, double lo, double hi, double width, std::vector<double>& out,
                                    int depth = 0) {
    poly::trim(p, 0.0);
    if (poly::degree(p) == 0) return;
    poly::normalize(p);
    if (poly::degree(p) == 1) {
        out.push_back(-p[0] / p[1]);
        return;
    }
    auto chain = sturm_chain(p);
    Polynomial g = chain.back();
    if (poly::degree(g) == 0 || depth > 16) {
        isolate_roots(chain, lo, hi, sturm_sign_changes(chain, lo), sturm_sign_changes(chain, hi), width, out);
        return;
    }
    auto q = poly::divide(p, g).quotient;
    poly::normalize(q);
    auto q_chain = sturm_chain(q);
    isolate_roots(q_chain, lo, hi, sturm_sign_changes(q_chain, lo), sturm_sign_changes(q_chain, hi), width, out);
    roots_with_multiplicity(g, lo, hi, width, out, depth + 1);
}

} // namespace detail

// Eigenvalues of a symmetric matrix of order <= 8 via its characteristic
// polynomial, root isolation inside the Gershgorin interval, and bisection to
// width 1e-12.
inline Spectrum charpoly_eigen_oracle(const SymmetricMatrix& m) {
    const std::size_t n = m.order();
    if (n > charpoly_max_order)
        throw std::invalid_argument("charpoly_eigen_oracle: order " + std::to_string(n) + " exceeds " +
                                    std::to_string(charpoly_max_order));
    if (n == 0) return Spectrum(std::vector<double>{});

    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) radius += std::abs(m(i, j));
        lo = std::min(lo, m(i, i) - radius);
        hi = std::max(hi, m(i, i) + radius);
    }
    // Widen so no root sits on an endpoint.
    const double pad = 1e-3 * std::max(1.0, hi - lo) + 1e-6;
    lo -= pad;
    hi += pad;

    std::vector<double> roots;
    detail::roots_with_multiplicity(characteristic_polynomial(m), lo, hi, 1e-12, roots);
    if (roots.size() != n)
        throw std::runtime_error("charpoly_eigen_oracle: found " + std::to_string(roots.size()) +
                                 " roots for order " + std::to_string(n));
    return Spectrum(std::move(roots));
}

} // namespace seidel

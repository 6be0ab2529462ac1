#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/jacobi.hpp"
#include "seidel/symmetric_matrix.hpp"

namespace seidel {

// For symmetric input the singular values are the absolute eigenvalues.
inline std::vector<double> singular_values_symmetric(const SymmetricMatrix& m) {
    std::vector<double> s;
    s.reserve(m.order());
    for (auto v : jacobi_eigenvalues(m)) s.push_back(std::abs(v));
    std::sort(s.begin(), s.end(), std::greater<>{});
    return s;
}

// Sum of singular values.
inline double matrix_energy(const SymmetricMatrix& m) { return jacobi_eigenvalues(m).sum_of_abs(); }

// Both eigenvalues of [[a, rho], [rho, b]], larger first.
inline std::pair<double, double> symmetric_2x2_eigenvalues(double a, double b, double rho) {
    const double mean = 0.5 * (a + b);
    const double radius = std::hypot(0.5 * (a - b), rho);
    return {mean + radius, mean - radius};
}

// Spectrum of [[A, rho u v^T], [rho v u^T, B]] where u, v are unit
// eigenvectors of A, B for alpha1, beta1: the remaining eigenvalues of A and
// B plus the two eigenvalues of [[alpha1, rho], [rho, beta1]].
inline Spectrum fiedler_spectrum(double alpha1, const Spectrum& rest_a, double beta1, const Spectrum& rest_b,
                                 double rho) {
    auto [g1, g2] = symmetric_2x2_eigenvalues(alpha1, beta1, rho);
    auto merged = merge(rest_a, rest_b);
    auto values = merged.values();
    values.push_back(g1);
    values.push_back(g2);
    return Spectrum(std::move(values), merged.tolerance());
}

// Assembles the coupled block matrix for arbitrary unit vectors u, v.
inline SymmetricMatrix fiedler_block_matrix(const SymmetricMatrix& a, std::span<const double> u,
                                            const SymmetricMatrix& b, std::span<const double> v, double rho) {
    const auto m = a.order();
    const auto n = b.order();
    if (u.size() != m || v.size() != n) throw std::invalid_argument("fiedler_block_matrix: vector length mismatch");
    SymmetricMatrix c(m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) c.set(i, j, a(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c.set(m + i, m + j, b(i, j));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) c.set(i, m + j, rho * u[i] * v[j]);
    return c;
}

// E(A) + E(B) - E(A + B); non-negative up to rounding.
inline double fan_inequality_check(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("fan_inequality_check: order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    return matrix_energy(a) + matrix_energy(b) - matrix_energy(a + b);
}

} // namespace seidel

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "seidel/symmetric_matrix.hpp"

namespace seidel {

class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct JacobiOptions {
    double relative_tolerance = 1e-12; // on off-diagonal Frobenius norm, relative to ||M||_F
    int max_sweeps = 100;
    bool want_vectors = false;
};

struct EigenDecomposition {
    Spectrum values;
    // Row-major n*n; column k is the unit eigenvector of values[k]. Empty
    // unless vectors were requested.
    std::vector<double> vectors;
    int sweeps = 0;

    double vector_entry(std::size_t row, std::size_t col) const { return vectors[row * values.size() + col]; }
};

// Cyclic Jacobi with row-wise sweeps over (p, q), p < q.
inline EigenDecomposition jacobi_eigen(const SymmetricMatrix& m, const JacobiOptions& opts = {}) {
    const std::size_t n = m.order();
    std::vector<double> a = m.dense();
    std::vector<double> v;
    if (opts.want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    const double threshold = opts.relative_tolerance * m.frobenius_norm();
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    for (;; ++sweep) {
        if (off_norm() <= threshold) break;
        if (sweep >= opts.max_sweeps)
            throw ConvergenceError("jacobi_eigen: no convergence after " + std::to_string(opts.max_sweeps) +
                                   " sweeps (order " + std::to_string(n) + ")");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = c * arp - s * arq;
                    at(r, q) = at(q, r) = s * arp + c * arq;
                }
                if (opts.want_vectors) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = v[r * n + p];
                        const double vrq = v[r * n + q];
                        v[r * n + p] = c * vrp - s * vrq;
                        v[r * n + q] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return at(x, x) > at(y, y); });

    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = at(perm[k], perm[k]);

    EigenDecomposition out;
    out.values = Spectrum(std::move(values));
    out.sweeps = sweep;
    if (opts.want_vectors) {
        out.vectors.assign(n * n, 0.0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) out.vectors[r * n + k] = v[r * n + perm[k]];
    }
    return out;
}

inline Spectrum jacobi_eigenvalues(const SymmetricMatrix& m) { return jacobi_eigen(m).values; }

} // namespace seidel

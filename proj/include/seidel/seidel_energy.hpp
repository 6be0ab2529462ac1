#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seidel/jacobi.hpp"
#include "seidel/looped_graph.hpp"
#include "seidel/symmetric_matrix.hpp"

namespace seidel {

// Off-diagonal -1 for adjacent pairs, +1 otherwise; -1 on the diagonal at
// loop vertices, 0 elsewhere.
inline SymmetricMatrix seidel_matrix(const LoopedGraph& g) {
    const auto n = g.order();
    SymmetricMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.set(i, i, g.has_loop(i) ? -1.0 : 0.0);
        for (std::size_t j = i + 1; j < n; ++j) s.set(i, j, g.adjacent(i, j) ? -1.0 : 1.0);
    }
    return s;
}

inline SymmetricMatrix adjacency_matrix(const LoopedGraph& g) {
    const auto n = g.order();
    SymmetricMatrix a(n);
    for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

// S(g) + (sigma/n) I, the matrix whose energy is the Seidel energy of g.
inline SymmetricMatrix shifted_seidel(const LoopedGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("shifted_seidel: graph of order 0 has no shift");
    auto s = seidel_matrix(g);
    s.add_to_diagonal(static_cast<double>(g.loop_count()) / static_cast<double>(g.order()));
    return s;
}

inline Spectrum seidel_spectrum(const LoopedGraph& g) { return jacobi_eigenvalues(seidel_matrix(g)); }

struct EnergyReport {
    std::size_t sigma = 0;
    std::size_t n = 0;
    double shift = 0.0;
    Spectrum shifted_eigenvalues;
    double energy = 0.0;
};

// Sum of |theta_i + sigma/n|, evaluated as the energy of the shifted matrix.
inline EnergyReport seidel_energy(const LoopedGraph& g) {
    EnergyReport r;
    r.sigma = g.loop_count();
    r.n = g.order();
    if (r.n == 0) return r;
    r.shift = static_cast<double>(r.sigma) / static_cast<double>(r.n);
    r.shifted_eigenvalues = jacobi_eigenvalues(shifted_seidel(g));
    r.energy = r.shifted_eigenvalues.sum_of_abs();
    return r;
}

// Seidel spectrum of an r-regular graph from its adjacency spectrum: the
// all-ones eigenvalue r maps to n-1-2r, every other adjacency eigenvalue
// lambda maps to -1-2*lambda.
inline Spectrum regular_seidel_spectrum(std::size_t n, std::size_t r, const Spectrum& adjacency_spectrum,
                                        double tol = default_spectrum_tolerance) {
    if (adjacency_spectrum.size() != n)
        throw std::invalid_argument("regular_seidel_spectrum: spectrum has " +
                                    std::to_string(adjacency_spectrum.size()) + " values, order is " +
                                    std::to_string(n));
    const double rd = static_cast<double>(r);
    if (n == 0 || std::abs(adjacency_spectrum[0] - rd) > tol)
        throw std::invalid_argument("regular_seidel_spectrum: degree " + std::to_string(r) +
                                    " is not the largest adjacency eigenvalue");
    std::vector<double> out;
    out.reserve(n);
    out.push_back(static_cast<double>(n) - 1.0 - 2.0 * rd);
    for (std::size_t i = 1; i < n; ++i) out.push_back(-1.0 - 2.0 * adjacency_spectrum[i]);
    return Spectrum(std::move(out), adjacency_spectrum.tolerance());
}

class NotRegularError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Raised when some non-regular Seidel eigenvalue has magnitude below 1/2.
class UnionHypothesisError : public std::domain_error {
  public:
    explicit UnionHypothesisError(double eigenvalue)
        : std::domain_error("union energy hypothesis violated: Seidel eigenvalue " + std::to_string(eigenvalue) +
                            " has magnitude below 1/2"),
          eigenvalue_(eigenvalue) {}

    double eigenvalue() const noexcept { return eigenvalue_; }

  private:
    double eigenvalue_;
};

// The Seidel spectrum of a simple regular graph split into the eigenvalue
// n-1-2r of the all-ones vector and the rest.
struct RegularSplit {
    std::size_t degree = 0;
    double theta_regular = 0.0;
    Spectrum spectrum;
    Spectrum rest;
    std::optional<double> offending; // first rest value with |theta| < 1/2
};

inline RegularSplit split_regular_spectrum(const LoopedGraph& g, double tol = default_spectrum_tolerance) {
    if (g.loop_count() != 0) throw std::invalid_argument("split_regular_spectrum: graph must be loop-free");
    if (g.order() == 0) throw std::invalid_argument("split_regular_spectrum: graph of order 0");
    const auto r = regularity(g);
    if (!r) throw NotRegularError("graph is not regular");

    RegularSplit out;
    out.degree = *r;
    out.theta_regular = static_cast<double>(g.order()) - 1.0 - 2.0 * static_cast<double>(*r);
    out.spectrum = seidel_spectrum(g);
    auto [rest, found] = out.spectrum.without_one(out.theta_regular, 1e3 * tol);
    if (!found)
        throw std::runtime_error("split_regular_spectrum: eigenvalue n-1-2r = " + std::to_string(out.theta_regular) +
                                 " not found in the computed spectrum");
    out.rest = std::move(rest);
    for (auto v : out.rest)
        if (std::abs(v) < 0.5 - tol) {
            out.offending = v;
            break;
        }
    return out;
}

inline double union_radius(std::size_t n) {
    const double nd = static_cast<double>(n);
    return std::sqrt(nd * nd + 0.25);
}

// Closed-form Seidel energy of G u G' (G' = G with every vertex looped) for a
// simple r-regular G whose other Seidel eigenvalues all have magnitude >= 1/2:
//   2 SE(G) + 2 (max{|theta_reg|, R} - |theta_reg|),  R = sqrt(n^2 + 1/4).
inline double union_energy_formula(const LoopedGraph& g) {
    const auto split = split_regular_spectrum(g);
    if (split.offending) throw UnionHypothesisError(*split.offending);
    const double se = split.spectrum.sum_of_abs();
    const double a = std::abs(split.theta_regular);
    return 2.0 * se + 2.0 * (std::max(a, union_radius(g.order())) - a);
}

// G u G' and G join G', the two looped graphs the union formula is about.
inline LoopedGraph looped_union(const LoopedGraph& g) {
    return disjoint_union(underlying(g), add_loops(g, VertexSet::all(g.order())));
}

inline LoopedGraph looped_join(const LoopedGraph& g) {
    return join(underlying(g), add_loops(g, VertexSet::all(g.order())));
}

} // namespace seidel

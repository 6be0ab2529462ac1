#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seidel {

// Dense real symmetric matrix. Only the upper triangle is stored, so
// (i, j) and (j, i) always refer to the same cell.
class SymmetricMatrix {
  public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), cells_(n * (n + 1) / 2, 0.0) {}

    static SymmetricMatrix identity(std::size_t n) {
        SymmetricMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
        return m;
    }

    static SymmetricMatrix diagonal(const std::vector<double>& d) {
        SymmetricMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
        return m;
    }

    static SymmetricMatrix all_ones(std::size_t n) {
        SymmetricMatrix m(n);
        std::fill(m.cells_.begin(), m.cells_.end(), 1.0);
        return m;
    }

    // Builds from a row-major square array; throws unless it is exactly symmetric.
    static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        const auto n = rows.size();
        SymmetricMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw std::invalid_argument("SymmetricMatrix: rows are not square");
            for (std::size_t j = i; j < n; ++j) {
                if (rows[i][j] != rows[j][i]) throw std::invalid_argument("SymmetricMatrix: input is not symmetric");
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    std::size_t order() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return cells_[index(i, j)]; }

    void set(std::size_t i, std::size_t j, double value) {
        if (i >= n_ || j >= n_) throw std::out_of_range("SymmetricMatrix: index out of range");
        if (!std::isfinite(value)) throw std::invalid_argument("SymmetricMatrix: entries must be finite");
        cells_[index(i, j)] = value;
    }

    double trace() const noexcept {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm_squared() const noexcept {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
        return s;
    }

    double frobenius_norm() const noexcept { return std::sqrt(frobenius_norm_squared()); }

    // Row-major n*n copy.
    std::vector<double> dense() const {
        std::vector<double> out(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = (*this)(i, j);
        return out;
    }

    SymmetricMatrix& operator+=(const SymmetricMatrix& rhs) { return combine(rhs, std::plus<>{}); }
    SymmetricMatrix& operator-=(const SymmetricMatrix& rhs) { return combine(rhs, std::minus<>{}); }

    SymmetricMatrix& operator*=(double s) {
        for (auto& c : cells_) c *= s;
        return *this;
    }

    SymmetricMatrix& add_to_diagonal(double shift) {
        for (std::size_t i = 0; i < n_; ++i) cells_[index(i, i)] += shift;
        return *this;
    }

    friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
    friend SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
    friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }
    friend SymmetricMatrix operator-(SymmetricMatrix a) { return a *= -1.0; }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

  private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i + 1) / 2 + j;
    }

    template <typename Op>
    SymmetricMatrix& combine(const SymmetricMatrix& rhs, Op op) {
        if (rhs.n_ != n_)
            throw std::invalid_argument("SymmetricMatrix: order mismatch (" + std::to_string(n_) + " vs " +
                                        std::to_string(rhs.n_) + ")");
        for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] = op(cells_[k], rhs.cells_[k]);
        return *this;
    }

    std::size_t n_ = 0;
    std::vector<double> cells_;
};

// Largest absolute entrywise difference; infinity on an order mismatch.
inline double max_abs_difference(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.order() != b.order()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i; j < a.order(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

inline constexpr double default_spectrum_tolerance = 1e-9;

// Multiset of real eigenvalues kept in descending order.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values, double tol = default_spectrum_tolerance)
        : values_(std::move(values)), tol_(tol) {
        if (tol_ < 0.0) throw std::invalid_argument("Spectrum: tolerance must be non-negative");
        std::sort(values_.begin(), values_.end(), std::greater<>{});
    }

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double tolerance() const noexcept { return tol_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    double sum() const noexcept {
        double s = 0.0;
        for (auto v : values_) s += v;
        return s;
    }

    double sum_of_squares() const noexcept {
        double s = 0.0;
        for (auto v : values_) s += v * v;
        return s;
    }

    double sum_of_abs() const noexcept {
        double s = 0.0;
        for (auto v : values_) s += std::abs(v);
        return s;
    }

    // Copy with exactly one value within `tol` of `value` removed (the closest
    // one). The flag is false, and the copy unchanged, when nothing matched.
    std::pair<Spectrum, bool> without_one(double value, double tol) const {
        std::size_t best = values_.size();
        double best_gap = tol;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            const double gap = std::abs(values_[i] - value);
            if (gap <= best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        if (best == values_.size()) return {*this, false};
        auto rest = values_;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
        return {Spectrum(std::move(rest), tol_), true};
    }

    Spectrum shifted(double delta) const {
        auto v = values_;
        for (auto& x : v) x += delta;
        return Spectrum(std::move(v), tol_);
    }

    // Multiset union.
    friend Spectrum merge(const Spectrum& a, const Spectrum& b) {
        auto v = a.values_;
        v.insert(v.end(), b.values_.begin(), b.values_.end());
        return Spectrum(std::move(v), std::max(a.tol_, b.tol_));
    }

  private:
    std::vector<double> values_;
    double tol_ = default_spectrum_tolerance;
};

// Elementwise max |a_i - b_i| after sorting; infinity when sizes differ.
inline double spectral_distance(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline bool cospectral(const Spectrum& a, const Spectrum& b, double tol) { return spectral_distance(a, b) <= tol; }

inline bool cospectral(const Spectrum& a, const Spectrum& b) {
    return cospectral(a, b, std::max(a.tolerance(), b.tolerance()));
}

} // namespace seidel

#pragma once

// Empirical checks of the looped Seidel energy results: the two-sided bound
// SE(G) -/+ 2 sigma (1 - sigma/n), invariance under looped complement and
// looped switching, and the closed form for G u G' together with the
// cospectral join G v G'.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "seidel/graph_io.hpp"
#include "seidel/looped_graph.hpp"
#include "seidel/seidel_energy.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

inline constexpr double theorem_tolerance = 1e-9;
inline constexpr double union_tolerance = 1e-8;
inline constexpr std::size_t exhaustive_max_order = 6;

// Exact rational, enough for the bound width at small orders.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational abs(Rational a) { return {a.num < 0 ? -a.num : a.num, a.den}; }
    friend bool operator==(const Rational&, const Rational&) = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// 2 sigma (1 - sigma/n) = 2 sigma (n - sigma) / n.
inline Rational bound_width_exact(std::size_t n, std::size_t sigma) {
    if (n == 0) return {0};
    const auto nn = static_cast<std::int64_t>(n);
    const auto s = static_cast<std::int64_t>(sigma);
    return {2 * s * (nn - s), nn};
}

// Diagonal of E with S(G_W) + (sigma/n) I = S(G) + E: sigma/n - 1 on W and
// sigma/n elsewhere.
inline std::vector<Rational> perturbation_diagonal_exact(std::size_t n, const VertexSet& w) {
    if (w.universe() != n) throw std::invalid_argument("perturbation_diagonal_exact: set bound to another order");
    const Rational shift{static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(std::max<std::size_t>(n, 1))};
    std::vector<Rational> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(w.contains(i) ? shift - Rational{1} : shift);
    return d;
}

inline Rational perturbation_energy_exact(std::size_t n, const VertexSet& w) {
    Rational total{0};
    for (const auto& e : perturbation_diagonal_exact(n, w)) total = total + abs(e);
    return total;
}

inline SymmetricMatrix perturbation_matrix(std::size_t n, const VertexSet& w) {
    std::vector<double> d;
    for (const auto& e : perturbation_diagonal_exact(n, w)) d.push_back(e.to_double());
    return SymmetricMatrix::diagonal(d);
}

struct BoundRecord {
    std::string instance; // graph6 of G_W with loop sidecar
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t edges = 0;
    double se_simple = 0.0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double slack_low = 0.0;
    double slack_high = 0.0;
    double perturbation_energy = 0.0; // sum of singular values of E, computed numerically
    double tolerance = theorem_tolerance;
    bool equality_low = false;
    bool equality_high = false;
    bool nonempty = false;

    bool violation() const { return slack_low < -tolerance || slack_high < -tolerance; }
    bool extreme_sigma() const { return sigma == 0 || sigma == n; }
    bool equality() const { return equality_low || equality_high; }
    // Equality cannot hold here, so a slack inside the dead-band needs a look.
    bool review() const { return nonempty && !extreme_sigma() && equality(); }
};

// Bound check for G_W against its loop-free G. `se_simple` may carry a
// precomputed SE(G) to avoid re-solving it per loop subset.
inline BoundRecord check_bounds(const LoopedGraph& g_simple, const VertexSet& w,
                                std::optional<double> se_simple = std::nullopt, double tol = theorem_tolerance) {
    if (g_simple.loop_count() != 0) throw std::invalid_argument("check_bounds: underlying graph must be loop-free");
    detail::require_bound(g_simple, w, "check_bounds");

    const auto looped = add_loops(g_simple, w);
    BoundRecord r;
    r.instance = emit_graph6(looped);
    r.n = g_simple.order();
    r.sigma = w.size();
    r.edges = g_simple.edge_count();
    r.nonempty = r.edges > 0;
    r.tolerance = tol;
    r.se_simple = se_simple ? *se_simple : seidel_energy(g_simple).energy;
    r.value = seidel_energy(looped).energy;
    const double width = bound_width_exact(r.n, r.sigma).to_double();
    r.lower = r.se_simple - width;
    r.upper = r.se_simple + width;
    r.slack_low = r.value - r.lower;
    r.slack_high = r.upper - r.value;
    r.equality_low = std::abs(r.slack_low) <= tol;
    r.equality_high = std::abs(r.slack_high) <= tol;
    r.perturbation_energy = r.n == 0 ? 0.0 : matrix_energy(perturbation_matrix(r.n, w));
    return r;
}

enum class Verdict { pass, fail, hypothesis_violation };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_violation: return "hypothesis_violation";
    }
    return "?";
}

struct TheoremRecord {
    std::string theorem;
    std::string instance;
    std::optional<double> energy_delta;
    std::optional<double> spectral_delta;
    std::optional<double> identity_delta;
    std::optional<double> formula_delta;
    std::optional<double> fiedler_delta;
    double tolerance = theorem_tolerance;
    bool pass = false;
    Verdict verdict = Verdict::fail;
    std::optional<std::uint64_t> seed;
    std::string note;

    // pass <=> every recorded delta is within tolerance.
    void finalize() {
        pass = true;
        for (const auto& d : {energy_delta, spectral_delta, identity_delta, formula_delta, fiedler_delta})
            if (d && !(*d <= tolerance)) pass = false;
        if (verdict != Verdict::hypothesis_violation) verdict = pass ? Verdict::pass : Verdict::fail;
    }

    bool failed() const { return !pass; }
};

namespace detail {
inline std::string describe_set(const VertexSet& x) {
    std::string s;
    for (auto v : x.members()) {
        if (!s.empty()) s += ',';
        s += std::to_string(v);
    }
    return s;
}
} // namespace detail

// SE(complement) = SE(G_W), with the eigenvalue map theta -> -theta - 1 and
// the matrix identity S(complement) = -S(G_W) - I checked alongside.
inline TheoremRecord check_complement_invariance(const LoopedGraph& g, double tol = theorem_tolerance) {
    TheoremRecord rec;
    rec.theorem = "complement";
    rec.instance = emit_graph6(g);
    rec.tolerance = tol;
    const auto h = complement(g);

    rec.energy_delta = std::abs(seidel_energy(h).energy - seidel_energy(g).energy);

    std::vector<double> mapped;
    for (auto t : seidel_spectrum(g)) mapped.push_back(-t - 1.0);
    rec.spectral_delta = spectral_distance(seidel_spectrum(h), Spectrum(std::move(mapped)));

    auto expected = -seidel_matrix(g);
    expected.add_to_diagonal(-1.0);
    rec.identity_delta = max_abs_difference(seidel_matrix(h), expected);
    rec.finalize();
    return rec;
}

// Diagonal +-1 matrix with -1 exactly on X.
inline std::vector<double> switching_signs(const VertexSet& x) {
    std::vector<double> d(x.universe(), 1.0);
    for (auto v : x.members()) d[v] = -1.0;
    return d;
}

inline TheoremRecord check_switching_cospectral(const LoopedGraph& g, const VertexSet& x,
                                                double tol = theorem_tolerance) {
    TheoremRecord rec;
    rec.theorem = "switching";
    rec.instance = emit_graph6(g) + ";X=" + detail::describe_set(x);
    rec.tolerance = tol;
    const auto h = seidel_switch(g, x);
    const auto s = seidel_matrix(g);
    const auto sh = seidel_matrix(h);

    rec.spectral_delta = spectral_distance(jacobi_eigenvalues(s), jacobi_eigenvalues(sh));
    rec.energy_delta = std::abs(seidel_energy(h).energy - seidel_energy(g).energy);

    const auto d = switching_signs(x);
    SymmetricMatrix similar(s.order());
    for (std::size_t i = 0; i < s.order(); ++i)
        for (std::size_t j = i; j < s.order(); ++j) similar.set(i, j, d[i] * s(i, j) * d[j]);
    rec.identity_delta = max_abs_difference(similar, sh);
    rec.finalize();
    return rec;
}

// Union theorem for a simple regular G:
//   formula_delta  closed form vs direct eigensolve of G u G'
//   fiedler_delta  block-lemma spectrum vs direct eigensolve of the shifted
//                  union matrix, and the block assembly itself
//   spectral_delta Seidel spectra of G u G' vs G v G'
//   energy_delta   their Seidel energies
//   identity_delta 0 iff G v G' equals G u G' switched on V(G), as graphs
// A graph outside the 1/2 hypothesis gets verdict hypothesis_violation and no
// formula_delta; the remaining deltas are still checked.
inline TheoremRecord check_union_theorem(const LoopedGraph& g, double tol = union_tolerance) {
    if (g.loop_count() != 0) throw std::invalid_argument("check_union_theorem: graph must be loop-free");
    TheoremRecord rec;
    rec.theorem = "union";
    rec.instance = emit_graph6(g);
    rec.tolerance = tol;

    const auto split = split_regular_spectrum(g); // throws NotRegularError
    const auto n = g.order();
    const auto u = looped_union(g);
    const auto j = looped_join(g);
    const auto direct = seidel_energy(u).energy;

    if (split.offending) {
        rec.verdict = Verdict::hypothesis_violation;
        rec.note = "eigenvalue " + std::to_string(*split.offending) + " has magnitude below 1/2";
    } else {
        rec.formula_delta = std::abs(union_energy_formula(g) - direct);
    }

    const double nd = static_cast<double>(n);
    const auto shifted_union = shifted_seidel(u);
    const auto via_lemma = fiedler_spectrum(split.theta_regular + 0.5, split.rest.shifted(0.5),
                                            split.theta_regular - 0.5, split.rest.shifted(-0.5), nd);
    const std::vector<double> unit(n, 1.0 / std::sqrt(nd));
    auto block_a = seidel_matrix(g);
    block_a.add_to_diagonal(0.5);
    auto block_b = seidel_matrix(g);
    block_b.add_to_diagonal(-0.5);
    const auto assembled = fiedler_block_matrix(block_a, unit, block_b, unit, nd);
    rec.fiedler_delta = std::max(spectral_distance(via_lemma, jacobi_eigenvalues(shifted_union)),
                                 max_abs_difference(assembled, shifted_union));

    rec.spectral_delta = spectral_distance(seidel_spectrum(u), seidel_spectrum(j));
    rec.energy_delta = std::abs(seidel_energy(j).energy - direct);

    VertexSet first_copy(2 * n);
    for (std::size_t v = 0; v < n; ++v) first_copy.insert(v);
    rec.identity_delta = (seidel_switch(u, first_copy) == j) ? 0.0 : 1.0;
    rec.finalize();
    return rec;
}

// ---------------------------------------------------------------------------
// Scanner

enum class ScanMode { exhaustive, random };

struct ScanOptions {
    std::size_t max_order = 4;
    // Smallest order scanned. Defaults to max_order in exhaustive mode and to
    // 1 in random mode.
    std::optional<std::size_t> min_order;
    ScanMode mode = ScanMode::exhaustive;
    std::size_t sample = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 0; // 0 = default_thread_count()
    bool bounds = true;
    bool complement = true;
    bool switching = true;
    double tolerance = theorem_tolerance;
};

struct ScanSummary {
    std::size_t bound_records = 0;
    std::size_t violations = 0;
    std::size_t review = 0;
    std::size_t equality_cases = 0;
    std::size_t equality_extreme = 0; // sigma in {0, n}
    std::size_t equality_empty_graph = 0;
    std::size_t theorem_records = 0;
    std::size_t theorem_failures = 0;
    // Smallest slack per order over non-empty G with 0 < sigma < n.
    std::map<std::size_t, double> min_interior_slack;

    void add(const BoundRecord& r) {
        ++bound_records;
        if (r.violation()) ++violations;
        if (r.review()) ++review;
        if (r.equality()) {
            ++equality_cases;
            if (r.extreme_sigma()) ++equality_extreme;
            if (!r.nonempty) ++equality_empty_graph;
        }
        if (r.nonempty && !r.extreme_sigma()) {
            const double s = std::min(r.slack_low, r.slack_high);
            auto [it, inserted] = min_interior_slack.try_emplace(r.n, s);
            if (!inserted) it->second = std::min(it->second, s);
        }
    }

    void add(const TheoremRecord& r) {
        ++theorem_records;
        if (r.failed()) ++theorem_failures;
    }

    ScanSummary& operator+=(const ScanSummary& o) {
        bound_records += o.bound_records;
        violations += o.violations;
        review += o.review;
        equality_cases += o.equality_cases;
        equality_extreme += o.equality_extreme;
        equality_empty_graph += o.equality_empty_graph;
        theorem_records += o.theorem_records;
        theorem_failures += o.theorem_failures;
        for (auto [n, s] : o.min_interior_slack) {
            auto [it, inserted] = min_interior_slack.try_emplace(n, s);
            if (!inserted) it->second = std::min(it->second, s);
        }
        return *this;
    }
};

struct ScanReport {
    std::vector<BoundRecord> bounds;
    std::vector<TheoremRecord> theorems;
    ScanSummary summary;
};

// SEIDEL_THREADS if set to a positive integer, else 1.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("SEIDEL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// Independent stream per instance, so records do not depend on scheduling.
inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

inline bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

inline VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

// G(n, 1/2) on labeled vertices.
inline LoopedGraph random_graph(std::size_t n, std::mt19937_64& rng) {
    LoopedGraph g(n);
    for (std::size_t k = 0; k < LoopedGraph::pair_count(n); ++k) g.set_pair_bit(k, coin(rng));
    return g;
}

// Labeled graph on n <= 11 vertices whose upper-triangle bits are `mask`.
inline LoopedGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
    LoopedGraph g(n);
    for (std::size_t k = 0; k < LoopedGraph::pair_count(n); ++k) g.set_pair_bit(k, ((mask >> k) & 1U) != 0);
    return g;
}

namespace detail {

struct ScanTask {
    std::size_t order = 0;
    std::uint64_t graph_mask = 0; // exhaustive mode
    std::uint64_t index = 0;      // instance index (random mode) or first instance index (exhaustive)
};

inline void run_instance(const LoopedGraph& simple, const VertexSet& w, std::optional<double> se_simple,
                         std::mt19937_64& rng, const ScanOptions& opts, ScanReport& out) {
    const auto looped = add_loops(simple, w);
    // Draw X unconditionally so the stream does not depend on which checks run.
    const auto x = random_subset(simple.order(), rng);
    if (opts.bounds) {
        out.bounds.push_back(check_bounds(simple, w, se_simple, opts.tolerance));
        out.summary.add(out.bounds.back());
    }
    if (opts.complement) {
        auto rec = check_complement_invariance(looped, opts.tolerance);
        rec.seed = opts.seed;
        out.summary.add(rec);
        out.theorems.push_back(std::move(rec));
    }
    if (opts.switching) {
        auto rec = check_switching_cospectral(looped, x, opts.tolerance);
        rec.seed = opts.seed;
        out.summary.add(rec);
        out.theorems.push_back(std::move(rec));
    }
}

inline void run_task(const ScanTask& task, const ScanOptions& opts, ScanReport& out) {
    if (opts.mode == ScanMode::exhaustive) {
        const auto simple = graph_from_mask(task.order, task.graph_mask);
        const double se = seidel_energy(simple).energy;
        const std::uint64_t subsets = std::uint64_t{1} << task.order;
        for (std::uint64_t wm = 0; wm < subsets; ++wm) {
            auto rng = instance_rng(opts.seed, task.index + wm);
            run_instance(simple, VertexSet::from_mask(task.order, wm), se, rng, opts, out);
        }
    } else {
        auto rng = instance_rng(opts.seed, task.index);
        const std::size_t lo = opts.min_order.value_or(1);
        const std::size_t width = opts.max_order - lo + 1;
        const std::size_t n = lo + static_cast<std::size_t>(rng() % width);
        const auto simple = random_graph(n, rng);
        const auto w = random_subset(n, rng);
        run_instance(simple, w, std::nullopt, rng, opts, out);
    }
}

} // namespace detail

// Exhaustive mode: every labeled graph at each order in [min_order, max_order]
// times every loop subset, records ordered by (order, graph mask, loop mask).
// Random mode: `sample` instances with order uniform in [min_order, max_order],
// G(n, 1/2) adjacency, uniform W and X. Switching sets X come from a per-instance
// stream derived from `seed` in both modes.
inline ScanReport scan(const ScanOptions& opts) {
    const std::size_t lo =
        opts.min_order.value_or(opts.mode == ScanMode::exhaustive ? opts.max_order : std::size_t{1});
    if (lo > opts.max_order) throw std::invalid_argument("scan: min order exceeds max order");
    if (opts.mode == ScanMode::exhaustive && opts.max_order > exhaustive_max_order)
        throw std::invalid_argument("scan: exhaustive mode supports orders up to " +
                                    std::to_string(exhaustive_max_order) + ", got " +
                                    std::to_string(opts.max_order));
    if (opts.mode == ScanMode::random && lo == 0) throw std::invalid_argument("scan: random mode needs min order >= 1");

    ScanOptions resolved = opts;
    resolved.min_order = lo;

    std::vector<detail::ScanTask> tasks;
    if (opts.mode == ScanMode::exhaustive) {
        std::uint64_t index = 0;
        for (std::size_t n = lo; n <= opts.max_order; ++n) {
            const std::uint64_t graphs = std::uint64_t{1} << LoopedGraph::pair_count(n);
            for (std::uint64_t m = 0; m < graphs; ++m) {
                tasks.push_back({n, m, index});
                index += std::uint64_t{1} << n;
            }
        }
    } else {
        for (std::uint64_t i = 0; i < opts.sample; ++i) tasks.push_back({0, 0, i});
    }

    const unsigned threads =
        std::max(1U, std::min<unsigned>(opts.threads == 0 ? default_thread_count() : opts.threads,
                                        static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
    std::vector<ScanReport> parts(threads);
    auto work = [&](unsigned t) {
        const std::size_t begin = tasks.size() * t / threads;
        const std::size_t end = tasks.size() * (t + 1) / threads;
        for (std::size_t k = begin; k < end; ++k) detail::run_task(tasks[k], resolved, parts[t]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    ScanReport out;
    for (auto& p : parts) {
        out.bounds.insert(out.bounds.end(), std::make_move_iterator(p.bounds.begin()),
                          std::make_move_iterator(p.bounds.end()));
        out.theorems.insert(out.theorems.end(), std::make_move_iterator(p.theorems.begin()),
                            std::make_move_iterator(p.theorems.end()));
        out.summary += p.summary;
    }
    return out;
}

} // namespace seidel

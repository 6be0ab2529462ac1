#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "seidel/graph_io.hpp"
#include "seidel/report.hpp"
#include "seidel/seidel_energy.hpp"
#include "seidel/spectra.hpp"
#include "seidel/theorem_verify.hpp"

namespace seidel::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline const char* graph_help =
    "Graph input: a graph6 string with an optional loop sidecar (\"A_:0\" is K_2 with a loop at vertex 0),\n"
    "or a path to a file holding graph6 or an edge list (\"n 3\", \"0 1\", \"loop 1\", ...). '-' reads stdin.";

struct Streams {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
};

namespace detail {

inline LoopedGraph load_graph(const std::string& arg, const std::string& input_format, std::istream& in) {
    std::string text = arg;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (std::ifstream file(arg); file) {
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    if (input_format == "graph6") return parse_graph6(text);
    if (input_format == "edgelist") return parse_edgelist(text);
    return parse_graph_document(text).graph;
}

inline ReportFormat parse_format(const std::string& f) {
    if (f == "csv") return ReportFormat::csv;
    if (f == "jsonl") return ReportFormat::jsonl;
    return ReportFormat::text;
}

// Opens `path` for writing, or hands back `fallback` for "-".
class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    bool is_fallback() const { return !file_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

inline void print_summary(std::ostream& os, const ScanSummary& s) {
    if (s.bound_records > 0) {
        os << "bound records: " << s.bound_records << "\n"
           << "violations: " << s.violations << "\n"
           << "equality cases: " << s.equality_cases << " (sigma in {0,n}: " << s.equality_extreme
           << ", empty graph: " << s.equality_empty_graph << ")\n"
           << "review: " << s.review << "\n";
        for (auto [n, slack] : s.min_interior_slack)
            os << "min interior slack n=" << n << ": " << format_real(slack) << "\n";
    }
    if (s.theorem_records > 0)
        os << "theorem records: " << s.theorem_records << "\n"
           << "failures: " << s.theorem_failures << "\n";
}

inline std::vector<LoopedGraph> standard_union_family() {
    std::vector<LoopedGraph> out;
    for (std::size_t n = 2; n <= 8; ++n) out.push_back(graphs::complete(n));
    for (std::size_t n = 4; n <= 7; ++n) out.push_back(graphs::cycle(n));
    out.push_back(graphs::petersen());
    return out;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, Streams io) {
    CLI::App app{"Seidel matrices, spectra and energies of graphs with self-loops", "seidel"};
    app.footer(graph_help);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "jsonl"}));
    std::string input_format = "auto";
    app.add_option("--input-format", input_format, "Graph input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

    // spectrum / energy
    std::string graph_arg;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the Seidel spectrum, descending");
    spectrum_cmd->add_option("graph", graph_arg, "Graph (graph6[:loops], or a file)")->required();
    auto* energy_cmd = app.add_subcommand("energy", "Print the Seidel energy report");
    energy_cmd->add_option("graph", graph_arg, "Graph (graph6[:loops], or a file)")->required();

    // verify
    std::string theorem;
    std::size_t max_n = 0;
    std::size_t min_n = 0;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string out_path = "-";
    std::vector<std::string> union_graphs;
    auto* verify_cmd = app.add_subcommand("verify", "Check one result over enumerated or random instances");
    verify_cmd->add_option("--theorem", theorem, "Which result to check")
        ->required()
        ->check(CLI::IsMember({"bounds", "complement", "switching", "union"}));
    verify_cmd->add_option("--max-n", max_n, "Largest order (default 4; 12 in random mode)");
    verify_cmd->add_option("--min-n", min_n, "Smallest order (default: max-n when exhaustive, 1 when random)");
    verify_cmd->add_option("--sample", sample, "Random instances; 0 means exhaustive enumeration");
    verify_cmd->add_option("--seed", seed, "Seed for random instances and switching sets");
    verify_cmd->add_option("--threads", threads, "Worker threads (default: SEIDEL_THREADS or 1)");
    verify_cmd->add_option("--out", out_path, "Record sink for csv/jsonl output ('-' = stdout)");
    verify_cmd->add_option("--graph", union_graphs, "Graphs for --theorem union (default: built-in family)");

    // scan
    std::size_t scan_max = 0;
    std::size_t scan_min = 0;
    std::string scan_out;
    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan of the two-sided energy bound");
    scan_cmd->add_option("--max-n", scan_max, "Largest order (<= 6)")->required();
    scan_cmd->add_option("--min-n", scan_min, "Smallest order (default: max-n)");
    scan_cmd->add_option("--out", scan_out, "Record sink path ('-' = stdout)")->required();
    scan_cmd->add_option("--threads", threads, "Worker threads (default: SEIDEL_THREADS or 1)");

    // fiedler
    double alpha1 = 0.0;
    double beta1 = 0.0;
    double rho = 0.0;
    std::vector<double> rest_a;
    std::vector<double> rest_b;
    auto* fiedler_cmd = app.add_subcommand("fiedler", "Spectrum of a rank-one coupled block matrix");
    fiedler_cmd->add_option("--alpha1", alpha1, "Eigenvalue of A paired with u")->required();
    fiedler_cmd->add_option("--beta1", beta1, "Eigenvalue of B paired with v")->required();
    fiedler_cmd->add_option("--rho", rho, "Coupling strength")->required();
    fiedler_cmd->add_option("--rest-a", rest_a, "Remaining eigenvalues of A");
    fiedler_cmd->add_option("--rest-b", rest_b, "Remaining eigenvalues of B");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        io.out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        io.err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    const auto fmt = detail::parse_format(format);
    try {
        if (spectrum_cmd->parsed()) {
            const auto g = detail::load_graph(graph_arg, input_format, io.in);
            const auto spec = seidel_spectrum(g);
            if (fmt == ReportFormat::text) {
                for (auto v : spec) io.out << format_real(v) << "\n";
            } else {
                EnergyReport r = seidel_energy(g);
                ReportSink sink(io.out, fmt);
                r.shifted_eigenvalues = spec; // unshifted spectrum in the eigenvalue column
                r.shift = 0.0;
                sink.write(r, emit_graph6(g));
            }
            return exit_ok;
        }

        if (energy_cmd->parsed()) {
            const auto g = detail::load_graph(graph_arg, input_format, io.in);
            const auto r = seidel_energy(g);
            if (fmt == ReportFormat::text) {
                io.out << "graph: " << emit_graph6(g) << "\n"
                       << "n: " << r.n << "\n"
                       << "sigma: " << r.sigma << "\n"
                       << "shift: " << format_real(r.shift) << "\n"
                       << "energy: " << format_real(r.energy) << "\n"
                       << "shifted_eigenvalues:";
                for (auto v : r.shifted_eigenvalues) io.out << " " << format_real(v);
                io.out << "\n";
            } else {
                ReportSink sink(io.out, fmt);
                sink.write(r, emit_graph6(g));
            }
            return exit_ok;
        }

        if (fiedler_cmd->parsed()) {
            const auto spec = fiedler_spectrum(alpha1, Spectrum(rest_a), beta1, Spectrum(rest_b), rho);
            for (auto v : spec) io.out << format_real(v) << "\n";
            return exit_ok;
        }

        if (scan_cmd->parsed()) {
            ScanOptions opts;
            opts.mode = ScanMode::exhaustive;
            opts.max_order = scan_max;
            if (scan_cmd->count("--min-n") > 0) opts.min_order = scan_min;
            opts.threads = threads;
            opts.complement = false;
            opts.switching = false;
            const auto report = scan(opts);
            detail::OutputTarget target(scan_out, io.out);
            ReportSink sink(target.stream(), fmt == ReportFormat::jsonl ? ReportFormat::jsonl : ReportFormat::csv);
            for (const auto& r : report.bounds) sink.write(r);
            detail::print_summary(target.is_fallback() ? io.err : io.out, report.summary);
            return report.summary.violations == 0 ? exit_ok : exit_failure;
        }

        if (verify_cmd->parsed()) {
            detail::OutputTarget target(out_path, io.out);
            std::ostream& summary_os = (fmt != ReportFormat::text && target.is_fallback()) ? io.err : io.out;

            if (theorem == "union") {
                std::vector<LoopedGraph> family;
                for (const auto& s : union_graphs) family.push_back(detail::load_graph(s, input_format, io.in));
                if (family.empty()) family = detail::standard_union_family();
                std::size_t failures = 0;
                std::size_t violations = 0;
                std::unique_ptr<ReportSink> sink;
                if (fmt != ReportFormat::text) sink = std::make_unique<ReportSink>(target.stream(), fmt);
                for (const auto& g : family) {
                    const auto rec = check_union_theorem(g);
                    failures += rec.failed() ? 1 : 0;
                    violations += rec.verdict == Verdict::hypothesis_violation ? 1 : 0;
                    if (sink) {
                        sink->write(rec);
                    } else {
                        io.out << rec.instance << ": " << to_string(rec.verdict);
                        if (rec.formula_delta) io.out << " formula_delta=" << format_real(*rec.formula_delta);
                        io.out << " fiedler_delta=" << format_real(*rec.fiedler_delta)
                               << " cospectral_delta=" << format_real(*rec.spectral_delta);
                        if (!rec.note.empty()) io.out << " (" << rec.note << ")";
                        io.out << "\n";
                    }
                }
                summary_os << "theorem records: " << family.size() << "\n"
                           << "hypothesis violations: " << violations << "\n"
                           << "failures: " << failures << "\n";
                return failures == 0 ? exit_ok : exit_failure;
            }

            ScanOptions opts;
            opts.mode = sample > 0 ? ScanMode::random : ScanMode::exhaustive;
            opts.sample = sample;
            opts.seed = seed;
            opts.threads = threads;
            opts.max_order = verify_cmd->count("--max-n") > 0 ? max_n : (sample > 0 ? 12 : 4);
            if (verify_cmd->count("--min-n") > 0) opts.min_order = min_n;
            opts.bounds = theorem == "bounds";
            opts.complement = theorem == "complement";
            opts.switching = theorem == "switching";
            const auto report = scan(opts);

            if (fmt != ReportFormat::text) {
                ReportSink sink(target.stream(), fmt);
                for (const auto& r : report.bounds) sink.write(r);
                for (const auto& r : report.theorems) sink.write(r);
            } else {
                for (const auto& r : report.bounds)
                    if (r.violation() || r.review())
                        io.out << (r.violation() ? "VIOLATION " : "REVIEW ") << r.instance
                               << " slack_low=" << format_real(r.slack_low)
                               << " slack_high=" << format_real(r.slack_high) << "\n";
                for (const auto& r : report.theorems)
                    if (r.failed()) io.out << "FAIL " << r.theorem << " " << r.instance << "\n";
            }
            summary_os << "seed: " << seed << "\n";
            detail::print_summary(summary_os, report.summary);
            const bool ok = report.summary.violations == 0 && report.summary.theorem_failures == 0;
            return ok ? exit_ok : exit_failure;
        }
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

inline int run(int argc, char** argv, Streams io) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, io);
}

} // namespace seidel::cli

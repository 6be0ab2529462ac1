#pragma once

// CSV (RFC 4180 quoting) and JSON-lines sinks for verification records and
// energy reports. Every real number is written with 17 significant digits.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "seidel/seidel_energy.hpp"
#include "seidel/theorem_verify.hpp"

namespace seidel {

enum class ReportFormat { text, csv, jsonl };

inline std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
    return {buf, ptr};
}

namespace detail {

// One output field: name plus its already-formatted CSV and JSON text.
struct Field {
    std::string name;
    std::string csv;
    std::string json;
};

inline std::string csv_quote(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline Field text_field(std::string name, const std::string& v) {
    return {std::move(name), csv_quote(v), nlohmann::json(v).dump()};
}

inline Field real_field(std::string name, double v) {
    auto s = format_real(v);
    return {std::move(name), s, std::isfinite(v) ? s : "null"};
}

inline Field real_field(std::string name, const std::optional<double>& v) {
    if (!v) return {std::move(name), "", "null"};
    return real_field(std::move(name), *v);
}

inline Field count_field(std::string name, std::uint64_t v) {
    auto s = std::to_string(v);
    return {std::move(name), s, s};
}

inline Field flag_field(std::string name, bool v) {
    std::string s = v ? "true" : "false";
    return {std::move(name), s, s};
}

inline Field reals_field(std::string name, const Spectrum& values) {
    std::string csv;
    std::string json = "[";
    bool first = true;
    for (auto v : values) {
        if (!first) {
            csv += ';';
            json += ',';
        }
        csv += format_real(v);
        json += std::isfinite(v) ? format_real(v) : "null";
        first = false;
    }
    json += ']';
    return {std::move(name), csv, json};
}

} // namespace detail

inline std::vector<detail::Field> record_fields(const BoundRecord& r) {
    using namespace detail;
    return {text_field("instance", r.instance),
            count_field("n", r.n),
            count_field("sigma", r.sigma),
            count_field("edges", r.edges),
            flag_field("nonempty", r.nonempty),
            real_field("se_simple", r.se_simple),
            real_field("value", r.value),
            real_field("lower", r.lower),
            real_field("upper", r.upper),
            real_field("slack_low", r.slack_low),
            real_field("slack_high", r.slack_high),
            real_field("perturbation_energy", r.perturbation_energy),
            real_field("tolerance", r.tolerance),
            flag_field("equality_low", r.equality_low),
            flag_field("equality_high", r.equality_high),
            flag_field("review", r.review()),
            flag_field("violation", r.violation())};
}

inline std::vector<detail::Field> record_fields(const TheoremRecord& r) {
    using namespace detail;
    Field seed = r.seed ? count_field("seed", *r.seed) : Field{"seed", "", "null"};
    return {text_field("theorem", r.theorem),
            text_field("instance", r.instance),
            text_field("verdict", to_string(r.verdict)),
            flag_field("pass", r.pass),
            real_field("tolerance", r.tolerance),
            seed,
            real_field("energy_delta", r.energy_delta),
            real_field("spectral_delta", r.spectral_delta),
            real_field("identity_delta", r.identity_delta),
            real_field("formula_delta", r.formula_delta),
            real_field("fiedler_delta", r.fiedler_delta),
            text_field("note", r.note)};
}

inline std::vector<detail::Field> record_fields(const EnergyReport& r, const std::string& instance = {}) {
    using namespace detail;
    return {text_field("instance", instance), count_field("n", r.n),
            count_field("sigma", r.sigma),    real_field("shift", r.shift),
            real_field("energy", r.energy),   reals_field("shifted_eigenvalues", r.shifted_eigenvalues)};
}

// Homogeneous record stream. CSV gets a header row before the first record;
// mixing record layouts in one CSV sink is rejected.
class ReportSink {
  public:
    ReportSink(std::ostream& out, ReportFormat format) : out_(out), format_(format) {
        if (format == ReportFormat::text) throw std::invalid_argument("ReportSink: text is not a record format");
    }

    template <typename Record, typename... Extra>
    void write(const Record& r, const Extra&... extra) {
        emit(record_fields(r, extra...));
    }

    std::size_t count() const noexcept { return count_; }

  private:
    void emit(const std::vector<detail::Field>& fields) {
        std::string header;
        for (const auto& f : fields) header += (header.empty() ? "" : ",") + f.name;
        if (format_ == ReportFormat::csv) {
            if (header_.empty()) {
                header_ = header;
                out_ << header_ << "\r\n";
            } else if (header != header_) {
                throw std::logic_error("ReportSink: CSV stream mixes record layouts");
            }
            bool first = true;
            for (const auto& f : fields) {
                if (!first) out_ << ',';
                out_ << f.csv;
                first = false;
            }
            out_ << "\r\n";
        } else {
            out_ << '{';
            bool first = true;
            for (const auto& f : fields) {
                if (!first) out_ << ',';
                out_ << nlohmann::json(f.name).dump() << ':' << f.json;
                first = false;
            }
            out_ << "}\n";
        }
        ++count_;
    }

    std::ostream& out_;
    ReportFormat format_;
    std::string header_;
    std::size_t count_ = 0;
};

} // namespace seidel

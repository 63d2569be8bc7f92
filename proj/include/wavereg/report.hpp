#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wavereg/csv.hpp"
#include "wavereg/mra.hpp"
#include "wavereg/pipeline.hpp"
#include "wavereg/time_series.hpp"

// Report rendering.  Human output (markdown) shows 4 decimals in Table-1
// style; machine output (csv, json) carries full 17-significant-digit
// precision so reports round-trip without loss.

namespace wavereg {

namespace detail {

inline std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline std::string compact4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

/// Quote a CSV cell when it contains the delimiter, quotes, or newlines.
inline std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

inline std::vector<std::string> ranking_labels(const std::vector<int>& scales) {
    std::vector<std::string> out;
    out.reserve(scales.size());
    for (int j : scales) out.push_back(scale_label(j));
    return out;
}

inline std::string dash_or(const std::vector<std::string>& labels) {
    return labels.empty() ? std::string("—") : join(labels, ", ");
}

}  // namespace detail

/// Markdown report: a Table-1-style table (Time scale, Regression equation,
/// R², F, Significance level α, AIC, plus AICc, p and Status), the AIC
/// ranking, and a notes list carrying warnings and failure messages.
inline std::string render_markdown(const MultiScaleReport& report) {
    std::string out = "# Multi-scale regression report\n\n";
    out += "- source: " + (report.provenance.source.empty() ? std::string("(in-memory)")
                                                            : report.provenance.source) + "\n";
    out += "- dependent: " + report.provenance.dependent + "\n";
    out += "- independents: " + detail::join(report.provenance.independents, ", ") + "\n";
    out += "- n: " + std::to_string(report.provenance.n) + "\n";
    out += "- wavelet: " + report.config.wavelet + ", boundary: " +
           to_string(report.config.boundary) + ", levels: " +
           std::to_string(report.config.levels) + " (j_max " + std::to_string(report.j_max) +
           ", j_clean " + std::to_string(report.j_clean) + ")\n";
    out += "- aic: " + std::string(report.config.stats.aic_without_n ? "2k + ln(rss/n) variant"
                                                                     : "2k + n·ln(rss/n)") +
           ", k = m + " + std::string(report.config.stats.count_error_variance ? "2" : "1") + "\n";
    out += "\n";
    out += "| Time scale | Regression equation | R² | F | Significance level α | "
           "AIC | AICc | p | Status |\n";
    out += "|---|---|---|---|---|---|---|---|---|\n";
    const std::string dash = "—";
    for (const auto& row : report.rows) {
        out += "| " + row.label + " | ";
        if (row.status == RowStatus::failed) {
            out += dash + " | " + dash + " | " + dash + " | " + dash + " | " + dash + " | " +
                   dash + " | " + dash;
        } else {
            out += row.equation + " | " + detail::fixed4(row.stats.r2) + " | ";
            out += row.status == RowStatus::exact_fit ? "∞" : detail::fixed4(row.stats.f);
            out += " | " + to_string(row.stats.significance) + " | ";
            if (row.status == RowStatus::exact_fit)
                out += dash + " | " + dash;
            else
                out += detail::fixed4(row.stats.aic) + " | " + detail::fixed4(row.stats.aicc);
            out += " | " + detail::compact4(row.stats.p);
        }
        out += " | " + to_string(row.status) + " |\n";
    }
    out += "\n";
    out += "Ranking (AIC ascending): " +
           detail::dash_or(detail::ranking_labels(report.ranking.ranked)) + "\n";
    if (!report.ranking.exact_fit.empty())
        out += "Exact fits (no AIC): " +
               detail::join(detail::ranking_labels(report.ranking.exact_fit), ", ") + "\n";
    if (!report.ranking.failed.empty())
        out += "Failed: " + detail::join(detail::ranking_labels(report.ranking.failed), ", ") +
               "\n";

    std::string notes;
    for (const auto& row : report.rows) {
        for (const auto& w : row.warnings) notes += "- " + scale_label(row.scale) + ": " + w + "\n";
        if (row.status == RowStatus::failed)
            notes += "- " + scale_label(row.scale) + ": " + row.error + "\n";
    }
    if (!notes.empty()) out += "\nNotes:\n" + notes;
    return out;
}

/// CSV report: one row per scale, full-precision numerics, empty cells for
/// undefined values (failed rows, or AIC of an exact fit).
inline std::string render_csv(const MultiScaleReport& report) {
    std::string out =
        "scale,label,equation,coefficients,r2,f,p,significance,aic,aicc,status,warnings\n";
    auto num = [](double v) { return std::isfinite(v) ? detail::format_full(v) : std::string(); };
    for (const auto& row : report.rows) {
        out += std::to_string(row.scale) + ',' + detail::csv_quote(row.label) + ',';
        if (row.status == RowStatus::failed) {
            out += ",,,,,,,,";  // equation..aicc left empty
        } else {
            std::string coeffs;
            for (const auto& [name, value] : row.model.coefficients)
                coeffs += name + "=" + detail::format_full(value) + ";";
            coeffs += "(intercept)=" + detail::format_full(row.model.intercept);
            out += detail::csv_quote(row.equation) + ',' + detail::csv_quote(coeffs) + ',';
            out += num(row.stats.r2) + ',' + num(row.stats.f) + ',' + num(row.stats.p) + ',';
            out += detail::csv_quote(to_string(row.stats.significance)) + ',';
            out += num(row.stats.aic) + ',' + num(row.stats.aicc) + ',';
        }
        out += detail::csv_quote(to_string(row.status)) + ',';
        std::string warnings = detail::join(row.warnings, " | ");
        if (row.status == RowStatus::failed)
            warnings += (warnings.empty() ? "" : " | ") + row.error;
        out += detail::csv_quote(warnings) + '\n';
    }
    return out;
}

/// JSON report.  Undefined numerics (exact-fit AIC, failed rows, infinite
/// F) serialize as null; key order is fixed for stable diffs.
inline nlohmann::ordered_json report_to_json(const MultiScaleReport& report) {
    using json = nlohmann::ordered_json;
    auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };

    json config;
    config["wavelet"] = report.config.wavelet;
    config["levels"] = report.config.levels;
    config["boundary"] = to_string(report.config.boundary);
    json basis;
    basis["squares"] = report.config.basis.squares;
    json products = json::array();
    for (const auto& [a, b] : report.config.basis.products) products.push_back(json::array({a, b}));
    basis["products"] = products;
    config["basis"] = basis;
    config["count_error_variance"] = report.config.stats.count_error_variance;
    config["aic_without_n"] = report.config.stats.aic_without_n;
    config["j_max"] = report.j_max;
    config["j_clean"] = report.j_clean;

    json dataset;
    dataset["source"] = report.provenance.source;
    dataset["dependent"] = report.provenance.dependent;
    dataset["independents"] = report.provenance.independents;
    dataset["n"] = report.provenance.n;

    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["scale"] = row.scale;
        r["label"] = row.label;
        if (row.status == RowStatus::failed) {
            r["equation"] = nullptr;
            r["coefficients"] = nullptr;
            r["r2"] = nullptr;
            r["f"] = nullptr;
            r["p"] = nullptr;
            r["significance"] = nullptr;
            r["aic"] = nullptr;
            r["aicc"] = nullptr;
        } else {
            r["equation"] = row.equation;
            json coeffs;
            for (const auto& [name, value] : row.model.coefficients) coeffs[name] = value;
            coeffs["(intercept)"] = row.model.intercept;
            r["coefficients"] = coeffs;
            r["r2"] = num(row.stats.r2);
            r["f"] = num(row.stats.f);
            r["p"] = num(row.stats.p);
            r["significance"] = to_string(row.stats.significance);
            r["aic"] = num(row.stats.aic);
            r["aicc"] = num(row.stats.aicc);
        }
        r["status"] = to_string(row.status);
        r["warnings"] = row.warnings;
        if (row.status == RowStatus::failed) r["error"] = row.error;
        rows.push_back(std::move(r));
    }

    json ranking;
    ranking["ranked"] = report.ranking.ranked;
    ranking["exact_fit"] = report.ranking.exact_fit;
    ranking["failed"] = report.ranking.failed;

    json root;
    root["config"] = config;
    root["dataset"] = dataset;
    root["rows"] = rows;
    root["ranking"] = ranking;
    return root;
}

inline std::string render_json(const MultiScaleReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

/// Decomposition table: year, raw, S_1..S_J, D_1..D_J — the data behind a
/// per-scale variation plot.
inline std::string render_decompose_csv(const TimeSeries& series, const MraDecomposition& mra) {
    std::vector<std::string> names{"year", "raw"};
    std::vector<std::vector<double>> columns{series.values()};
    for (int j = 1; j <= mra.levels; ++j) {
        names.push_back("S_" + std::to_string(j));
        columns.push_back(mra.approximation(j));
    }
    for (int j = 1; j <= mra.levels; ++j) {
        names.push_back("D_" + std::to_string(j));
        columns.push_back(mra.detail(j));
    }
    return render_table_csv(names, series.index(), columns);
}

}  // namespace wavereg

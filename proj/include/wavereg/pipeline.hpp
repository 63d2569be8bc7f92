#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavereg/dwt.hpp"
#include "wavereg/errors.hpp"
#include "wavereg/filter_bank.hpp"
#include "wavereg/mra.hpp"
#include "wavereg/regression.hpp"
#include "wavereg/stats.hpp"
#include "wavereg/time_series.hpp"

namespace wavereg {

/// Knobs for a multi-scale analysis run.  Every field has the default used
/// throughout the documentation; `levels` falls back to min(5, j_max).
struct AnalysisConfig {
    std::string wavelet = "sym8";
    std::optional<int> levels;  ///< J; 0 means a raw-scale fit only
    Boundary boundary = Boundary::periodic;
    BasisSpec basis;            ///< optional polynomial/interaction terms
    StatsOptions stats;
};

/// The configuration actually used, echoed into every report.
struct ResolvedConfig {
    std::string wavelet;
    int levels = 0;
    Boundary boundary = Boundary::periodic;
    BasisSpec basis;
    StatsOptions stats;
};

/// Where the data came from and which columns were analyzed.
struct Provenance {
    std::string source;  ///< file path, or a description for in-memory data
    std::string dependent;
    std::vector<std::string> independents;
    std::size_t n = 0;
};

enum class RowStatus { ok, exact_fit, failed };

inline std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::ok: return "ok";
        case RowStatus::exact_fit: return "exact fit";
        case RowStatus::failed: return "failed";
    }
    return "failed";
}

inline std::string scale_label(int j) { return "s" + std::to_string(j); }

/// Dyadic scale in years: s0 is the raw 1-year series, s_j smooths over
/// 2^j years.
inline std::string scale_description(int j) {
    return std::to_string(1LL << j) + "-year scale";
}

/// One fitted equation "Y = b1·X1 + ... + b0" in 4-decimal, signed,
/// intercept-last style.
inline std::string render_equation(const std::string& dependent, const RegressionModel& model) {
    auto fixed4 = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        return std::string(buf);
    };
    std::string out = dependent + " = ";
    bool first = true;
    auto add_term = [&](double value, const std::string& suffix) {
        const bool negative = std::signbit(value);
        if (first) {
            if (negative) out += "−";
            first = false;
        } else {
            out += negative ? " − " : " + ";
        }
        out += fixed4(std::fabs(value)) + suffix;
    };
    for (const auto& [name, value] : model.coefficients) add_term(value, "·" + name);
    add_term(model.intercept, "");
    return out;
}

/// Per-scale result row.  `model`, `stats` and `equation` are meaningful
/// only when the row did not fail; a failed row carries the error text.
struct ScaleRow {
    int scale = 0;
    std::string label;  ///< "s2 (4-year scale)"
    RowStatus status = RowStatus::failed;
    std::string equation;
    RegressionModel model;
    FitStatistics stats;
    std::vector<std::string> warnings;
    std::string error;
};

/// AIC ordering of the rows: `ranked` holds scale indices of finite-AIC
/// rows ascending (ties to the smaller scale); exact fits have no AIC and
/// are listed separately, as are failures.
struct Ranking {
    std::vector<int> ranked;
    std::vector<int> exact_fit;
    std::vector<int> failed;
};

struct MultiScaleReport {
    Provenance provenance;
    ResolvedConfig config;
    int j_max = 0;
    int j_clean = 0;
    std::vector<ScaleRow> rows;  ///< s0 first, exactly levels + 1 entries
    Ranking ranking;

    const ScaleRow& row(int scale) const {
        for (const auto& r : rows)
            if (r.scale == scale) return r;
        throw Error("no row for scale s" + std::to_string(scale));
    }
};

namespace detail {

inline Ranking rank_rows(const std::vector<ScaleRow>& rows) {
    Ranking ranking;
    for (const auto& r : rows) {
        if (r.status == RowStatus::failed)
            ranking.failed.push_back(r.scale);
        else if (r.status == RowStatus::exact_fit)
            ranking.exact_fit.push_back(r.scale);
        else
            ranking.ranked.push_back(r.scale);
    }
    std::stable_sort(ranking.ranked.begin(), ranking.ranked.end(), [&](int lhs, int rhs) {
        double a = 0.0, b = 0.0;
        for (const auto& r : rows) {
            if (r.scale == lhs) a = r.stats.aic;
            if (r.scale == rhs) b = r.stats.aic;
        }
        if (a != b) return a < b;
        return lhs < rhs;  // documented tie-break: smaller scale first
    });
    return ranking;
}

}  // namespace detail

/// AIC-ascending scale ordering of a report's non-failed rows.
inline Ranking rank_models(const MultiScaleReport& report) {
    Ranking ranking = detail::rank_rows(report.rows);
    if (ranking.ranked.empty() && ranking.exact_fit.empty()) throw AllRowsFailedError();
    return ranking;
}

/// Run the full procedure: decompose every variable to depth J, fit one
/// least-squares equation per scale (s0 = raw data, s_j = everything's
/// j-level approximation), attach diagnostics, rank by AIC.
///
/// Decomposition errors abort the whole analysis (no scale is computable
/// without the components); regression and statistics errors mark the one
/// offending row failed and the remaining scales still report.
inline MultiScaleReport analyze_multiscale(const AlignedDataset& data,
                                           const AnalysisConfig& config,
                                           std::string source = {}) {
    const std::size_t n = data.n();
    const FilterBank bank = filter_bank(config.wavelet);
    const MaxLevels caps =
        n >= 2 ? max_level(n, bank.length()) : MaxLevels{0, 0};
    const int levels = config.levels.value_or(std::min(5, caps.j_max));
    if (levels < 0) throw Error("levels must be >= 0");
    if (levels > caps.j_max) throw LevelTooDeepError(levels, caps.j_max);

    MultiScaleReport report;
    report.provenance.source = std::move(source);
    report.provenance.dependent = data.dependent().name();
    for (const auto& s : data.independents())
        report.provenance.independents.push_back(s.name());
    report.provenance.n = n;
    report.config = {config.wavelet, levels, config.boundary, config.basis, config.stats};
    report.j_max = caps.j_max;
    report.j_clean = caps.j_clean;

    // One decomposition per variable covers every scale row.
    std::optional<MraDecomposition> dep_mra;
    std::vector<MraDecomposition> indep_mra;
    if (levels >= 1) {
        dep_mra = mra(data.dependent().values(), bank, levels, config.boundary,
                      data.dependent().name());
        indep_mra.reserve(data.independents().size());
        for (const auto& s : data.independents())
            indep_mra.push_back(mra(s.values(), bank, levels, config.boundary, s.name()));
    }

    for (int j = 0; j <= levels; ++j) {
        ScaleRow row;
        row.scale = j;
        row.label = scale_label(j) + " (" + scale_description(j) + ")";
        if (j > report.j_clean)
            row.warnings.push_back("scale " + scale_label(j) +
                                   " exceeds the boundary-clean depth j_clean = " +
                                   std::to_string(report.j_clean) +
                                   "; components are boundary-contaminated");
        try {
            const std::vector<double>& y =
                j == 0 ? data.dependent().values() : dep_mra->approximation(j);
            std::vector<DesignMatrix::Column> columns;
            columns.reserve(data.independents().size());
            for (std::size_t v = 0; v < data.independents().size(); ++v)
                columns.push_back({data.independents()[v].name(),
                                   j == 0 ? data.independents()[v].values()
                                          : indep_mra[v].approximation(j)});
            DesignMatrix design(std::move(columns));
            if (!config.basis.empty()) design = expand_basis(design, config.basis);
            row.model = ols_fit(design, y);
            row.stats = fit_statistics(y, row.model.fitted, design.m(), config.stats);
            row.equation = render_equation(data.dependent().name(), row.model);
            row.status = row.stats.exact_fit ? RowStatus::exact_fit : RowStatus::ok;
        } catch (const Error& e) {
            row.status = RowStatus::failed;
            row.error = "scale " + scale_label(j) + ": " + e.what();
        }
        report.rows.push_back(std::move(row));
    }

    report.ranking = detail::rank_rows(report.rows);
    return report;
}

}  // namespace wavereg

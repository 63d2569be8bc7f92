#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>

#include "wavereg/errors.hpp"
#include "wavereg/special_functions.hpp"

namespace wavereg {

/// Whole-equation significance bucket: the smallest conventional alpha at
/// which the F-test rejects, or not_significant when p > 0.1.
enum class SignificanceClass { alpha_0_001, alpha_0_01, alpha_0_05, alpha_0_1, not_significant };

inline std::string to_string(SignificanceClass c) {
    switch (c) {
        case SignificanceClass::alpha_0_001: return "0.001";
        case SignificanceClass::alpha_0_01: return "0.01";
        case SignificanceClass::alpha_0_05: return "0.05";
        case SignificanceClass::alpha_0_1: return "0.1";
        case SignificanceClass::not_significant: return "not significant";
    }
    return "not significant";
}

inline SignificanceClass classify_significance(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("p-value outside [0, 1]");
    if (p <= 0.001) return SignificanceClass::alpha_0_001;
    if (p <= 0.01) return SignificanceClass::alpha_0_01;
    if (p <= 0.05) return SignificanceClass::alpha_0_05;
    if (p <= 0.1) return SignificanceClass::alpha_0_1;
    return SignificanceClass::not_significant;
}

/// F statistic of the whole-equation test, from R² with (m, n-m-1) degrees
/// of freedom.
inline double f_statistic(double r2, std::size_t n, std::size_t m) {
    if (m < 1) throw Error("f_statistic requires m >= 1");
    if (n <= m + 1) throw TooFewSamplesError(n, m);
    if (!(r2 >= 0.0 && r2 <= 1.0)) throw Error("R^2 outside [0, 1]");
    if (r2 == 1.0) throw DegenerateFitError();
    const double dm = static_cast<double>(m);
    const double d2 = static_cast<double>(n - m - 1);
    return (r2 / dm) / ((1.0 - r2) / d2);
}

/// Upper tail of the F distribution: P(F >= f) with (d1, d2) degrees of
/// freedom, through the incomplete beta identity.
inline double f_pvalue(double f, std::size_t d1, std::size_t d2) {
    if (d1 < 1 || d2 < 1) throw Error("f_pvalue requires d1, d2 >= 1");
    if (!(f >= 0.0)) throw Error("f_pvalue requires f >= 0");
    if (std::isinf(f)) return 0.0;
    const double x = static_cast<double>(d2) / (static_cast<double>(d2) + static_cast<double>(d1) * f);
    return regularized_incomplete_beta(static_cast<double>(d2) / 2.0,
                                       static_cast<double>(d1) / 2.0, x);
}

/// Akaike information criterion, standard small-residual form
/// 2k + n·ln(rss/n).
inline double aic(double rss, std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw Error("aic requires n, k >= 1");
    if (!std::isfinite(rss) || rss < 0.0) throw Error("aic requires finite rss >= 0");
    if (rss == 0.0) throw ZeroRssError();
    return 2.0 * static_cast<double>(k) +
           static_cast<double>(n) * std::log(rss / static_cast<double>(n));
}

/// Literal variant without the n multiplier, kept for comparisons against
/// sources that print AIC = 2k + ln(RSS/n).  Not the default.
inline double aic_without_n(double rss, std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw Error("aic requires n, k >= 1");
    if (!std::isfinite(rss) || rss < 0.0) throw Error("aic requires finite rss >= 0");
    if (rss == 0.0) throw ZeroRssError();
    return 2.0 * static_cast<double>(k) + std::log(rss / static_cast<double>(n));
}

/// Small-sample correction: AICc = AIC + 2k(k+1)/(n-k-1).
inline double aicc(double aic_value, std::size_t n, std::size_t k) {
    if (k < 1) throw Error("aicc requires k >= 1");
    if (n <= k + 1) throw InsufficientSamplesError(n, k);
    const double dk = static_cast<double>(k);
    return aic_value + 2.0 * dk * (dk + 1.0) / (static_cast<double>(n) - dk - 1.0);
}

struct StatsOptions {
    /// Count the error variance as an estimated parameter: k = m + 2
    /// instead of the default k = m + 1 (intercept plus slopes).
    bool count_error_variance = false;
    /// Use the 2k + ln(rss/n) AIC variant instead of the standard form.
    bool aic_without_n = false;
};

/// Goodness-of-fit bundle for one fitted equation.
struct FitStatistics {
    std::size_t n = 0;    ///< sample count
    std::size_t m = 0;    ///< predictors, excluding intercept
    std::size_t k = 0;    ///< parameter count used by AIC
    double rss = 0.0;
    double tss = 0.0;
    double r2 = 0.0;
    double f = 0.0;       ///< +inf on an exact fit
    double p = 1.0;       ///< 0 on an exact fit
    double aic = 0.0;     ///< NaN on an exact fit (log of zero residual)
    double aicc = 0.0;    ///< NaN on an exact fit
    SignificanceClass significance = SignificanceClass::not_significant;
    bool exact_fit = false;        ///< rss vanished relative to tss
    bool small_sample = false;     ///< n/k <= 40, the usual prefer-AICc rule
};

/// Compute every diagnostic for observed y against fitted y_hat from a
/// model with m predictors plus an intercept.
inline FitStatistics fit_statistics(std::span<const double> y, std::span<const double> y_hat,
                                    std::size_t m, const StatsOptions& options = {}) {
    if (y.size() != y_hat.size()) throw LengthMismatchError(y.size(), y_hat.size());
    const std::size_t n = y.size();
    if (m < 1) throw Error("fit_statistics requires m >= 1");
    if (n < m + 2) throw TooFewSamplesError(n, m);

    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(n);
    double rss = 0.0;
    double tss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - y_hat[i];
        const double d = y[i] - mean;
        rss += e * e;
        tss += d * d;
    }
    if (tss == 0.0) throw DegenerateVarianceError();

    FitStatistics s;
    s.n = n;
    s.m = m;
    s.k = m + (options.count_error_variance ? 2 : 1);
    s.rss = rss;
    s.tss = tss;
    s.small_sample = static_cast<double>(n) / static_cast<double>(s.k) <= 40.0;

    double r2 = 1.0 - rss / tss;
    // Negative R^2 beyond rounding noise means y_hat is not a least-squares
    // fit with intercept — an internal bug, not a data property.
    if (r2 < 0.0) {
        if (r2 < -1e-12)
            throw Error("internal consistency: R^2 = " + std::to_string(r2) + " < 0");
        r2 = 0.0;
    }

    if (rss <= 1e-12 * tss) {
        // Exact fit: the F statistic is unbounded and AIC's log diverges.
        s.r2 = 1.0;
        s.f = std::numeric_limits<double>::infinity();
        s.p = 0.0;
        s.aic = std::numeric_limits<double>::quiet_NaN();
        s.aicc = std::numeric_limits<double>::quiet_NaN();
        s.significance = SignificanceClass::alpha_0_001;
        s.exact_fit = true;
        return s;
    }

    s.r2 = r2;
    s.f = f_statistic(r2, n, m);
    s.p = f_pvalue(s.f, m, n - m - 1);
    s.significance = classify_significance(s.p);
    s.aic = options.aic_without_n ? aic_without_n(rss, n, s.k) : aic(rss, n, s.k);
    s.aicc = aicc(s.aic, n, s.k);
    return s;
}

}  // namespace wavereg

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavereg/errors.hpp"

namespace wavereg {

/// Ordered predictor columns for a least-squares fit.  The intercept is
/// conceptual (a ones column prepended during fitting); intercept-free
/// fitting is deliberately unsupported.
class DesignMatrix {
public:
    struct Column {
        std::string name;
        std::vector<double> values;
    };

    explicit DesignMatrix(std::vector<Column> columns, bool includes_intercept = true)
        : columns_(std::move(columns)), includes_intercept_(includes_intercept) {
        if (columns_.empty()) throw Error("design matrix needs at least one column");
        n_ = columns_.front().values.size();
        for (const auto& c : columns_) {
            if (c.values.size() != n_) throw LengthMismatchError(c.values.size(), n_);
            for (double v : c.values)
                if (!std::isfinite(v))
                    throw Error("design column \"" + c.name + "\" contains a non-finite value");
        }
        for (std::size_t i = 0; i < columns_.size(); ++i)
            for (std::size_t j = i + 1; j < columns_.size(); ++j)
                if (columns_[i].name == columns_[j].name)
                    throw DuplicateNameError(columns_[i].name);
    }

    const std::vector<Column>& columns() const noexcept { return columns_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return columns_.size(); }
    bool includes_intercept() const noexcept { return includes_intercept_; }

    const Column* find(const std::string& name) const {
        for (const auto& c : columns_)
            if (c.name == name) return &c;
        return nullptr;
    }

private:
    std::vector<Column> columns_;
    std::size_t n_ = 0;
    bool includes_intercept_ = true;
};

/// A fitted linear equation y = b0 + sum b_i x_i.
struct RegressionModel {
    double intercept = 0.0;
    std::vector<std::pair<std::string, double>> coefficients;  ///< (name, b_i), design order
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> fitted;
    std::vector<double> residuals;
};

namespace detail {

/// In-place Householder QR of the column-major matrix a (p columns of
/// length n), with y carried along so it ends as Q^T y.  After the call the
/// upper triangle of a holds R.
inline void householder_qr(std::vector<std::vector<double>>& a, std::vector<double>& y) {
    const std::size_t n = y.size();
    const std::size_t p = a.size();
    std::vector<double> v(n);
    for (std::size_t j = 0; j < p; ++j) {
        double sigma = 0.0;
        for (std::size_t i = j; i < n; ++i) sigma += a[j][i] * a[j][i];
        sigma = std::sqrt(sigma);
        if (sigma == 0.0) continue;  // column already zero below (and at) the pivot
        // Reflection sending a[j][j..] to (-sign * sigma, 0, ..., 0).
        const double sign = a[j][j] >= 0.0 ? 1.0 : -1.0;
        double vnorm2 = 0.0;
        for (std::size_t i = j; i < n; ++i) {
            v[i] = a[j][i];
            if (i == j) v[i] += sign * sigma;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        auto reflect = [&](std::vector<double>& col) {
            double dot = 0.0;
            for (std::size_t i = j; i < n; ++i) dot += v[i] * col[i];
            const double s = beta * dot;
            for (std::size_t i = j; i < n; ++i) col[i] -= s * v[i];
        };
        for (std::size_t c = j; c < p; ++c) reflect(a[c]);
        reflect(y);
    }
}

}  // namespace detail

/// Least-squares fit of y on the design plus an intercept, via Householder
/// QR (no explicit normal equations).  Rank is checked against
/// 1e-10 x (largest column norm); a deficient design names the columns
/// involved in the dependency rather than returning an unstable fit.
inline RegressionModel ols_fit(const DesignMatrix& design, std::span<const double> y) {
    if (!design.includes_intercept())
        throw Error("intercept-free fitting is not supported (the equation always carries b0)");
    const std::size_t n = design.n();
    const std::size_t m = design.m();
    if (y.size() != n) throw LengthMismatchError(y.size(), n);
    if (n < m + 2) throw TooFewSamplesError(n, m);
    for (double v : y)
        if (!std::isfinite(v)) throw Error("response contains a non-finite value");
    double ymin = y[0], ymax = y[0];
    for (double v : y) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
    }
    if (ymin == ymax) throw DegenerateVarianceError();

    // Column-major working copy: intercept, then the predictors.
    const std::size_t p = m + 1;
    std::vector<std::vector<double>> a(p);
    a[0].assign(n, 1.0);
    for (std::size_t c = 0; c < m; ++c) a[c + 1] = design.columns()[c].values;

    double max_col_norm = 0.0;
    for (const auto& col : a) {
        double s = 0.0;
        for (double v : col) s += v * v;
        max_col_norm = std::max(max_col_norm, std::sqrt(s));
    }
    const double tol = 1e-10 * max_col_norm;

    std::vector<double> qty(y.begin(), y.end());
    detail::householder_qr(a, qty);

    auto column_name = [&](std::size_t idx) {
        return idx == 0 ? std::string("(intercept)") : design.columns()[idx - 1].name;
    };

    // Rank check: a negligible diagonal entry R_jj means column j lies in
    // the span of columns 0..j-1; solving the triangular system for that
    // projection identifies which ones.
    std::vector<std::string> implicated;
    auto add_implicated = [&](const std::string& name) {
        for (const auto& s : implicated)
            if (s == name) return;
        implicated.push_back(name);
    };
    for (std::size_t j = 0; j < p; ++j) {
        if (std::fabs(a[j][j]) > tol) continue;
        add_implicated(column_name(j));
        std::vector<double> w(j, 0.0);
        for (std::size_t i = j; i-- > 0;) {
            if (std::fabs(a[i][i]) <= tol) continue;
            double s = a[j][i];
            for (std::size_t c = i + 1; c < j; ++c) s -= a[c][i] * w[c];
            w[i] = s / a[i][i];
        }
        double wmax = 0.0;
        for (double v : w) wmax = std::max(wmax, std::fabs(v));
        for (std::size_t i = 0; i < j; ++i)
            if (std::fabs(w[i]) > 1e-6 * std::max(1.0, wmax)) add_implicated(column_name(i));
    }
    if (!implicated.empty()) throw RankDeficientError(std::move(implicated));

    // Back substitution: R beta = (Q^T y)[0..p-1].
    std::vector<double> beta(p);
    for (std::size_t i = p; i-- > 0;) {
        double s = qty[i];
        for (std::size_t c = i + 1; c < p; ++c) s -= a[c][i] * beta[c];
        beta[i] = s / a[i][i];
    }

    RegressionModel model;
    model.intercept = beta[0];
    model.coefficients.reserve(m);
    for (std::size_t c = 0; c < m; ++c)
        model.coefficients.emplace_back(design.columns()[c].name, beta[c + 1]);
    model.n = n;
    model.m = m;
    model.fitted.resize(n);
    model.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double fit = model.intercept;
        for (std::size_t c = 0; c < m; ++c) fit += beta[c + 1] * design.columns()[c].values[i];
        model.fitted[i] = fit;
        model.residuals[i] = y[i] - fit;
    }
    return model;
}

/// Evaluate a fitted model on a design with identical predictor names and
/// order (the row count may differ).
inline std::vector<double> predict(const RegressionModel& model, const DesignMatrix& design) {
    if (design.m() != model.m)
        throw SchemaMismatchError("model has " + std::to_string(model.m) +
                                  " predictors, design has " + std::to_string(design.m()));
    for (std::size_t c = 0; c < model.m; ++c)
        if (design.columns()[c].name != model.coefficients[c].first)
            throw SchemaMismatchError("column " + std::to_string(c) + " is \"" +
                                      design.columns()[c].name + "\", model expects \"" +
                                      model.coefficients[c].first + "\"");
    std::vector<double> out(design.n(), model.intercept);
    for (std::size_t c = 0; c < model.m; ++c) {
        const auto& values = design.columns()[c].values;
        const double b = model.coefficients[c].second;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += b * values[i];
    }
    return out;
}

/// Requested polynomial/interaction terms for the nonlinear fallback:
/// squares of named columns and pairwise products.
struct BasisSpec {
    std::vector<std::string> squares;
    std::vector<std::pair<std::string, std::string>> products;

    bool empty() const noexcept { return squares.empty() && products.empty(); }
};

/// Append derived columns ("x^2", "x*z") to a design; the originals are
/// untouched, so the expanded design feeds ols_fit unchanged.
inline DesignMatrix expand_basis(const DesignMatrix& design, const BasisSpec& spec) {
    std::vector<DesignMatrix::Column> columns = design.columns();
    auto base = [&](const std::string& name) -> const DesignMatrix::Column& {
        const auto* c = design.find(name);
        if (c == nullptr) throw UnknownColumnError(name);
        return *c;
    };
    auto append = [&](std::string name, std::vector<double> values) {
        for (const auto& c : columns)
            if (c.name == name) throw DuplicateDerivedColumnError(name);
        columns.push_back({std::move(name), std::move(values)});
    };
    for (const auto& name : spec.squares) {
        const auto& c = base(name);
        std::vector<double> v(c.values.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = c.values[i] * c.values[i];
        append(name + "^2", std::move(v));
    }
    for (const auto& [left, right] : spec.products) {
        const auto& cl = base(left);
        const auto& cr = base(right);
        std::vector<double> v(cl.values.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = cl.values[i] * cr.values[i];
        append(left + "*" + right, std::move(v));
    }
    return DesignMatrix(std::move(columns), design.includes_intercept());
}

}  // namespace wavereg

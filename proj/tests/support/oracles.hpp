#pragma once

// Independent reference implementations used only by tests.  Each oracle
// takes a deliberately different route from the library code it checks:
// the regression oracle solves the normal equations in long double, the
// beta oracle integrates the density by adaptive quadrature, and the DWT
// oracle evaluates the defining correlation sums directly.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// ---- deterministic random inputs ----

class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::vector<double> uniform_vector(std::size_t n, double lo, double hi) {
        std::vector<double> v(n);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {  // inclusive bounds
        return lo + rng_() % (hi - lo + 1);
    }

private:
    std::mt19937_64 rng_;
};

// ---- least squares via normal equations, long double ----

/// Solve (X^T X) b = X^T y with Gaussian elimination and partial pivoting,
/// where X is [ones | columns].  Returns b of length columns.size() + 1
/// (intercept first).  Throws std::runtime_error on a singular system.
inline std::vector<long double> normal_equations_fit(
    const std::vector<std::vector<double>>& columns, const std::vector<double>& y) {
    const std::size_t n = y.size();
    const std::size_t p = columns.size() + 1;
    auto x_at = [&](std::size_t row, std::size_t col) -> long double {
        return col == 0 ? 1.0L : static_cast<long double>(columns[col - 1][row]);
    };

    std::vector<std::vector<long double>> a(p, std::vector<long double>(p + 1, 0.0L));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            long double s = 0.0L;
            for (std::size_t r = 0; r < n; ++r) s += x_at(r, i) * x_at(r, j);
            a[i][j] = s;
        }
        long double s = 0.0L;
        for (std::size_t r = 0; r < n; ++r) s += x_at(r, i) * static_cast<long double>(y[r]);
        a[i][p] = s;
    }

    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (std::fabs(static_cast<double>(a[r][col])) >
                std::fabs(static_cast<double>(a[pivot][col])))
                pivot = r;
        std::swap(a[col], a[pivot]);
        if (a[col][col] == 0.0L) throw std::runtime_error("oracle: singular normal equations");
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const long double factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= p; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<long double> beta(p);
    for (std::size_t i = 0; i < p; ++i) beta[i] = a[i][p] / a[i][i];
    return beta;
}

// ---- adaptive Simpson quadrature ----

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0) return left + right;
    if (std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = detail::simpson(a, b, fa, fm, fb);
    return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, 40);
}

// ---- regularized incomplete beta by quadrature ----

/// I_x(a, b) via the substitution t = sin^2(theta), which removes the
/// endpoint singularities for a, b >= 1/2:
///
///   I_x(a,b) = Int_0^phi sin^(2a-1) cos^(2b-1) dtheta
///            / Int_0^(pi/2) sin^(2a-1) cos^(2b-1) dtheta,
///
/// phi = asin(sqrt(x)).  The integrand is scaled by its peak value (the
/// maximizer has the closed form tan^2 theta* = (2a-1)/(2b-1)) so the
/// absolute quadrature tolerance stays meaningful for large a, b, where
/// the raw peak can be as small as 2^-(a+b).  The scale cancels in the
/// ratio.  Shares no code or special functions with the continued-fraction
/// implementation.
inline double beta_cdf_quadrature(double a, double b, double x) {
    if (!(a >= 0.5) || !(b >= 0.5)) throw std::runtime_error("oracle: needs a, b >= 1/2");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double p = 2.0 * a - 1.0;
    const double q = 2.0 * b - 1.0;
    auto raw = [p, q](double theta) {
        return std::pow(std::sin(theta), p) * std::pow(std::cos(theta), q);
    };
    const double peak = raw(std::atan2(std::sqrt(p), std::sqrt(q)));
    auto integrand = [&raw, peak](double theta) { return raw(theta) / peak; };
    const double phi = std::asin(std::sqrt(x));
    const double half_pi = std::acos(0.0);
    const double numerator = adaptive_simpson(integrand, 0.0, phi, 1e-13);
    const double denominator = adaptive_simpson(integrand, 0.0, half_pi, 1e-13);
    return numerator / denominator;
}

// ---- direct-correlation DWT oracle (periodic, one level) ----

/// Subband coefficients straight from the definition:
/// a[k] = sum_m lo[m] x[(2k+m) mod n], d[k] likewise with hi.
/// Even-length input only (the library handles odd-length padding).
inline void dwt_periodic_direct(const std::vector<double>& x, const std::vector<double>& lo,
                                const std::vector<double>& hi, std::vector<double>& approx,
                                std::vector<double>& detail) {
    const std::size_t n = x.size();
    const std::size_t nc = n / 2;
    approx.assign(nc, 0.0);
    detail.assign(nc, 0.0);
    for (std::size_t k = 0; k < nc; ++k) {
        for (std::size_t m = 0; m < lo.size(); ++m) {
            const double v = x[(2 * k + m) % n];
            approx[k] += lo[m] * v;
            detail[k] += hi[m] * v;
        }
    }
}

}  // namespace oracle

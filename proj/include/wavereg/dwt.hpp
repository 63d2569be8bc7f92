#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavereg/errors.hpp"
#include "wavereg/filter_bank.hpp"

namespace wavereg {

/// How convolution indices past the signal ends are resolved.
/// periodic wraps around; symmetric reflects about the half-sample point
/// (..., x1, x0 | x0, x1, ...).
enum class Boundary { periodic, symmetric };

inline std::string to_string(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "symmetric";
}

inline Boundary boundary_from_string(std::string_view s) {
    if (s == "periodic") return Boundary::periodic;
    if (s == "symmetric") return Boundary::symmetric;
    throw Error("unknown boundary mode: \"" + std::string(s) + "\" (periodic or symmetric)");
}

struct MaxLevels {
    int j_max;    ///< hard cap: floor(log2 n)
    int j_clean;  ///< deepest level free of boundary domination: floor(log2(n/(L-1)))
};

/// Decomposition depth limits for a signal of length n under a filter of
/// length L.  Requests in (j_clean, j_max] are legal but boundary effects
/// reach every sample; requests above j_max are errors.
inline MaxLevels max_level(std::size_t n, std::size_t filter_length) {
    int j_max = 0;
    while ((std::size_t{2} << j_max) <= n) ++j_max;  // largest j with 2^j <= n
    // largest j with 2^j * (L-1) <= n, clamped at 0 when even level 1 is dirty
    int j_clean = 0;
    const std::size_t denom = filter_length - 1;
    while ((std::size_t{2} << j_clean) * denom <= n) ++j_clean;
    return {j_max, j_clean};
}

/// Analysis output of a J-level cascade plus the bookkeeping needed to
/// invert it exactly: the length fed into each level and the boundary
/// rule, which together determine every subband length.
struct WaveletCoefficients {
    std::vector<double> approx;                ///< s_J
    std::vector<std::vector<double>> details;  ///< [j-1] holds d_j, j = 1 (finest) .. J
    std::size_t original_length = 0;
    Boundary boundary = Boundary::periodic;
    std::vector<std::size_t> level_input_lengths;  ///< [j-1] = length entering level j
    std::string bank_name;
    std::size_t bank_length = 0;

    int levels() const noexcept { return static_cast<int>(details.size()); }

    const std::vector<double>& detail(int level) const {
        if (level < 1 || level > levels())
            throw Error("detail level " + std::to_string(level) + " out of range 1.." +
                        std::to_string(levels()));
        return details[static_cast<std::size_t>(level) - 1];
    }

    /// Copy with every subband except s_J zeroed.
    WaveletCoefficients only_approx() const {
        WaveletCoefficients c = *this;
        for (auto& d : c.details) d.assign(d.size(), 0.0);
        return c;
    }

    /// Copy with every subband except d_level zeroed.
    WaveletCoefficients only_detail(int level) const {
        WaveletCoefficients c = *this;
        c.approx.assign(c.approx.size(), 0.0);
        for (int j = 1; j <= levels(); ++j)
            if (j != level) c.details[static_cast<std::size_t>(j) - 1].assign(c.details[j - 1].size(), 0.0);
        return c;
    }
};

namespace detail {

inline std::size_t wrap_index(long long i, std::size_t n) {
    const long long nn = static_cast<long long>(n);
    long long r = i % nn;
    if (r < 0) r += nn;
    return static_cast<std::size_t>(r);
}

// Half-sample reflection: the extension has period 2n, mirrored about -1/2.
inline std::size_t reflect_index(long long i, std::size_t n) {
    const long long nn = static_cast<long long>(n);
    long long r = i % (2 * nn);
    if (r < 0) r += 2 * nn;
    return static_cast<std::size_t>(r < nn ? r : 2 * nn - 1 - r);
}

// Coefficient count produced by one analysis level on an input of length n.
inline std::size_t subband_length(std::size_t n, std::size_t L, Boundary mode) {
    if (mode == Boundary::periodic) return (n + 1) / 2;
    return (n + L - 1) / 2;
}

// One analysis level.  Output pair (approx, detail).
inline std::pair<std::vector<double>, std::vector<double>> analyze_level(
    const std::vector<double>& x, const FilterBank& fb, Boundary mode) {
    const std::size_t L = fb.length();
    const auto& lo = fb.dec_lo();
    const auto& hi = fb.dec_hi();

    if (mode == Boundary::periodic) {
        // Odd input is extended by one sample following the wrap rule
        // (the sample after x[n-1] is x[0]); the pad is implied by the
        // recorded input length and truncated on inversion.
        std::vector<double> xp = x;
        if (xp.size() % 2 != 0) xp.push_back(xp.front());
        const std::size_t np = xp.size();
        const std::size_t nc = np / 2;
        std::vector<double> a(nc), d(nc);
        for (std::size_t k = 0; k < nc; ++k) {
            double sa = 0.0, sd = 0.0;
            for (std::size_t m = 0; m < L; ++m) {
                const double v = xp[wrap_index(static_cast<long long>(2 * k + m), np)];
                sa += lo[m] * v;
                sd += hi[m] * v;
            }
            a[k] = sa;
            d[k] = sd;
        }
        return {std::move(a), std::move(d)};
    }

    // Symmetric mode keeps every window that overlaps the data, so the
    // subbands are slightly longer than n/2 and the level inverts exactly
    // for any filter.  Window k covers [2k, 2k+L-1]; stored k start at
    // k0 = -(L/2 - 1).
    const std::size_t n = x.size();
    const long long k0 = -static_cast<long long>(L / 2 - 1);
    const std::size_t nc = subband_length(n, L, mode);
    std::vector<double> a(nc), d(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        const long long base = 2 * (static_cast<long long>(i) + k0);
        double sa = 0.0, sd = 0.0;
        for (std::size_t m = 0; m < L; ++m) {
            const double v = x[reflect_index(base + static_cast<long long>(m), n)];
            sa += lo[m] * v;
            sd += hi[m] * v;
        }
        a[i] = sa;
        d[i] = sd;
    }
    return {std::move(a), std::move(d)};
}

// One synthesis level: rebuild the signal of length n_out from (a, d).
inline std::vector<double> synthesize_level(const std::vector<double>& a,
                                            const std::vector<double>& d, const FilterBank& fb,
                                            Boundary mode, std::size_t n_out) {
    const std::size_t L = fb.length();
    const auto& rlo = fb.rec_lo();
    const auto& rhi = fb.rec_hi();

    if (mode == Boundary::periodic) {
        const std::size_t np = n_out + (n_out % 2);
        std::vector<double> x(np, 0.0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            for (std::size_t m = 0; m < L; ++m) {
                const std::size_t pos = wrap_index(static_cast<long long>(2 * k + L - 1 - m), np);
                x[pos] += a[k] * rlo[m] + d[k] * rhi[m];
            }
        }
        x.resize(n_out);
        return x;
    }

    const long long k0 = -static_cast<long long>(L / 2 - 1);
    std::vector<double> x(n_out, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long long base = 2 * (static_cast<long long>(i) + k0);
        for (std::size_t m = 0; m < L; ++m) {
            const long long pos = base + static_cast<long long>(L - 1 - m);
            if (pos >= 0 && pos < static_cast<long long>(n_out))
                x[static_cast<std::size_t>(pos)] += a[i] * rlo[m] + d[i] * rhi[m];
        }
    }
    return x;
}

}  // namespace detail

/// Cascaded convolve-and-downsample analysis of `signal` to depth `levels`.
/// Analysis filters are applied as correlations with output index 2k, so
/// for haar and periodic mode, [1,2,3,4] -> approx [3/sqrt2, 7/sqrt2],
/// details [-1/sqrt2, -1/sqrt2].
inline WaveletCoefficients dwt_forward(std::span<const double> signal, const FilterBank& fb,
                                       int levels, Boundary boundary = Boundary::periodic) {
    if (signal.empty()) throw EmptySignalError();
    for (double v : signal)
        if (!std::isfinite(v)) throw Error("signal contains a non-finite value");
    if (levels < 1) throw Error("requested level must be >= 1");
    const int j_max = max_level(signal.size(), fb.length()).j_max;
    if (levels > j_max) throw LevelTooDeepError(levels, j_max);

    WaveletCoefficients out;
    out.original_length = signal.size();
    out.boundary = boundary;
    out.bank_name = fb.name();
    out.bank_length = fb.length();
    out.details.resize(static_cast<std::size_t>(levels));
    out.level_input_lengths.resize(static_cast<std::size_t>(levels));

    std::vector<double> cur(signal.begin(), signal.end());
    for (int j = 1; j <= levels; ++j) {
        out.level_input_lengths[static_cast<std::size_t>(j) - 1] = cur.size();
        auto [a, d] = detail::analyze_level(cur, fb, boundary);
        out.details[static_cast<std::size_t>(j) - 1] = std::move(d);
        cur = std::move(a);
    }
    out.approx = std::move(cur);
    return out;
}

/// Invert a coefficient set back to a signal of the original length.
/// The upsample-and-filter cascade uses rec_lo/rec_hi and truncates the
/// recorded padding, so dwt_inverse(dwt_forward(x)) == x to machine
/// precision in both boundary modes.
inline std::vector<double> dwt_inverse(const WaveletCoefficients& coeffs, const FilterBank& fb) {
    if (coeffs.bank_length != fb.length() || coeffs.bank_name != fb.name())
        throw BankMismatchError("coefficients were produced by \"" + coeffs.bank_name +
                                "\" (L=" + std::to_string(coeffs.bank_length) + "), got \"" +
                                fb.name() + "\" (L=" + std::to_string(fb.length()) + ")");
    const int J = coeffs.levels();
    if (J == 0) throw BankMismatchError("coefficient set has no levels");
    if (coeffs.level_input_lengths.size() != static_cast<std::size_t>(J))
        throw BankMismatchError("bookkeeping length does not match level count");

    // Validate the recorded cascade against the subband sizes.
    std::size_t expect = coeffs.original_length;
    for (int j = 1; j <= J; ++j) {
        if (coeffs.level_input_lengths[static_cast<std::size_t>(j) - 1] != expect)
            throw BankMismatchError("recorded input length at level " + std::to_string(j) +
                                    " is inconsistent");
        expect = detail::subband_length(expect, fb.length(), coeffs.boundary);
        if (coeffs.details[static_cast<std::size_t>(j) - 1].size() != expect)
            throw BankMismatchError("detail length at level " + std::to_string(j) +
                                    " is inconsistent");
    }
    if (coeffs.approx.size() != expect)
        throw BankMismatchError("approximation length is inconsistent");

    std::vector<double> cur = coeffs.approx;
    for (int j = J; j >= 1; --j) {
        const std::size_t n_out = coeffs.level_input_lengths[static_cast<std::size_t>(j) - 1];
        cur = detail::synthesize_level(cur, coeffs.details[static_cast<std::size_t>(j) - 1], fb,
                                       coeffs.boundary, n_out);
    }
    return cur;
}

}  // namespace wavereg

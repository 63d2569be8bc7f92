#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wavereg/errors.hpp"

namespace wavereg {

/// Orthonormal two-channel filter bank.
///
/// Analysis filters are applied as correlations (no flip) with output
/// index 2k.  The high-pass is derived from the low-pass through the
/// quadrature-mirror relation
///
///     dec_hi[k] = (-1)^k * dec_lo[L-1-k]
///
/// and the synthesis filters are the time-reverses of the analysis pair,
/// so the bank is orthonormal by construction: sum h = sqrt(2),
/// sum h^2 = 1, and all nonzero even shifts of dec_lo are orthogonal.
class FilterBank {
public:
    const std::string& name() const noexcept { return name_; }
    std::size_t length() const noexcept { return dec_lo_.size(); }

    const std::vector<double>& dec_lo() const noexcept { return dec_lo_; }
    const std::vector<double>& dec_hi() const noexcept { return dec_hi_; }
    const std::vector<double>& rec_lo() const noexcept { return rec_lo_; }
    const std::vector<double>& rec_hi() const noexcept { return rec_hi_; }

    /// Number of vanishing moments of the wavelet (high-pass annihilates
    /// polynomials of degree < vanishing_moments).
    int vanishing_moments() const noexcept { return static_cast<int>(length() / 2); }

    friend FilterBank filter_bank(std::string_view name);

private:
    FilterBank(std::string name, std::vector<double> dec_lo) : name_(std::move(name)), dec_lo_(std::move(dec_lo)) {
        const std::size_t L = dec_lo_.size();
        dec_hi_.resize(L);
        for (std::size_t k = 0; k < L; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            dec_hi_[k] = sign * dec_lo_[L - 1 - k];
        }
        rec_lo_.assign(dec_lo_.rbegin(), dec_lo_.rend());
        rec_hi_.assign(dec_hi_.rbegin(), dec_hi_.rend());
    }

    std::string name_;
    std::vector<double> dec_lo_, dec_hi_, rec_lo_, rec_hi_;
};

namespace detail {

// sqrt(2)/2 to full double precision
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

inline constexpr std::array<double, 2> kHaarLo = {kInvSqrt2, kInvSqrt2};

// Daubechies scaling filter with 4 vanishing moments (extremal phase),
// from the spectral factorization of the order-4 Daubechies polynomial.
inline constexpr std::array<double, 8> kDb4Lo = {
    -0.010597401785069032,
    0.0328830116668852,
    0.030841381835560764,
    -0.18703481171909309,
    -0.027983769416859854,
    0.6308807679298589,
    0.7148465705529157,
    0.2303778133088965,
};

// Least-asymmetric Daubechies ("symlet") scaling filter with 8 vanishing
// moments, standard selection of the spectral-factorization roots.
inline constexpr std::array<double, 16> kSym8Lo = {
    -0.0033824159510050028,
    -0.0005421323318000107,
    0.03169508781152599,
    0.007607487324976609,
    -0.14329423835127267,
    -0.061273359067811076,
    0.4813596512590534,
    0.777185751699628,
    0.36444189483617895,
    -0.0519458381078818,
    -0.027219029917103486,
    0.04913717967373029,
    0.0038087520138944896,
    -0.014952258337062199,
    -0.0003029205147241331,
    0.001889950332767689,
};

}  // namespace detail

/// Look up a shipped filter bank by name ("haar", "db4" or "sym8").
/// Throws UnknownWaveletError for anything else.
inline FilterBank filter_bank(std::string_view name) {
    auto make = [&](const auto& arr) {
        return FilterBank(std::string(name), std::vector<double>(arr.begin(), arr.end()));
    };
    if (name == "haar") return make(detail::kHaarLo);
    if (name == "db4") return make(detail::kDb4Lo);
    if (name == "sym8") return make(detail::kSym8Lo);
    throw UnknownWaveletError(std::string(name));
}

}  // namespace wavereg

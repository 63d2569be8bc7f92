#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavereg/dwt.hpp"
#include "wavereg/filter_bank.hpp"

namespace wavereg {

/// Multiresolution decomposition of a signal of length n: reconstructed
/// approximations S_1..S_J and details D_1..D_J, each of length n, with
///
///     X = S_J + D_J + ... + D_1       (additivity)
///     S_{j-1} = S_j + D_j             (telescoping)
///
/// Every D_j is the inverse transform of the coefficient set with all
/// subbands but d_j zeroed, S_J likewise from s_J alone, and S_j for
/// j < J is the cumulative sum S_J + D_J + ... + D_{j+1}, so both
/// identities hold to machine precision by linearity of the inverse.
struct MraDecomposition {
    std::vector<std::vector<double>> approximations;  ///< [j-1] = S_j, length n each
    std::vector<std::vector<double>> details;         ///< [j-1] = D_j, length n each
    int levels = 0;
    std::string source_name;

    const std::vector<double>& approximation(int level) const {
        if (level < 1 || level > levels)
            throw Error("approximation level " + std::to_string(level) + " out of range");
        return approximations[static_cast<std::size_t>(level) - 1];
    }
    const std::vector<double>& detail(int level) const {
        if (level < 1 || level > levels)
            throw Error("detail level " + std::to_string(level) + " out of range");
        return details[static_cast<std::size_t>(level) - 1];
    }
};

inline MraDecomposition mra(std::span<const double> signal, const FilterBank& fb, int levels,
                            Boundary boundary = Boundary::periodic,
                            std::string source_name = {}) {
    const WaveletCoefficients coeffs = dwt_forward(signal, fb, levels, boundary);

    MraDecomposition out;
    out.levels = levels;
    out.source_name = std::move(source_name);
    out.approximations.resize(static_cast<std::size_t>(levels));
    out.details.resize(static_cast<std::size_t>(levels));

    for (int j = 1; j <= levels; ++j)
        out.details[static_cast<std::size_t>(j) - 1] = dwt_inverse(coeffs.only_detail(j), fb);

    out.approximations[static_cast<std::size_t>(levels) - 1] = dwt_inverse(coeffs.only_approx(), fb);
    for (int j = levels - 1; j >= 1; --j) {
        const auto& coarser = out.approximations[static_cast<std::size_t>(j)];
        const auto& dj = out.details[static_cast<std::size_t>(j)];
        auto& sj = out.approximations[static_cast<std::size_t>(j) - 1];
        sj.resize(coarser.size());
        for (std::size_t t = 0; t < sj.size(); ++t) sj[t] = coarser[t] + dj[t];
    }
    return out;
}

}  // namespace wavereg

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wavereg/errors.hpp"
#include "wavereg/time_series.hpp"

namespace wavereg {

/// One sinusoidal component of a synthetic variable.
struct SinusoidSpec {
    double period = 0.0;     ///< in steps, > 1
    double amplitude = 0.0;  ///< >= 0
};

/// One synthetic independent: deterministic smooth part (shared trend plus
/// sinusoids) with additive Gaussian noise, entering the dependent with the
/// given weight.
struct VariableSpec {
    std::string name;
    std::vector<SinusoidSpec> sinusoids;
    double weight = 1.0;
};

/// Full recipe for a synthetic dataset.  The dependent is a stated linear
/// combination of the independents' smooth parts plus its own noise, so the
/// scale-wise fit quality is predictable: smoothing strips noise from both
/// sides of the regression, raising R^2 with scale.
struct GeneratorSpec {
    std::size_t n = 128;
    long long start_year = 1900;
    double trend = 0.05;          ///< shared slope per step, added to every independent
    double noise_sd = 0.5;        ///< noise on each independent and on the dependent
    double intercept = 5.0;
    std::string dependent_name = "Y";
    std::vector<VariableSpec> independents = {
        {"X1", {{4.0, 1.0}}, 2.0},
        {"X2", {{16.0, 1.0}}, 3.0},
    };
};

namespace detail {

/// Standard normal deviates from a raw mt19937_64 via Box-Muller, avoiding
/// std::normal_distribution whose sequence is implementation-defined.  Same
/// seed, same bits, on every platform.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        // 53-bit mantissas; u1 in (0, 1] keeps the log finite.
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace detail

inline void validate(const GeneratorSpec& spec) {
    if (spec.n == 0) throw InvalidSpecError("n must be positive");
    if (!(spec.noise_sd >= 0.0)) throw InvalidSpecError("noise sd must be >= 0");
    if (!std::isfinite(spec.trend)) throw InvalidSpecError("trend must be finite");
    if (!std::isfinite(spec.intercept)) throw InvalidSpecError("intercept must be finite");
    if (spec.independents.empty()) throw InvalidSpecError("need at least one independent");
    for (const auto& var : spec.independents) {
        if (var.name.empty()) throw InvalidSpecError("independent with empty name");
        if (!std::isfinite(var.weight)) throw InvalidSpecError("weight must be finite");
        for (const auto& s : var.sinusoids) {
            if (!(s.period > 1.0)) throw InvalidSpecError("period must exceed 1 step");
            if (!(s.amplitude >= 0.0)) throw InvalidSpecError("amplitude must be >= 0");
        }
    }
}

/// Deterministic synthetic dataset: same spec and seed give bit-identical
/// values.  Noise is drawn independent-by-independent, dependent last.
inline AlignedDataset gen_synthetic(const GeneratorSpec& spec, std::uint64_t seed) {
    validate(spec);
    detail::GaussianSource gauss(seed);
    const std::size_t n = spec.n;

    std::vector<std::vector<double>> smooth(spec.independents.size(), std::vector<double>(n));
    std::vector<TimeSeries> independents;
    independents.reserve(spec.independents.size());
    for (std::size_t v = 0; v < spec.independents.size(); ++v) {
        const auto& var = spec.independents[v];
        std::vector<double> values(n);
        for (std::size_t t = 0; t < n; ++t) {
            double s = spec.trend * static_cast<double>(t);
            for (const auto& sin_spec : var.sinusoids)
                s += sin_spec.amplitude *
                     std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / sin_spec.period);
            smooth[v][t] = s;
        }
        for (std::size_t t = 0; t < n; ++t) values[t] = smooth[v][t] + spec.noise_sd * gauss();
        independents.emplace_back(var.name, spec.start_year, std::move(values));
    }

    std::vector<double> y(n);
    for (std::size_t t = 0; t < n; ++t) {
        double s = spec.intercept;
        for (std::size_t v = 0; v < spec.independents.size(); ++v)
            s += spec.independents[v].weight * smooth[v][t];
        y[t] = s + spec.noise_sd * gauss();
    }
    TimeSeries dependent(spec.dependent_name, spec.start_year, std::move(y));
    return AlignedDataset(std::move(dependent), std::move(independents));
}

}  // namespace wavereg

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "wavereg/dwt.hpp"
#include "wavereg/filter_bank.hpp"

using namespace wavereg;

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("max_level caps", "[dwt]") {
    CHECK(max_level(47, 16).j_max == 5);
    CHECK(max_level(47, 16).j_clean == 1);
    CHECK(max_level(64, 2).j_max == 6);
    CHECK(max_level(64, 2).j_clean == 6);
    CHECK(max_level(2, 16).j_max == 1);
    CHECK(max_level(2, 16).j_clean == 0);
    CHECK(max_level(128, 16).j_max == 7);
    CHECK(max_level(128, 16).j_clean == 3);
    CHECK(max_level(512, 8).j_max == 9);
    CHECK(max_level(512, 8).j_clean == 6);
}

TEST_CASE("haar level 1 on [1,2,3,4] under the documented convention", "[dwt]") {
    const FilterBank fb = filter_bank("haar");
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    const auto coeffs = dwt_forward(x, fb, 1, Boundary::periodic);

    REQUIRE(coeffs.approx.size() == 2);
    REQUIRE(coeffs.detail(1).size() == 2);
    CHECK(coeffs.approx[0] == Catch::Approx(3.0 / kSqrt2).margin(1e-12));
    CHECK(coeffs.approx[1] == Catch::Approx(7.0 / kSqrt2).margin(1e-12));
    CHECK(coeffs.detail(1)[0] == Catch::Approx(-1.0 / kSqrt2).margin(1e-12));
    CHECK(coeffs.detail(1)[1] == Catch::Approx(-1.0 / kSqrt2).margin(1e-12));
}

TEST_CASE("constant signal: high-pass annihilates, low-pass scales", "[dwt]") {
    const FilterBank fb = filter_bank("haar");
    const double c = -2.75;
    const std::vector<double> x(8, c);
    const auto coeffs = dwt_forward(x, fb, 1, Boundary::periodic);
    REQUIRE(coeffs.approx.size() == 4);
    for (double a : coeffs.approx) CHECK(a == Catch::Approx(c * kSqrt2).margin(1e-12));
    for (double d : coeffs.detail(1)) CHECK(std::fabs(d) < 1e-12);
}

TEST_CASE("level-1 subbands match the direct-correlation oracle", "[dwt]") {
    oracle::Rng rng(101);
    for (const char* name : {"haar", "db4", "sym8"}) {
        const FilterBank fb = filter_bank(name);
        const auto x = rng.uniform_vector(64, -5.0, 5.0);
        const auto coeffs = dwt_forward(x, fb, 1, Boundary::periodic);

        std::vector<double> approx_ref, detail_ref;
        oracle::dwt_periodic_direct(x, fb.dec_lo(), fb.dec_hi(), approx_ref, detail_ref);
        INFO(name);
        CHECK(max_abs_diff(coeffs.approx, approx_ref) < 1e-12);
        CHECK(max_abs_diff(coeffs.detail(1), detail_ref) < 1e-12);
    }
}

TEST_CASE("Parseval holds for periodic even cascades", "[dwt]") {
    oracle::Rng rng(202);
    const FilterBank fb = filter_bank("sym8");
    const auto x = rng.uniform_vector(64, -1.0, 1.0);
    const auto coeffs = dwt_forward(x, fb, 3, Boundary::periodic);

    double signal_energy = 0.0;
    for (double v : x) signal_energy += v * v;
    double coeff_energy = 0.0;
    for (double v : coeffs.approx) coeff_energy += v * v;
    for (const auto& d : coeffs.details)
        for (double v : d) coeff_energy += v * v;
    CHECK(std::fabs(coeff_energy - signal_energy) < 1e-10 * signal_energy);
}

TEST_CASE("perfect reconstruction", "[dwt]") {
    oracle::Rng rng(303);
    SECTION("sym8, length 64, 3 levels, periodic") {
        const FilterBank fb = filter_bank("sym8");
        const auto x = rng.uniform_vector(64, -1.0, 1.0);
        const auto back = dwt_inverse(dwt_forward(x, fb, 3, Boundary::periodic), fb);
        CHECK(max_abs_diff(back, x) < 1e-10);
    }
    SECTION("odd lengths in both boundary modes") {
        for (const char* name : {"haar", "db4", "sym8"}) {
            const FilterBank fb = filter_bank(name);
            for (Boundary mode : {Boundary::periodic, Boundary::symmetric}) {
                const auto x = rng.uniform_vector(47, -3.0, 3.0);
                const int j_max = max_level(x.size(), fb.length()).j_max;
                for (int levels = 1; levels <= j_max; ++levels) {
                    const auto back = dwt_inverse(dwt_forward(x, fb, levels, mode), fb);
                    INFO(name << " " << to_string(mode) << " J=" << levels);
                    CHECK(max_abs_diff(back, x) < 1e-10);
                }
            }
        }
    }
    SECTION("constant signal with zeroed details inverts to itself") {
        const FilterBank fb = filter_bank("db4");
        const std::vector<double> x(32, 4.5);
        const auto coeffs = dwt_forward(x, fb, 2, Boundary::periodic);
        const auto back = dwt_inverse(coeffs.only_approx(), fb);
        CHECK(max_abs_diff(back, x) < 1e-10);
    }
    SECTION("all-zero coefficients invert to all zeros") {
        const FilterBank fb = filter_bank("sym8");
        const auto x = rng.uniform_vector(40, -1.0, 1.0);
        auto coeffs = dwt_forward(x, fb, 2, Boundary::symmetric);
        coeffs.approx.assign(coeffs.approx.size(), 0.0);
        for (auto& d : coeffs.details) d.assign(d.size(), 0.0);
        const auto back = dwt_inverse(coeffs, fb);
        REQUIRE(back.size() == 40);
        for (double v : back) CHECK(v == 0.0);
    }
}

TEST_CASE("forward transform input validation", "[dwt]") {
    const FilterBank fb = filter_bank("haar");
    const std::vector<double> empty;
    REQUIRE_THROWS_AS(dwt_forward(empty, fb, 1), EmptySignalError);

    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    REQUIRE_THROWS_AS(dwt_forward(x, fb, 0), Error);
    REQUIRE_THROWS_AS(dwt_forward(x, fb, 3), LevelTooDeepError);
    try {
        dwt_forward(x, fb, 3);
    } catch (const LevelTooDeepError& e) {
        CHECK(e.requested() == 3);
        CHECK(e.j_max() == 2);
    }

    const std::vector<double> bad{1.0, std::nan(""), 2.0, 3.0};
    REQUIRE_THROWS_AS(dwt_forward(bad, fb, 1), Error);
}

TEST_CASE("inverse detects inconsistent bookkeeping", "[dwt]") {
    oracle::Rng rng(404);
    const FilterBank haar = filter_bank("haar");
    const FilterBank db4 = filter_bank("db4");
    const auto x = rng.uniform_vector(32, -1.0, 1.0);
    const auto coeffs = dwt_forward(x, haar, 2, Boundary::periodic);

    SECTION("wrong bank") {
        REQUIRE_THROWS_AS(dwt_inverse(coeffs, db4), BankMismatchError);
    }
    SECTION("corrupted subband length") {
        auto broken = coeffs;
        broken.details[0].push_back(0.0);
        REQUIRE_THROWS_AS(dwt_inverse(broken, haar), BankMismatchError);
    }
    SECTION("corrupted level bookkeeping") {
        auto broken = coeffs;
        broken.level_input_lengths[1] += 1;
        REQUIRE_THROWS_AS(dwt_inverse(broken, haar), BankMismatchError);
    }
    SECTION("no levels at all") {
        WaveletCoefficients hollow;
        hollow.bank_name = haar.name();
        hollow.bank_length = haar.length();
        REQUIRE_THROWS_AS(dwt_inverse(hollow, haar), BankMismatchError);
    }
}

TEST_CASE("determinism: identical inputs give bit-identical outputs", "[dwt]") {
    oracle::Rng rng(505);
    const FilterBank fb = filter_bank("sym8");
    const auto x = rng.uniform_vector(100, -1.0, 1.0);
    const auto c1 = dwt_forward(x, fb, 3, Boundary::symmetric);
    const auto c2 = dwt_forward(x, fb, 3, Boundary::symmetric);
    REQUIRE(c1.approx == c2.approx);
    REQUIRE(c1.details == c2.details);
    REQUIRE(dwt_inverse(c1, fb) == dwt_inverse(c2, fb));
}

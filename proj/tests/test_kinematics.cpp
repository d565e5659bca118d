#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spinboost/kinematics.hpp"

using namespace spinboost::kinematics;

namespace {

std::mt19937_64 rng(0xbeefULL);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("gamma factors") {
    CHECK(gamma(Speed{0.0}) == 1.0);
    CHECK(gamma(Speed{0.8}) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(gamma(Speed{0.5}) == doctest::Approx(1.1547005383792517).epsilon(1e-12));
}

TEST_CASE("speeds outside [0, 1) are rejected") {
    CHECK_THROWS_AS(Speed{1.0}, std::domain_error);
    CHECK_THROWS_AS(Speed{-0.2}, std::domain_error);
    CHECK_THROWS_AS(Speed{std::nan("")}, std::domain_error);
}

TEST_CASE("d_factor") {
    // symmetric reduction: equal gammas give (g+1)/(g-1)
    for (int n = 0; n < 20; ++n) {
        const double g = uniform(1.01, 50.0);
        CHECK(d_factor(g, g) == doctest::Approx((g + 1.0) / (g - 1.0)).epsilon(1e-12));
    }
    CHECK(d_factor(5.0 / 3.0, 5.0 / 3.0) == doctest::Approx(4.0).epsilon(1e-12));
    // asymptote toward 1 as both gammas diverge
    CHECK(d_factor(1e8, 1e8) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(d_factor(1e8, 1e8) > 1.0);
    CHECK_THROWS_AS(d_factor(1.0, 2.0), std::domain_error);
}

TEST_CASE("wigner_pair degenerate branches") {
    const Speed half{0.5};
    CHECK(wigner_pair({half, half, 0.0}).omega_plus == 0.0);
    CHECK(wigner_pair({half, half, 0.0}).omega_minus == 0.0);
    CHECK(wigner_pair({half, half, kPi}).omega_plus == 0.0);
    CHECK(wigner_pair({Speed{0.0}, half, 1.0}).omega_plus == 0.0);
    CHECK(wigner_pair({half, Speed{0.0}, 1.0}).omega_minus == 0.0);
}

TEST_CASE("wigner_pair at beta = 0.5, theta = pi/2") {
    const Speed half{0.5};
    const auto w = wigner_pair({half, half, kPi / 2.0});
    // direct evaluation: D = (g+1)/(g-1), omega = atan(1/D)
    const double g = 1.0 / std::sqrt(0.75);
    const double expected = std::atan(1.0 / ((g + 1.0) / (g - 1.0)));
    CHECK(w.omega_plus == doctest::Approx(expected).epsilon(1e-12));
    CHECK(w.omega_minus == doctest::Approx(expected).epsilon(1e-12));
    CHECK(w.omega_plus == doctest::Approx(0.071670).epsilon(2e-4));
}

TEST_CASE("wigner angles approach pi/4 as both speeds approach c at theta = pi/2") {
    const Speed near_c{1.0 - 1e-8};
    const auto w = wigner_pair({near_c, near_c, kPi / 2.0});
    CHECK(std::abs(w.omega_plus - kPi / 4.0) < 1e-3);
    CHECK(std::abs(w.omega_minus - kPi / 4.0) < 1e-3);
}

TEST_CASE("omega_plus grows with either speed at fixed theta") {
    for (double theta : {0.4, 1.2, 2.3}) {
        double prev = -1.0;
        for (double b = 0.1; b < 0.95; b += 0.1) {
            const auto w = wigner_pair({Speed{b}, Speed{0.6}, theta});
            CHECK(w.omega_plus > prev);
            prev = w.omega_plus;
        }
        prev = -1.0;
        for (double b = 0.1; b < 0.95; b += 0.1) {
            const auto w = wigner_pair({Speed{0.6}, Speed{b}, theta});
            CHECK(w.omega_plus > prev);
            prev = w.omega_plus;
        }
    }
}

TEST_CASE("minus branch equals the plus branch at the supplementary angle") {
    for (int n = 0; n < 200; ++n) {
        const Speed b1{uniform(0.05, 0.95)}, b2{uniform(0.05, 0.95)};
        const double theta = uniform(0.05, kPi - 0.05);
        const auto w = wigner_pair({b1, b2, theta});
        const auto w_sup = wigner_pair({b1, b2, kPi - theta});
        CHECK(std::abs(w.omega_minus - w_sup.omega_plus) <= 1e-12);
    }
}

TEST_CASE("omega range and limit sum") {
    for (int n = 0; n < 500; ++n) {
        const auto w = wigner_pair(
            {Speed{uniform(0.0, 0.999)}, Speed{uniform(0.0, 0.999)}, uniform(0.0, kPi)});
        CHECK(w.omega_plus >= 0.0);
        CHECK(w.omega_plus <= kPi / 2.0);
        CHECK(w.omega_minus >= 0.0);
        CHECK(w.omega_minus <= kPi / 2.0);
        CHECK(w.sum() < kPi / 2.0 + 1e-15);
    }
    // |omega+ + omega- - pi/2| = O(1/gamma) near the light limit. The
    // prefactor is 2/sin(theta): tan(sum) = gamma sin(theta)/2 for equal
    // speeds, so the residual is 2/(gamma sin(theta)).
    const Speed near_c{1.0 - 1e-8};
    const double g = gamma(near_c);
    for (double theta : {0.1, 0.8, kPi / 3.0, kPi / 2.0, 2.5}) {
        const auto w = wigner_pair({near_c, near_c, theta});
        const double residual = kPi / 2.0 - w.sum();
        CHECK(residual == doctest::Approx(2.0 / (g * std::sin(theta))).epsilon(1e-3));
    }
    for (double theta : {0.8, kPi / 3.0, kPi / 2.0, 2.5}) {
        const auto w = wigner_pair({near_c, near_c, theta});
        CHECK(std::abs(w.sum() - kPi / 2.0) < 5e-4);
    }
}

TEST_CASE("omega_sum_limit") {
    CHECK(omega_sum_limit(kPi / 2.0) == kPi / 2.0);
    CHECK(omega_sum_limit(kPi / 3.0) == kPi / 2.0);
    CHECK(omega_sum_limit(0.1) == kPi / 2.0);
    CHECK_THROWS_AS(omega_sum_limit(0.0), std::domain_error);
    CHECK_THROWS_AS(omega_sum_limit(kPi), std::domain_error);
}

TEST_CASE("theta is folded into [0, pi]") {
    const Speed b{0.3};
    CHECK(BoostGeometry(b, b, -0.3).theta == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(BoostGeometry(b, b, 3.0 * kPi / 2.0).theta == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(BoostGeometry(b, b, 2.0 * kPi + 0.1).theta == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("compose_velocities examples") {
    const Velocity3 half_x{0.5, 0.0, 0.0};
    const auto collinear = compose_velocities(half_x, half_x);
    CHECK(collinear.components()[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::abs(collinear.components()[1]) < 1e-15);

    const Velocity3 zero{};
    const Velocity3 v{0.3, -0.4, 0.2};
    const auto rest = compose_velocities(zero, v);
    for (int i = 0; i < 3; ++i)
        CHECK(rest.components()[i] == doctest::Approx(v.components()[i]).epsilon(1e-15));

    // transverse component scales by 1/gamma of the boost
    const auto ortho = compose_velocities(Velocity3{0.0, 0.6, 0.0}, Velocity3{0.8, 0.0, 0.0});
    CHECK(ortho.components()[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(ortho.components()[1] == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(std::abs(ortho.components()[2]) < 1e-15);
    CHECK(ortho.magnitude() == doctest::Approx(0.87727).epsilon(1e-5));
}

TEST_CASE("compose_velocities stays below c") {
    auto sample = [&]() {
        while (true) {
            const double x = uniform(-1, 1), y = uniform(-1, 1), z = uniform(-1, 1);
            if (std::sqrt(x * x + y * y + z * z) < 0.999) return Velocity3{x, y, z};
        }
    };
    for (int n = 0; n < 2000; ++n)
        CHECK(compose_velocities(sample(), sample()).magnitude() < 1.0);
}

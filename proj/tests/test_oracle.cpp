#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spinboost/cooper.hpp"
#include "spinboost/oracle.hpp"

using namespace spinboost;
using kinematics::BoostGeometry;
using kinematics::kPi;
using kinematics::Speed;
using qmath::cplx;
using qmath::StateVector;

namespace {

std::mt19937_64 rng(0xfeedULL);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

StateVector random_state(std::size_t dim) {
    std::vector<cplx> v(dim);
    for (auto& z : v) z = cplx(uniform(-1, 1), uniform(-1, 1));
    return StateVector(std::move(v)).normalized();
}

}  // namespace

TEST_CASE("compare_states ignores a global phase") {
    const auto psi = random_state(8);
    std::vector<cplx> rotated(8);
    const cplx phase = std::exp(cplx(0.0, 1.2345));
    for (std::size_t i = 0; i < 8; ++i) rotated[i] = phase * psi[i];
    const auto rep = oracle::compare_states(psi, StateVector(rotated), 1e-10);
    CHECK(rep.pass);
    CHECK(rep.max_abs_deviation <= 1e-14);
    CHECK(std::abs(rep.aligned_phase * phase - cplx(1.0)) <= 1e-12);
}

TEST_CASE("compare_states flags a constructed perturbation") {
    const auto psi = random_state(6);
    std::vector<cplx> bumped(psi.amps());
    // bump a component the alignment index will not sit on
    std::size_t smallest = 0;
    for (std::size_t i = 1; i < 6; ++i)
        if (std::abs(psi[i]) < std::abs(psi[smallest])) smallest = i;
    bumped[smallest] += cplx(1e-6, 0.0);
    const auto rep = oracle::compare_states(psi, StateVector(bumped), 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_abs_deviation == doctest::Approx(1e-6).epsilon(0.05));
}

TEST_CASE("compare_states certifies module equivalence at a random geometry") {
    const BoostGeometry g{Speed{0.63}, Speed{0.41}, 1.03};
    const single_particle::SpinOrientation s{1.2, 0.7};
    const auto closed = cooper::singlet_closed_form(g, s);
    const auto first = cooper::boost_pair(g, cooper::initial_pair(cooper::SpinKind::S, s));
    CHECK(oracle::compare_states(closed.amps, first.amps, 1e-10).pass);
}

TEST_CASE("compare_states deviation is symmetric under swap") {
    for (int n = 0; n < 200; ++n) {
        const auto a = random_state(16);
        auto b_amps = a.amps();
        for (auto& z : b_amps) z += cplx(uniform(-1e-5, 1e-5), uniform(-1e-5, 1e-5));
        const StateVector b(b_amps);
        const auto ab = oracle::compare_states(a, b, 1e-10);
        const auto ba = oracle::compare_states(b, a, 1e-10);
        CHECK(std::abs(ab.max_abs_deviation - ba.max_abs_deviation) <= 1e-15);
        CHECK(ab.pass == ba.pass);
    }
}

TEST_CASE("compare_states rejects mismatched dimensions") {
    CHECK_THROWS_AS(oracle::compare_states(random_state(4), random_state(8), 1e-10),
                    std::invalid_argument);
}

TEST_CASE("mixing exponent fit sees the quadratic sine power") {
    std::vector<double> grid;
    for (int deg = 10; deg <= 80; deg += 10) grid.push_back(deg * kPi / 180.0);
    const auto fit = oracle::fit_gamma_exponent(Speed{0.8}, Speed{0.8}, grid);
    CHECK(fit.samples == 8);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(0.005));
    CHECK(fit.r_squared >= 0.9999);
    CHECK(fit.r_squared <= 1.0);
    // the single-power variant is off by a full unit of slope
    CHECK(std::abs(fit.slope - 1.0) == doctest::Approx(1.0).epsilon(0.005));
}

TEST_CASE("fit slope is insensitive to the mixing prefactor") {
    std::vector<double> grid;
    for (int deg = 5; deg <= 85; deg += 5) grid.push_back(deg * kPi / 180.0);
    const auto slow = oracle::fit_gamma_exponent(Speed{0.5}, Speed{0.6}, grid);
    const auto fast = oracle::fit_gamma_exponent(Speed{0.9}, Speed{0.85}, grid);
    CHECK(slow.slope == doctest::Approx(2.0).epsilon(0.005));
    CHECK(fast.slope == doctest::Approx(2.0).epsilon(0.005));
    CHECK(std::abs(slow.intercept - fast.intercept) > 0.1);  // prefactor lands in the intercept
}

TEST_CASE("fit rejects degenerate grids") {
    CHECK_THROWS_AS(oracle::fit_gamma_exponent(Speed{0.8}, Speed{0.8}, {0.1, 0.2, 0.3}),
                    std::invalid_argument);
    const std::vector<double> out_of_range{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 3.0};
    CHECK_THROWS_AS(oracle::fit_gamma_exponent(Speed{0.8}, Speed{0.8}, out_of_range),
                    std::invalid_argument);
}

TEST_CASE("convergence scans shrink toward the limit") {
    std::vector<double> beta_grid;
    for (int k = 1; k <= 8; ++k) beta_grid.push_back(1.0 - std::pow(10.0, -k));

    for (auto kind : cooper::kSpinKinds) {
        const auto scan =
            oracle::convergence_scan(kind, {0.7, 0.2}, kPi / 3.0, beta_grid);
        REQUIRE(scan.size() == beta_grid.size());
        CHECK(scan.back().deviation < 5e-4);
        for (std::size_t i = scan.size() / 2; i < scan.size(); ++i)
            CHECK(scan[i].deviation <= scan[i - 1].deviation + 1e-12);
    }
}

TEST_CASE("T+ at right angles with spin along z converges immediately") {
    const auto scan = oracle::convergence_scan(cooper::SpinKind::Tp, {0.0, 0.0}, kPi / 2.0,
                                               {0.9, 0.99});
    CHECK(scan[1].deviation < 0.02);  // regression baseline
}

TEST_CASE("convergence scan rejects a non-increasing grid") {
    CHECK_THROWS_AS(
        oracle::convergence_scan(cooper::SpinKind::S, {0.7, 0.2}, 1.0, {0.9, 0.9}),
        std::invalid_argument);
}

TEST_CASE("sample stream is deterministic per seed") {
    oracle::SampleStream a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int n = 0; n < 100; ++n) {
        const double ua = a.uniform(0, 1), ub = b.uniform(0, 1), uc = c.uniform(0, 1);
        all_equal = all_equal && (ua == ub);
        any_diff = any_diff || (ua != uc);
    }
    CHECK(all_equal);
    CHECK(any_diff);

    oracle::SampleStream d(7);
    for (int n = 0; n < 50; ++n) {
        const auto g = d.geometry();
        CHECK(g.theta > 0.04);
        CHECK(g.theta < kPi - 0.04);
        CHECK(g.v1.beta() >= 0.05);
        CHECK(g.v1.beta() <= 0.95);
    }
}

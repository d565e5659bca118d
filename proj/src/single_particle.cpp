#include "spinboost/single_particle.hpp"

#include <cmath>
#include <stdexcept>

namespace spinboost::single_particle {

using kinematics::kPi;
using qmath::cplx;

SpinOrientation::SpinOrientation(double phi_in, double eta_in) {
    if (!std::isfinite(phi_in) || !std::isfinite(eta_in))
        throw std::domain_error("SpinOrientation: non-finite angle");
    // Fold phi into [0, pi]; a negative inclination is the same axis with
    // the azimuth advanced by pi.
    double p = std::fmod(phi_in, 2.0 * kPi);
    if (p < 0.0) p += 2.0 * kPi;
    double e = eta_in;
    if (p > kPi) {
        p = 2.0 * kPi - p;
        e += kPi;
    }
    e = std::fmod(e, 2.0 * kPi);
    if (e < 0.0) e += 2.0 * kPi;
    phi = p;
    eta = e;
}

TildeBasis tilde_basis(const SpinOrientation& s) {
    const double ch = std::cos(s.phi / 2.0), sh = std::sin(s.phi / 2.0);
    const cplx ie = cplx(0.0, 1.0) * std::exp(cplx(0.0, -s.eta));
    return {{ch, ie * sh}, {-sh, ie * ch}};
}

SingleState boost_single(const kinematics::BoostGeometry& g, const SpinOrientation& s) {
    const auto w = kinematics::wigner_pair(g);
    const double cp = std::cos(s.phi), sp = std::sin(s.phi);
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    qmath::StateVector amps(std::vector<cplx>{
        r * (std::cos(w.omega_plus) - i * std::sin(w.omega_plus) * cp),
        r * (i * std::sin(w.omega_plus) * sp),
        r * (std::cos(w.omega_minus) + i * std::sin(w.omega_minus) * cp),
        r * (-i * std::sin(w.omega_minus) * sp),
    });
    return {std::move(amps), g, s};
}

SingleState boost_single_oracle(const kinematics::BoostGeometry& g, const SpinOrientation& s) {
    const auto w = kinematics::wigner_pair(g);
    const auto tb = tilde_basis(s);
    const auto u_plus = qmath::su2_rotation(w.omega_plus, {0.0, 0.0, 1.0});
    const auto u_minus = qmath::su2_rotation(w.omega_minus, {0.0, 0.0, -1.0});

    const double r = 1.0 / std::sqrt(2.0);
    const std::array<cplx, 2> start{r * tb.up[0], r * tb.up[1]};  // z-basis spinor per branch
    const auto branch_plus = u_plus.apply(start);
    const auto branch_minus = u_minus.apply(start);

    auto project = [](const std::array<cplx, 2>& basis_vec, const std::array<cplx, 2>& v) {
        return std::conj(basis_vec[0]) * v[0] + std::conj(basis_vec[1]) * v[1];
    };
    qmath::StateVector amps(std::vector<cplx>{
        project(tb.up, branch_plus),
        project(tb.down, branch_plus),
        project(tb.up, branch_minus),
        project(tb.down, branch_minus),
    });
    return {std::move(amps), g, s};
}

qmath::DensityMatrix reduced_velocity_density(const SingleState& st) {
    const auto rho = qmath::DensityMatrix::from_pure(st.amps);
    return qmath::partial_trace(rho, 2, 2, qmath::Subsystem::A);
}

double entanglement_entropy(const SingleState& st) {
    return qmath::von_neumann_entropy(reduced_velocity_density(st));
}

double entropy_limit_formula(double phi) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > kPi)
        throw std::domain_error("entropy_limit_formula: phi outside [0, pi]");
    const double c = std::cos(phi);
    auto term = [](double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); };
    return 1.0 - 0.5 * term(1.0 + c) - 0.5 * term(1.0 - c);
}

}  // namespace spinboost::single_particle

// Single spin-1/2 particle in a superposition of +v1 / -v1 velocity
// eigenstates, boosted by v2. Builds the tilted spin basis, applies the
// branch-dependent rotations, and measures the velocity-spin entanglement.
//
// Basis ordering for SingleState amplitudes (fixed):
//   index 0: v+ up~   index 1: v+ down~   index 2: v- up~   index 3: v- down~
// where v+/v- are the boosted images of +v1/-v1 and up~/down~ are spin up
// and down along the tilted axis.
#pragma once

#include "spinboost/kinematics.hpp"
#include "spinboost/qmath.hpp"

namespace spinboost::single_particle {

/// Spin axis tilted by inclination phi from z and azimuth eta from x.
/// Normalized on construction: phi into [0, pi], eta into [0, 2pi).
struct SpinOrientation {
    SpinOrientation() = default;
    SpinOrientation(double phi, double eta);

    double phi = 0.0;
    double eta = 0.0;
};

/// Spin-up and spin-down spinors along the tilted axis, expressed in the
/// z basis:
///   up~   = ( cos(phi/2),  i e^{-i eta} sin(phi/2) )
///   down~ = (-sin(phi/2),  i e^{-i eta} cos(phi/2) )
struct TildeBasis {
    std::array<qmath::cplx, 2> up;
    std::array<qmath::cplx, 2> down;
};

TildeBasis tilde_basis(const SpinOrientation& s);

/// Normalized 4-amplitude state on {v+, v-} (x) {up~, down~}.
struct SingleState {
    qmath::StateVector amps;  // dim 4, ordering documented above
    kinematics::BoostGeometry geometry;
    SpinOrientation spin;
};

/// Boost of (|v1> + |-v1>) |up~> / sqrt(2) by v2, via the closed-form
/// branch amplitudes. Each amplitude carries a 1/sqrt(2) factor:
///   v+ up~:   cos(w+) - i sin(w+) cos(phi)
///   v+ down~: +i sin(w+) sin(phi)
///   v- up~:   cos(w-) + i sin(w-) cos(phi)
///   v- down~: -i sin(w-) sin(phi)
SingleState boost_single(const kinematics::BoostGeometry& g, const SpinOrientation& s);

/// Same transform built from first principles: su2_rotation(w+, +z) on the
/// +v1 branch and su2_rotation(w-, -z) on the -v1 branch (the rotation axis
/// v2 x v1 flips sign with v1), applied in the z basis and projected back
/// onto the tilde basis. Agrees with boost_single amplitude-for-amplitude.
SingleState boost_single_oracle(const kinematics::BoostGeometry& g, const SpinOrientation& s);

/// 2x2 velocity density matrix after tracing out spin.
qmath::DensityMatrix reduced_velocity_density(const SingleState& st);

/// Velocity-spin entanglement entropy, in bits.
double entanglement_entropy(const SingleState& st);

/// Entropy in the limit where both speeds approach c:
/// 1 - (1+cos phi)/2 log2(1+cos phi) - (1-cos phi)/2 log2(1-cos phi).
double entropy_limit_formula(double phi);

}  // namespace spinboost::single_particle

// Two-electron pair states (singlet and triplets over the tilted spin
// basis) under a pair of relativistic boosts: the first-principles
// branch-by-branch transform, the closed-form transforms it validates,
// their both-speeds-to-c limits, and the decomposition of any pair state
// onto {velocity-symmetric, velocity-antisymmetric} x {S, T0, T+, T-}.
//
// Basis ordering for PairState amplitudes (fixed):
//   index((vA, vB, sA, sB)) = ((vA*2 + vB)*2 + sA)*2 + sB
// with vA, vB in {0: v+, 1: v-} (pre-boost: {+v1, -v1}) and sA, sB in
// {0: up~, 1: down~}.
//
// Pair spin states over the tilted basis:
//   S  = (ud - du)/sqrt2     T0 = (ud + du)/sqrt2
//   T+ = (uu + dd)/sqrt2     T- = (uu - dd)/sqrt2
#pragma once

#include <array>

#include "spinboost/kinematics.hpp"
#include "spinboost/qmath.hpp"
#include "spinboost/single_particle.hpp"

namespace spinboost::cooper {

enum class SpinKind { S, T0, Tp, Tm };
enum class VelocityParity { Sym, Antisym };

constexpr std::array<SpinKind, 4> kSpinKinds{SpinKind::S, SpinKind::T0, SpinKind::Tp,
                                             SpinKind::Tm};
const char* spin_kind_name(SpinKind k);

/// The four pair spin states for a given orientation, expanded in the
/// z (x) z basis. In the tilde (x) tilde basis their coordinates are the
/// orientation-independent constants above; see tilde_rep().
struct PairSpinBasis {
    std::array<qmath::StateVector, 4> z_vectors;  // indexed by SpinKind order S,T0,T+,T-

    const qmath::StateVector& z_vec(SpinKind k) const {
        return z_vectors[static_cast<std::size_t>(k)];
    }
    /// Coordinates in the tilde (x) tilde basis (ordering uu, ud, du, dd).
    static std::array<qmath::cplx, 4> tilde_rep(SpinKind k);
};

PairSpinBasis pair_basis(const single_particle::SpinOrientation& s);

/// Normalized 16-amplitude two-particle state; physical electron pairs are
/// antisymmetric under simultaneous exchange of the velocity and spin slots.
struct PairState {
    qmath::StateVector amps;  // dim 16, ordering documented above
    kinematics::BoostGeometry geometry;
    single_particle::SpinOrientation spin;
};

std::size_t pair_index(int vel_a, int vel_b, int spin_a, int spin_b);

/// Largest deviation from fermionic exchange antisymmetry.
double exchange_antisymmetry_violation(const PairState& st);

/// Pre-boost pair: the singlet rides the velocity-symmetric combination
/// (|v1,-v1> + |-v1,v1>)/sqrt2, each triplet the antisymmetric one.
PairState initial_pair(SpinKind kind, const single_particle::SpinOrientation& s);

/// First-principles boost: on every velocity branch, rotate the spin of a
/// particle that started at +v1 by su2_rotation(w+, +z) and one that
/// started at -v1 by su2_rotation(w-, -z), working in the z basis and
/// projecting back onto the tilde pair basis. This is the oracle that all
/// closed forms below are checked against.
PairState boost_pair(const kinematics::BoostGeometry& g, const PairState& st);

/// Mixing parameter of the boosted singlet:
///   Gamma = tan^2(w+ + w-) = (g1^2 - 1)(g2^2 - 1) sin^2(theta) / (g1 + g2)^2.
/// Requires theta in (0, pi). Returns +infinity when w+ + w- hits pi/2
/// exactly (unreachable for speeds below 1); callers treat that as the
/// fully converted limit.
double gamma_big(const kinematics::BoostGeometry& g);

/// Variant with a single power of sin(theta), kept only for comparison
/// reports; measured boost data follows the sin^2 form (see oracle module).
double gamma_big_linear(const kinematics::BoostGeometry& g);

/// Boosted singlet in closed form:
///   1/sqrt(2(1+Gamma)) [ (sym)|S> - i sqrt(Gamma) (antisym)(sin phi |T-> + cos phi |T0>) ].
/// An infinite Gamma routes to the fully converted limit form.
PairState singlet_closed_form(const kinematics::BoostGeometry& g,
                              const single_particle::SpinOrientation& s);

/// Boosted triplets in closed form (kind must be T0, T+, or T-):
///   T+: (antisym)[ cos(w+-w-)|T+> + i sin(w+-w-)(sin phi |T0> - cos phi |T->) ]
///   T-: (antisym)[ (cos w+ cos w- + sin w+ sin w- cos 2phi)|T->
///                  - i sin(w+-w-) cos phi |T+> - 2 sin w+ sin w- sin phi cos phi |T0> ]
///       - i (sym) sin(w+ + w-) sin phi |S>
///   T0: (antisym)[ (cos w+ cos w- - sin w+ sin w- cos 2phi)|T0>
///                  + i sin(w+-w-) sin phi |T+> - 2 sin w+ sin w- sin phi cos phi |T-> ]
///       - i (sym) sin(w+ + w-) cos phi |S>
/// Output renormalized to unit norm.
PairState triplet_closed_form(SpinKind kind, const kinematics::BoostGeometry& g,
                              const single_particle::SpinOrientation& s);

/// Boosted states in the limit where both speeds approach c (theta must lie
/// strictly inside (0, pi)):
///   S:  -i (antisym)(sin phi |T-> + cos phi |T0>)
///   T+: (antisym)[ sin th |T+> + i cos th cos phi |T-> - i cos th sin phi |T0> ]
///   T-: (antisym)[ sin th cos^2 phi |T-> + i cos th cos phi |T+>
///                  - (1/2) sin th sin 2phi |T0> ] - i (sym) sin phi |S>
///   T0: (antisym)[ sin th sin^2 phi |T0> - i cos th sin phi |T+>
///                  - (1/2) sin th sin 2phi |T-> ] - i (sym) cos phi |S>
PairState ultrarelativistic_limit(SpinKind kind, double theta,
                                  const single_particle::SpinOrientation& s);

/// Coefficients on the eight orthonormal combinations
/// (velocity parity) x (pair spin state). Magnitudes squared sum to 1 for
/// any pair state supported on the v+v- / v-v+ velocity branches.
struct PairDecomposition {
    std::array<std::array<qmath::cplx, 4>, 2> coeffs{};  // [parity][spin kind]

    const qmath::cplx& at(VelocityParity p, SpinKind k) const {
        return coeffs[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
    }
    qmath::cplx& at(VelocityParity p, SpinKind k) {
        return coeffs[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
    }
    double weight(VelocityParity p, SpinKind k) const;
    double total_weight() const;
};

PairDecomposition decompose(const PairState& st);

/// Inverse of decompose; exact for states supported on the mixed velocity
/// branches.
PairState reconstruct(const PairDecomposition& d, const kinematics::BoostGeometry& g,
                      const single_particle::SpinOrientation& s);

/// The 16-amplitude combination vector (parity) x (spin kind) in the fixed
/// PairState ordering.
qmath::StateVector combination_vector(VelocityParity p, SpinKind k);

}  // namespace spinboost::cooper

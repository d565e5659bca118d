// Relativistic boost geometry: gamma factors, the D factor, the two Wigner
// angles picked up by the +v1 / -v1 velocity branches under a second boost
// at angle theta, and velocity composition for reporting the boosted labels.
//
// All speeds are dimensionless fractions of c.
#pragma once

#include <array>

namespace spinboost::kinematics {

inline constexpr double kPi = 3.14159265358979323846;

/// Speed as a fraction of c; valid range [0, 1).
class Speed {
public:
    Speed() = default;
    explicit Speed(double beta);
    double beta() const { return beta_; }

private:
    double beta_ = 0.0;
};

/// gamma = (1 - beta^2)^{-1/2}.
double gamma(Speed v);

/// D = sqrt(((g1+1)/(g1-1)) ((g2+1)/(g2-1))); requires g1, g2 > 1.
/// Diverges as either speed goes to zero, so zero-speed callers must
/// special-case before calling (wigner_pair does).
double d_factor(double g1, double g2);

/// Two boost speeds and the angle between the boost directions.
/// theta is normalized into [0, pi] on construction.
struct BoostGeometry {
    BoostGeometry() = default;
    BoostGeometry(Speed v1, Speed v2, double theta);

    Speed v1;
    Speed v2;
    double theta = 0.0;
};

/// Rotation angles for the +v1 and -v1 branches; each lies in [0, pi/2].
struct WignerPair {
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    double sum() const { return omega_plus + omega_minus; }
};

/// tan(omega+) = sin(theta) / (cos(theta) + D) and
/// tan(omega-) = sin(theta) / (-cos(theta) + D); the -v1 branch subtends
/// the supplementary angle pi - theta with the second boost. Degenerate
/// inputs (either speed zero, or collinear boosts) give (0, 0).
WignerPair wigner_pair(const BoostGeometry& g);

/// Limit of omega+ + omega- as both speeds approach c: always pi/2 for
/// theta in (0, pi). Throws std::domain_error at theta in {0, pi}.
double omega_sum_limit(double theta);

/// 3-velocity as a fraction of c; magnitude must stay below 1.
class Velocity3 {
public:
    Velocity3() = default;
    Velocity3(double x, double y, double z);
    const std::array<double, 3>& components() const { return c_; }
    double magnitude() const;

private:
    std::array<double, 3> c_{0.0, 0.0, 0.0};
};

/// Velocity of a particle moving at u after applying a boost v.
Velocity3 compose_velocities(const Velocity3& u, const Velocity3& v);

}  // namespace spinboost::kinematics

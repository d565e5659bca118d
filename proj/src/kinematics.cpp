#include "spinboost/kinematics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinboost::kinematics {

Speed::Speed(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta < 0.0 || beta >= 1.0) {
        std::ostringstream msg;
        msg << "Speed: beta " << beta << " outside [0, 1)";
        throw std::domain_error(msg.str());
    }
}

double gamma(Speed v) {
    const double b = v.beta();
    // (1-b)(1+b) keeps precision as b -> 1.
    return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

double d_factor(double g1, double g2) {
    if (g1 <= 1.0 || g2 <= 1.0) {
        std::ostringstream msg;
        msg << "d_factor: singular kinematics, gamma factors (" << g1 << ", " << g2
            << ") must both exceed 1";
        throw std::domain_error(msg.str());
    }
    return std::sqrt(((g1 + 1.0) / (g1 - 1.0)) * ((g2 + 1.0) / (g2 - 1.0)));
}

BoostGeometry::BoostGeometry(Speed v1_in, Speed v2_in, double theta_in)
    : v1(v1_in), v2(v2_in) {
    if (!std::isfinite(theta_in)) throw std::domain_error("BoostGeometry: non-finite theta");
    // Fold into [0, pi]: only the relative angle between the boosts matters.
    double t = std::fmod(theta_in, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    if (t > kPi) t = 2.0 * kPi - t;
    theta = t;
}

WignerPair wigner_pair(const BoostGeometry& g) {
    if (g.v1.beta() == 0.0 || g.v2.beta() == 0.0 || g.theta == 0.0 || g.theta == kPi)
        return {0.0, 0.0};
    const double d = d_factor(gamma(g.v1), gamma(g.v2));
    const double s = std::sin(g.theta), c = std::cos(g.theta);
    // D > 1 >= |cos(theta)|, so both denominators are positive and both
    // angles land in [0, pi/2).
    return {std::atan2(s, c + d), std::atan2(s, -c + d)};
}

double omega_sum_limit(double theta) {
    if (!(theta > 0.0 && theta < kPi)) {
        std::ostringstream msg;
        msg << "omega_sum_limit: degenerate geometry, theta " << theta
            << " must lie strictly inside (0, pi)";
        throw std::domain_error(msg.str());
    }
    // tan(omega+) -> tan(theta/2) and tan(omega-) -> cot(theta/2) as D -> 1.
    return kPi / 2.0;
}

Velocity3::Velocity3(double x, double y, double z) : c_{x, y, z} {
    const double m = magnitude();
    if (!std::isfinite(m) || m >= 1.0) {
        std::ostringstream msg;
        msg << "Velocity3: magnitude " << m << " not below 1";
        throw std::domain_error(msg.str());
    }
}

double Velocity3::magnitude() const {
    return std::sqrt(c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2]);
}

Velocity3 compose_velocities(const Velocity3& u, const Velocity3& v) {
    const auto& uc = u.components();
    const auto& vc = v.components();
    const double vmag = v.magnitude();
    const double gv = 1.0 / std::sqrt((1.0 - vmag) * (1.0 + vmag));
    const double udotv = uc[0] * vc[0] + uc[1] * vc[1] + uc[2] * vc[2];
    const double pref = 1.0 / (1.0 + udotv);
    const double par = gv / (gv + 1.0) * udotv;
    std::array<double, 3> w{};
    for (int i = 0; i < 3; ++i) w[i] = pref * (vc[i] + uc[i] / gv + par * vc[i]);
    return Velocity3(w[0], w[1], w[2]);
}

}  // namespace spinboost::kinematics

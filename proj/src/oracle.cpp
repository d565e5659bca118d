#include "spinboost/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinboost::oracle {

using kinematics::kPi;
using qmath::cplx;

ComparisonReport compare_states(const qmath::StateVector& a, const qmath::StateVector& b,
                                double tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("compare_states: dimension mismatch");

    std::size_t k = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double score = std::abs(a[i]) + std::abs(b[i]);
        if (score > best) {
            best = score;
            k = i;
        }
    }
    cplx phase{1.0, 0.0};
    const cplx z = a[k] * std::conj(b[k]);
    if (std::abs(z) > 0.0) phase = z / std::abs(z);

    double dev = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        dev = std::max(dev, std::abs(a[i] - phase * b[i]));
    return {dev, phase, dev <= tol, tol};
}

ExponentFit fit_gamma_exponent(kinematics::Speed beta1, kinematics::Speed beta2,
                               const std::vector<double>& theta_grid) {
    if (theta_grid.size() < 8)
        throw std::invalid_argument("fit_gamma_exponent: need at least 8 grid points");
    std::vector<double> xs, ys;
    for (double theta : theta_grid) {
        if (!(theta > 0.0 && theta <= kPi / 2.0))
            throw std::invalid_argument("fit_gamma_exponent: theta grid must lie in (0, pi/2]");
        const kinematics::BoostGeometry g{beta1, beta2, theta};
        const auto spin = single_particle::SpinOrientation{0.4, 0.0};
        const auto boosted = cooper::boost_pair(g, cooper::initial_pair(cooper::SpinKind::S, spin));
        const double w = cooper::decompose(boosted).weight(cooper::VelocityParity::Sym,
                                                           cooper::SpinKind::S);
        xs.push_back(std::log(std::sin(theta)));
        ys.push_back(std::log(1.0 / w - 1.0));
    }
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("fit_gamma_exponent: degenerate theta grid");
    const double slope = sxy / sxx;
    const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return {slope, my - slope * mx, std::clamp(r2, 0.0, 1.0), n};
}

std::vector<ConvergencePoint> convergence_scan(cooper::SpinKind kind,
                                               const single_particle::SpinOrientation& s,
                                               double theta,
                                               const std::vector<double>& beta_grid) {
    for (std::size_t i = 1; i < beta_grid.size(); ++i)
        if (!(beta_grid[i] > beta_grid[i - 1]))
            throw std::invalid_argument("convergence_scan: beta grid must increase strictly");

    const auto limit = cooper::ultrarelativistic_limit(kind, theta, s);
    std::vector<ConvergencePoint> out;
    out.reserve(beta_grid.size());
    for (double beta : beta_grid) {
        const kinematics::BoostGeometry g{kinematics::Speed{beta}, kinematics::Speed{beta},
                                          theta};
        const auto finite = kind == cooper::SpinKind::S
                                ? cooper::singlet_closed_form(g, s)
                                : cooper::triplet_closed_form(kind, g, s);
        const auto rep = compare_states(limit.amps, finite.amps, 0.0);
        out.push_back({beta, rep.max_abs_deviation});
    }
    return out;
}

std::uint64_t SampleStream::next() {
    // splitmix64; deterministic across platforms.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SampleStream::uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

kinematics::BoostGeometry SampleStream::geometry() {
    const double b1 = uniform(0.05, 0.95);
    const double b2 = uniform(0.05, 0.95);
    const double theta = uniform(0.05, kPi - 0.05);
    return {kinematics::Speed{b1}, kinematics::Speed{b2}, theta};
}

single_particle::SpinOrientation SampleStream::orientation() {
    return {uniform(0.0, kPi), uniform(0.0, 2.0 * kPi)};
}

}  // namespace spinboost::oracle

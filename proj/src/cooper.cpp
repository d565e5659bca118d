#include "spinboost/cooper.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace spinboost::cooper {

using kinematics::kPi;
using qmath::cplx;
using single_particle::SpinOrientation;
using single_particle::tilde_basis;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

qmath::StateVector zero16() { return qmath::StateVector(std::size_t{16}); }

// 2x2 matrix applied to one spin slot of a 4-amp (spinA x spinB) block.
std::array<cplx, 4> apply_two_spin(const qmath::Unitary2& ua, const qmath::Unitary2& ub,
                                   const std::array<cplx, 4>& block) {
    std::array<cplx, 4> out{};
    for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb)
            for (int ta = 0; ta < 2; ++ta)
                for (int tb = 0; tb < 2; ++tb)
                    out[sa * 2 + sb] += ua.e[sa][ta] * ub.e[sb][tb] * block[ta * 2 + tb];
    return out;
}

}  // namespace

const char* spin_kind_name(SpinKind k) {
    switch (k) {
        case SpinKind::S: return "S";
        case SpinKind::T0: return "T0";
        case SpinKind::Tp: return "T+";
        case SpinKind::Tm: return "T-";
    }
    return "?";
}

std::size_t pair_index(int vel_a, int vel_b, int spin_a, int spin_b) {
    return static_cast<std::size_t>(((vel_a * 2 + vel_b) * 2 + spin_a) * 2 + spin_b);
}

std::array<cplx, 4> PairSpinBasis::tilde_rep(SpinKind k) {
    switch (k) {
        case SpinKind::S: return {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
        case SpinKind::T0: return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
        case SpinKind::Tp: return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
        case SpinKind::Tm: return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
    }
    throw std::invalid_argument("tilde_rep: bad spin kind");
}

PairSpinBasis pair_basis(const SpinOrientation& s) {
    const auto tb = tilde_basis(s);
    const qmath::StateVector up(std::vector<cplx>{tb.up[0], tb.up[1]});
    const qmath::StateVector down(std::vector<cplx>{tb.down[0], tb.down[1]});

    auto mix = [](const qmath::StateVector& a, const qmath::StateVector& b, double sign) {
        std::vector<cplx> v(4);
        for (std::size_t i = 0; i < 4; ++i) v[i] = kInvSqrt2 * (a[i] + sign * b[i]);
        return qmath::StateVector(std::move(v));
    };
    const auto ud = qmath::tensor_product(up, down);
    const auto du = qmath::tensor_product(down, up);
    const auto uu = qmath::tensor_product(up, up);
    const auto dd = qmath::tensor_product(down, down);
    return PairSpinBasis{{mix(ud, du, -1.0), mix(ud, du, +1.0), mix(uu, dd, +1.0),
                          mix(uu, dd, -1.0)}};
}

double exchange_antisymmetry_violation(const PairState& st) {
    double worst = 0.0;
    for (int va = 0; va < 2; ++va)
        for (int vb = 0; vb < 2; ++vb)
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb) {
                    const cplx sum = st.amps[pair_index(va, vb, sa, sb)] +
                                     st.amps[pair_index(vb, va, sb, sa)];
                    worst = std::max(worst, std::abs(sum));
                }
    return worst;
}

PairState initial_pair(SpinKind kind, const SpinOrientation& s) {
    auto amps = zero16();
    const auto spin = PairSpinBasis::tilde_rep(kind);
    const double parity = (kind == SpinKind::S) ? +1.0 : -1.0;  // velocity exchange sign
    for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb) {
            const cplx c = kInvSqrt2 * spin[sa * 2 + sb];
            amps[pair_index(0, 1, sa, sb)] += c;
            amps[pair_index(1, 0, sa, sb)] += parity * c;
        }
    return {std::move(amps), kinematics::BoostGeometry{}, s};
}

PairState boost_pair(const kinematics::BoostGeometry& g, const PairState& st) {
    const auto w = kinematics::wigner_pair(g);
    const auto tb = tilde_basis(st.spin);

    // Change-of-basis matrix B with the tilde spinors as columns; the
    // per-particle rotation in tilde coordinates is B^dag U B.
    qmath::Unitary2 basis;
    basis.e[0][0] = tb.up[0];
    basis.e[1][0] = tb.up[1];
    basis.e[0][1] = tb.down[0];
    basis.e[1][1] = tb.down[1];
    const auto to_tilde = basis.adjoint();
    const auto rot_plus = to_tilde.multiply(
        qmath::su2_rotation(w.omega_plus, {0.0, 0.0, 1.0}).multiply(basis));
    const auto rot_minus = to_tilde.multiply(
        qmath::su2_rotation(w.omega_minus, {0.0, 0.0, -1.0}).multiply(basis));

    auto amps = zero16();
    for (int va = 0; va < 2; ++va) {
        for (int vb = 0; vb < 2; ++vb) {
            std::array<cplx, 4> block{};
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb)
                    block[sa * 2 + sb] = st.amps[pair_index(va, vb, sa, sb)];
            const auto out = apply_two_spin(va == 0 ? rot_plus : rot_minus,
                                            vb == 0 ? rot_plus : rot_minus, block);
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb)
                    amps[pair_index(va, vb, sa, sb)] = out[sa * 2 + sb];
        }
    }
    return {std::move(amps), g, st.spin};
}

double gamma_big(const kinematics::BoostGeometry& g) {
    if (!(g.theta > 0.0 && g.theta < kPi))
        throw std::domain_error("gamma_big: theta must lie strictly inside (0, pi)");
    const auto w = kinematics::wigner_pair(g);
    if (w.sum() == kPi / 2.0) return std::numeric_limits<double>::infinity();
    const double g1 = kinematics::gamma(g.v1), g2 = kinematics::gamma(g.v2);
    const double s = std::sin(g.theta);
    return (g1 * g1 - 1.0) * (g2 * g2 - 1.0) * s * s / ((g1 + g2) * (g1 + g2));
}

double gamma_big_linear(const kinematics::BoostGeometry& g) {
    if (!(g.theta > 0.0 && g.theta < kPi))
        throw std::domain_error("gamma_big_linear: theta must lie strictly inside (0, pi)");
    const double g1 = kinematics::gamma(g.v1), g2 = kinematics::gamma(g.v2);
    return (g1 * g1 - 1.0) * (g2 * g2 - 1.0) * std::sin(g.theta) / ((g1 + g2) * (g1 + g2));
}

namespace {

// Assembles sum_k coeff[k] * (parity_k)(spin_k) and normalizes.
PairState assemble(const std::array<std::pair<VelocityParity, SpinKind>, 4>& slots,
                   const std::array<cplx, 4>& coeff, const kinematics::BoostGeometry& g,
                   const SpinOrientation& s) {
    auto amps = zero16();
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if (coeff[k] == cplx(0.0)) continue;
        const auto spin = PairSpinBasis::tilde_rep(slots[k].second);
        const double parity = slots[k].first == VelocityParity::Sym ? +1.0 : -1.0;
        for (int sa = 0; sa < 2; ++sa)
            for (int sb = 0; sb < 2; ++sb) {
                const cplx c = coeff[k] * kInvSqrt2 * spin[sa * 2 + sb];
                amps[pair_index(0, 1, sa, sb)] += c;
                amps[pair_index(1, 0, sa, sb)] += parity * c;
            }
    }
    return {amps.normalized(), g, s};
}

}  // namespace

PairState singlet_closed_form(const kinematics::BoostGeometry& g, const SpinOrientation& s) {
    const auto w = kinematics::wigner_pair(g);
    if (w.sum() == 0.0) return {initial_pair(SpinKind::S, s).amps, g, s};
    const double mixing = gamma_big(g);
    if (std::isinf(mixing)) return ultrarelativistic_limit(SpinKind::S, g.theta, s);

    const double pref = 1.0 / std::sqrt(1.0 + mixing);
    const cplx triplet = cplx(0.0, -1.0) * std::sqrt(mixing) * pref;
    const double sp = std::sin(s.phi), cp = std::cos(s.phi);
    return assemble({{{VelocityParity::Sym, SpinKind::S},
                      {VelocityParity::Antisym, SpinKind::Tm},
                      {VelocityParity::Antisym, SpinKind::T0},
                      {VelocityParity::Antisym, SpinKind::Tp}}},
                    {pref, triplet * sp, triplet * cp, cplx(0.0)}, g, s);
}

PairState triplet_closed_form(SpinKind kind, const kinematics::BoostGeometry& g,
                              const SpinOrientation& s) {
    if (kind == SpinKind::S)
        throw std::invalid_argument("triplet_closed_form: kind must be a triplet");
    const auto w = kinematics::wigner_pair(g);
    const double cp = std::cos(w.omega_plus), sp = std::sin(w.omega_plus);
    const double cm = std::cos(w.omega_minus), sm = std::sin(w.omega_minus);
    const double sdiff = std::sin(w.omega_plus - w.omega_minus);
    const double ssum = std::sin(w.sum());
    const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
    const double c2phi = std::cos(2.0 * s.phi);
    const cplx i(0.0, 1.0);

    switch (kind) {
        case SpinKind::Tp:
            return assemble({{{VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {std::cos(w.omega_plus - w.omega_minus), i * sdiff * sphi,
                             -i * sdiff * cphi, cplx(0.0)},
                            g, s);
        case SpinKind::Tm:
            return assemble({{{VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {cp * cm + sp * sm * c2phi, -i * sdiff * cphi,
                             -2.0 * sp * sm * sphi * cphi, -i * ssum * sphi},
                            g, s);
        case SpinKind::T0:
            return assemble({{{VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {cp * cm - sp * sm * c2phi, i * sdiff * sphi,
                             -2.0 * sp * sm * sphi * cphi, -i * ssum * cphi},
                            g, s);
        default: break;
    }
    throw std::invalid_argument("triplet_closed_form: bad spin kind");
}

PairState ultrarelativistic_limit(SpinKind kind, double theta, const SpinOrientation& s) {
    if (!(theta > 0.0 && theta < kPi))
        throw std::domain_error(
            "ultrarelativistic_limit: degenerate geometry, theta must lie in (0, pi)");
    const double st = std::sin(theta), ct = std::cos(theta);
    const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
    const double s2phi = std::sin(2.0 * s.phi);
    const cplx i(0.0, 1.0);
    const kinematics::BoostGeometry g{kinematics::Speed{}, kinematics::Speed{}, theta};

    switch (kind) {
        case SpinKind::S:
            return assemble({{{VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {-i * sphi, -i * cphi, cplx(0.0), cplx(0.0)}, g, s);
        case SpinKind::Tp:
            return assemble({{{VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {st, i * ct * cphi, -i * ct * sphi, cplx(0.0)}, g, s);
        case SpinKind::Tm:
            // The T0 coefficient carries a minus sign: it is the limit of
            // -2 sin w+ sin w- sin phi cos phi with sin w+ sin w- -> sin(theta)/2.
            return assemble({{{VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {st * cphi * cphi, i * ct * cphi, -0.5 * st * s2phi, -i * sphi}, g,
                            s);
        case SpinKind::T0:
            return assemble({{{VelocityParity::Antisym, SpinKind::T0},
                              {VelocityParity::Antisym, SpinKind::Tp},
                              {VelocityParity::Antisym, SpinKind::Tm},
                              {VelocityParity::Sym, SpinKind::S}}},
                            {st * sphi * sphi, -i * ct * sphi, -0.5 * st * s2phi, -i * cphi}, g,
                            s);
    }
    throw std::invalid_argument("ultrarelativistic_limit: bad spin kind");
}

qmath::StateVector combination_vector(VelocityParity p, SpinKind k) {
    auto amps = zero16();
    const auto spin = PairSpinBasis::tilde_rep(k);
    const double parity = p == VelocityParity::Sym ? +1.0 : -1.0;
    for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb) {
            const cplx c = kInvSqrt2 * spin[sa * 2 + sb];
            amps[pair_index(0, 1, sa, sb)] += c;
            amps[pair_index(1, 0, sa, sb)] += parity * c;
        }
    return amps;
}

double PairDecomposition::weight(VelocityParity p, SpinKind k) const {
    return std::norm(at(p, k));
}

double PairDecomposition::total_weight() const {
    double t = 0.0;
    for (const auto& row : coeffs)
        for (const auto& c : row) t += std::norm(c);
    return t;
}

PairDecomposition decompose(const PairState& st) {
    PairDecomposition d;
    for (auto p : {VelocityParity::Sym, VelocityParity::Antisym})
        for (auto k : kSpinKinds) d.at(p, k) = combination_vector(p, k).inner_product(st.amps);
    return d;
}

PairState reconstruct(const PairDecomposition& d, const kinematics::BoostGeometry& g,
                      const SpinOrientation& s) {
    auto amps = zero16();
    for (auto p : {VelocityParity::Sym, VelocityParity::Antisym})
        for (auto k : kSpinKinds) {
            const cplx c = d.at(p, k);
            if (c == cplx(0.0)) continue;
            const auto v = combination_vector(p, k);
            for (std::size_t idx = 0; idx < 16; ++idx) amps[idx] += c * v[idx];
        }
    return {std::move(amps), g, s};
}

}  // namespace spinboost::cooper

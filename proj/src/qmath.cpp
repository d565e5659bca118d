#include "spinboost/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinboost::qmath {

namespace {

bool all_finite(const std::vector<cplx>& v) {
    for (const auto& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

// Cyclic Jacobi on a real symmetric matrix, eigenvalues only.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> m, std::size_t n) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += m[p * n + q] * m[p * n + q];
        if (off < 1e-28) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {  // columns p,q
                    const double akp = m[k * n + p], akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // rows p,q
                    const double apk = m[p * n + k], aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = m[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

StateVector::StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw std::invalid_argument("StateVector: empty amplitude list");
    if (!all_finite(amps_)) throw std::domain_error("StateVector: non-finite amplitude");
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& z : amps_) s += std::norm(z);
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n < 1e-150) throw std::domain_error("StateVector: cannot normalize zero vector");
    std::vector<cplx> out(amps_);
    for (auto& z : out) z /= n;
    return StateVector(std::move(out));
}

cplx StateVector::inner_product(const StateVector& other) const {
    if (dim() != other.dim())
        throw std::invalid_argument("inner_product: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return StateVector(std::move(out));
}

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_)
        throw std::invalid_argument("DensityMatrix: entry count does not match dimension");
    if (!all_finite(entries_)) throw std::domain_error("DensityMatrix: non-finite entry");
    if (max_hermiticity_violation() > kHermitianTol)
        throw std::domain_error("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(trace() - cplx(1.0, 0.0)) > kHermitianTol)
        throw std::domain_error("DensityMatrix: trace differs from 1 beyond tolerance");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    const std::size_t d = psi.dim();
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) e[i * d + j] = psi[i] * std::conj(psi[j]);
    return DensityMatrix(d, std::move(e));
}

cplx DensityMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

double DensityMatrix::max_hermiticity_violation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
    if (dim_a * dim_b != rho.dim())
        throw std::domain_error("partial_trace: dim_a * dim_b does not match matrix dimension");
    const std::size_t d = (keep == Subsystem::A) ? dim_a : dim_b;
    std::vector<cplx> out(d * d, cplx{});
    if (keep == Subsystem::A) {
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t k = 0; k < dim_b; ++k)
                    out[i * d + j] += rho.at(i * dim_b + k, j * dim_b + k);
    } else {
        for (std::size_t k = 0; k < dim_b; ++k)
            for (std::size_t l = 0; l < dim_b; ++l)
                for (std::size_t i = 0; i < dim_a; ++i)
                    out[k * d + l] += rho.at(i * dim_b + k, i * dim_b + l);
    }
    return DensityMatrix(d, std::move(out));
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    if (d == 2) {
        // closed form: mean +/- sqrt(((a-d)/2)^2 + |b|^2)
        const double a = rho.at(0, 0).real();
        const double dd = rho.at(1, 1).real();
        const double mean = 0.5 * (a + dd);
        const double r = std::sqrt(0.25 * (a - dd) * (a - dd) + std::norm(rho.at(0, 1)));
        return {mean - r, mean + r};
    }
    // Embed H = A + iB into the real symmetric [[A, -B], [B, A]]; its spectrum
    // is that of H with every eigenvalue doubled.
    const std::size_t n = 2 * d;
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const cplx z = rho.at(i, j);
            m[i * n + j] = z.real();
            m[(i + d) * n + (j + d)] = z.real();
            m[i * n + (j + d)] = -z.imag();
            m[(i + d) * n + j] = z.imag();
        }
    }
    const std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(m), n);
    std::vector<double> eig(d);
    for (std::size_t i = 0; i < d; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho)) {
        if (lambda < -kEigTol) {
            std::ostringstream msg;
            msg << "von_neumann_entropy: eigenvalue " << lambda << " below -" << kEigTol;
            throw std::domain_error(msg.str());
        }
        if (lambda <= 0.0) continue;  // 0 log 0 = 0
        s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

std::array<cplx, 2> Unitary2::apply(const std::array<cplx, 2>& v) const {
    return {e[0][0] * v[0] + e[0][1] * v[1], e[1][0] * v[0] + e[1][1] * v[1]};
}

Unitary2 Unitary2::multiply(const Unitary2& rhs) const {
    Unitary2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[i][j] = e[i][0] * rhs.e[0][j] + e[i][1] * rhs.e[1][j];
    return out;
}

Unitary2 Unitary2::adjoint() const {
    Unitary2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.e[i][j] = std::conj(e[j][i]);
    return out;
}

cplx Unitary2::det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

double Unitary2::max_unitarity_violation() const {
    const Unitary2 p = multiply(adjoint());
    double worst = std::abs(std::abs(det()) - 1.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            worst = std::max(worst, std::abs(p.e[i][j] - (i == j ? cplx(1.0) : cplx(0.0))));
    return worst;
}

Unitary2 su2_rotation(double omega, const std::array<double, 3>& axis) {
    const double n2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
    const double n = std::sqrt(n2);
    if (std::abs(n - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "su2_rotation: axis norm " << n << " is not 1 within 1e-9";
        throw std::domain_error(msg.str());
    }
    const double c = std::cos(omega), s = std::sin(omega);
    const cplx i(0.0, 1.0);
    Unitary2 u;
    u.e[0][0] = c - i * s * axis[2];
    u.e[0][1] = -i * s * cplx(axis[0], -axis[1]);
    u.e[1][0] = -i * s * cplx(axis[0], axis[1]);
    u.e[1][1] = c + i * s * axis[2];
    return u;
}

}  // namespace spinboost::qmath

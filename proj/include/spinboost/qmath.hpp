// Small fixed-size complex linear algebra for few-level quantum states:
// state vectors, density matrices, tensor products, partial trace,
// Hermitian eigenvalues and von Neumann entropy. Dimensions stay <= 16.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace spinboost::qmath {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;  // Hermiticity / trace / norm budget
inline constexpr double kEigTol = 1e-9;         // eigenvalue negativity budget

/// Column vector of complex amplitudes. Basis ordering is owned by the
/// module that builds the state (see single_particle.hpp / cooper.hpp).
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<cplx> amps);
    explicit StateVector(std::size_t dim) : amps_(dim) {}

    std::size_t dim() const { return amps_.size(); }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    cplx& operator[](std::size_t i) { return amps_[i]; }
    const std::vector<cplx>& amps() const { return amps_; }

    double norm() const;
    double norm_squared() const;
    /// Rescales to unit norm. Throws std::domain_error on (near-)zero vectors.
    StateVector normalized() const;

    /// <this|other>, conjugating this.
    cplx inner_product(const StateVector& other) const;

private:
    std::vector<cplx> amps_;
};

/// a (x) b with the index of `a` varying slowest: out[i*dim_b + j] = a[i]*b[j].
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Square Hermitian matrix with unit trace, stored dense row-major.
class DensityMatrix {
public:
    /// Validates Hermiticity and unit trace to kHermitianTol.
    DensityMatrix(std::size_t dim, std::vector<cplx> entries);

    /// |psi><psi| for a unit-norm state.
    static DensityMatrix from_pure(const StateVector& psi);

    std::size_t dim() const { return dim_; }
    const cplx& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    cplx trace() const;

    double max_hermiticity_violation() const;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

enum class Subsystem { A, B };

/// Traces out one factor of a (dim_a x dim_b) bipartite density matrix.
/// Index convention matches tensor_product: composite index i*dim_b + j.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// Eigenvalues of a Hermitian matrix, ascending. Closed form for dim 2,
/// cyclic Jacobi otherwise.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

/// S = -sum lambda_i log2 lambda_i, with 0 log 0 = 0. Eigenvalues below
/// -kEigTol raise std::domain_error; small negatives clamp to zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// 2x2 unitary; U U^dag = I and |det U| = 1 to kHermitianTol.
struct Unitary2 {
    std::array<std::array<cplx, 2>, 2> e{};

    std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const;
    Unitary2 multiply(const Unitary2& rhs) const;
    Unitary2 adjoint() const;
    cplx det() const;
    double max_unitarity_violation() const;
};

/// cos(omega) I - i sin(omega) (n . sigma) for a unit axis n.
/// Throws std::domain_error (naming the norm) if |n| strays from 1 by >1e-9.
Unitary2 su2_rotation(double omega, const std::array<double, 3>& axis);

}  // namespace spinboost::qmath

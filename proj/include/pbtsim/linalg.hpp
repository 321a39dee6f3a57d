#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>

namespace pbtsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance used when deciding whether a matrix counts as Hermitian.
inline constexpr double hermitian_tol = 1e-10;

/// Pauli matrix sigma_k for k in 0..3 (identity, x, y, z).
ComplexMatrix pauli_matrix(int k);

/// Kronecker product, row-major subsystem order (first factor is the
/// most significant index block).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out every subsystem not listed in `keep`. `dims` are the
/// subsystem dimensions from most to least significant; `keep` holds
/// sorted subsystem indices. The result orders subsystems as in `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

/// Transpose one tensor factor of a bipartite matrix. `subsystem` is 0
/// for the first (most significant) factor, 1 for the second.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::array<int, 2> dims,
                                int subsystem);

/// Reorder tensor factors: factor k of the result is factor perm[k] of
/// the input (perm is a permutation of 0..dims.size()-1).
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> dims,
                                 std::span<const int> perm);

struct EigenSystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // matching columns
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized
/// before the solve; throws std::invalid_argument when it deviates from
/// Hermiticity by more than `hermitian_tol`.
EigenSystem hermitian_eigs(const ComplexMatrix& m);

/// Inverse square root of a positive semidefinite matrix on its support.
/// Eigenvalues at or below `support_tol` relative to the largest one are
/// mapped to zero; negative eigenvalues beyond tolerance are rejected.
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, double support_tol = 1e-10);

/// Largest absolute entry (zero for empty matrices).
double max_abs(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = hermitian_tol);

}  // namespace pbtsim

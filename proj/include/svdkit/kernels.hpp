#ifndef SVDKIT_KERNELS_HPP
#define SVDKIT_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "svdkit/dense_matrix.hpp"

namespace svdkit {

/// Seed for the deterministic Gaussian sampler. Same seed, same matrix.
struct RngSeed {
    std::uint64_t value = 0;
};

/// C = A * B with plain triple-loop semantics (loop order is cache-friendly
/// for column-major storage but the per-entry summation order is the naive
/// one). Throws DimensionError naming both shapes if a.cols != b.rows.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// C = A^T * B computed from A directly, without materializing A^T.
DenseMatrix matmul_transposed_left(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);

/// A^T * A as an exactly symmetric n x n matrix (each pair of mirror
/// entries is the same dot product, stored twice).
DenseMatrix gram(const DenseMatrix& a);

/// Sum of squared entries, the squared Frobenius norm.
double frobenius_norm_sq(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

/// Thin QR factorization of a tall matrix.
struct QrResult {
    DenseMatrix q;    ///< m x p, orthonormal columns
    DenseMatrix r;    ///< p x p, upper-triangular, nonnegative diagonal
    std::size_t rank; ///< columns whose residual survived the drop threshold
};

/// Householder QR with thin Q, for m >= p.
///
/// The diagonal of R is made nonnegative by flipping signs of (Q column,
/// R row) pairs. A column whose residual norm after the previous
/// reflections falls below 1e-12 * ||h||_F gets R(k,k) = 0; its Q column is
/// still a unit vector orthogonal to the others (the reflector product
/// supplies it), and `rank` counts only the surviving columns.
QrResult qr_thin(const DenseMatrix& h);

struct EigResult {
    std::vector<double> eigenvalues; ///< sorted descending
    DenseMatrix eigenvectors;        ///< column i pairs with eigenvalues[i]
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Input must satisfy max|s - s^T| <= 1e-8 * max|s|; it is symmetrized as
/// (s + s^T)/2 before iterating. Sweeps run until the off-diagonal
/// Frobenius norm drops below 1e-12 * ||s||_F, up to `max_sweeps` full
/// sweeps (default 30); exceeding the cap throws NumericalError carrying
/// the off-diagonal norm reached. Ties in the descending eigenvalue sort
/// keep the rotation output order.
EigResult eig_sym(const DenseMatrix& s);
EigResult eig_sym(const DenseMatrix& s, int max_sweeps);

/// rows x cols matrix of i.i.d. standard normal entries.
///
/// The generator is pinned for reproducibility: std::mt19937_64 seeded with
/// `seed`, uniform doubles from the top 53 bits, Box-Muller transform,
/// entries filled in column-major order. Same seed gives a bit-identical
/// matrix within one build environment.
DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, RngSeed seed);

} // namespace svdkit

#endif

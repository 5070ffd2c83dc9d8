#ifndef SVDKIT_SVD_METHODS_HPP
#define SVDKIT_SVD_METHODS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "svdkit/dense_matrix.hpp"
#include "svdkit/kernels.hpp"

namespace svdkit {

enum class SvdMethod { Truncated, Randomized, Krylov };

/// Lowercase name used by the CLI and CSV output.
const char* method_name(SvdMethod method);
std::optional<SvdMethod> method_from_name(std::string_view name);

/// Tuning knobs for the sketch-based methods.
struct MethodParams {
    std::size_t sketch_width = 1;     ///< l, number of Gaussian test columns
    std::size_t power_iterations = 1; ///< i, extra A(A^T .) passes / Krylov depth
    RngSeed seed{0};

    /// Conventional defaults: l = ceil(n/2), one power iteration.
    static MethodParams defaults_for(std::size_t n, RngSeed seed = RngSeed{0});
};

/// A (possibly truncated) factorization A ~ U diag(sigma) V^T.
struct SvdResult {
    DenseMatrix u;             ///< m x rank, orthonormal columns
    std::vector<double> sigma; ///< length rank, descending, nonnegative
    DenseMatrix v;             ///< n x rank, orthonormal columns
    std::size_t rank = 0;
    SvdMethod method = SvdMethod::Truncated;
};

/// Full-accuracy SVD of a tall matrix via the n x n Gram matrix.
///
/// Eigendecomposes A^T A (never the m x m outer product), takes
/// sigma_i = sqrt(max(lambda_i, 0)) and u_i = A v_i / sigma_i. Singular
/// values at or below 1e-12 * sigma_1 are dropped and the rank reduced, so
/// rank-deficient input yields rank < n rather than a division by zero.
/// Requires rows >= cols; use compute_svd_any for arbitrary shapes.
SvdResult truncated_svd(const DenseMatrix& a);

/// Randomized range-finder SVD: sketch H = A G with an n x l Gaussian G,
/// sharpen with `power_iterations` passes of A(A^T .), orthonormalize,
/// and solve the small n x l problem T = A^T Q.
SvdResult randomized_pca(const DenseMatrix& a, const MethodParams& p);

/// Block Krylov SVD: like randomized_pca but QR-factors the concatenation
/// [H0 | H1 | ... | Hi] of all power-iteration blocks (width (i+1)*l),
/// which subsumes the randomized subspace for the same seed.
/// Requires (i+1)*l <= rows and power_iterations >= 1.
SvdResult krylov_svd(const DenseMatrix& a, const MethodParams& p);

/// Keeps the leading k singular triplets, 1 <= k <= s.rank.
SvdResult truncate_rank(const SvdResult& s, std::size_t k);

SvdResult compute_svd(const DenseMatrix& a, SvdMethod method, const MethodParams& p);

/// Shape-agnostic wrapper: wide input is transposed, factored, and the
/// U/V roles swapped back, keeping every method in its tall orientation.
SvdResult compute_svd_any(const DenseMatrix& a, SvdMethod method, const MethodParams& p);

} // namespace svdkit

#endif

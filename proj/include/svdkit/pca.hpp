#ifndef SVDKIT_PCA_HPP
#define SVDKIT_PCA_HPP

#include <optional>
#include <vector>

#include "svdkit/dense_matrix.hpp"
#include "svdkit/svd_methods.hpp"

namespace svdkit {

/// Which axis of the data matrix indexes examples. Features live on the
/// other axis; centering and projection follow from this.
enum class Orientation { ColumnsAreExamples, RowsAreExamples };

struct CenterResult {
    DenseMatrix centered;
    std::vector<double> mean; ///< one entry per feature
};

/// Removes the per-feature mean (row means for ColumnsAreExamples, column
/// means for RowsAreExamples) and returns the subtracted means.
CenterResult center(const DenseMatrix& a, Orientation orientation);

/// ||A||_F^2 of centered data. Equals tr(A^T A) = tr(A A^T) = sum of all
/// eigenvalues of either Gram matrix, so the full spectrum total is known
/// without any eigendecomposition.
double total_variance(const DenseMatrix& centered);

/// Smallest K >= 1 whose cumulative explained variance reaches `threshold`,
/// or nullopt when even the whole stored spectrum falls short (possible
/// after rank truncation). eigenvalues must be nonnegative and descending;
/// threshold in [0, 1]; total must be positive.
std::optional<std::size_t> select_components(const std::vector<double>& eigenvalues,
                                             double total, double threshold);

/// A fitted PCA basis with its spectrum.
struct PcaModel {
    DenseMatrix basis;               ///< orthonormal projection columns
    std::vector<double> eigenvalues; ///< sigma_i^2, descending
    double total_variance = 0.0;     ///< includes variance beyond the stored rank
    Orientation orientation = Orientation::RowsAreExamples;
    std::vector<double> mean;        ///< per-feature mean removed (zeros if none)
};

/// Centers (optionally), factors with the chosen method, and assembles the
/// model. The basis is U when columns are examples, V when rows are.
PcaModel fit_pca(const DenseMatrix& data, Orientation orientation, SvdMethod method,
                 const MethodParams& params, bool center_data = true);

/// Projects already-centered data: Y = basis^T A for ColumnsAreExamples,
/// Y = A basis for RowsAreExamples.
DenseMatrix transform(const PcaModel& model, const DenseMatrix& a);

/// Relative reconstruction residual ||A - U diag(sigma) V^T||_F / ||A||_F.
/// Streams column by column, never materializing the reconstruction.
/// Throws ParamError when ||A||_F = 0 (the ratio is undefined).
double residual_delta(const DenseMatrix& a, const SvdResult& s);

} // namespace svdkit

#endif

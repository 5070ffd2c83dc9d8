#include "svdkit/pca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "svdkit/errors.hpp"
#include "svdkit/kernels.hpp"

namespace svdkit {

CenterResult center(const DenseMatrix& a, Orientation orientation) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    CenterResult out;
    out.centered = a;

    if (orientation == Orientation::ColumnsAreExamples) {
        // Features are rows; average across the n example columns.
        out.mean.assign(m, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double* aj = a.col(j);
            for (std::size_t i = 0; i < m; ++i) {
                out.mean[i] += aj[i];
            }
        }
        for (double& v : out.mean) {
            v /= static_cast<double>(n);
        }
        for (std::size_t j = 0; j < n; ++j) {
            double* cj = out.centered.col(j);
            for (std::size_t i = 0; i < m; ++i) {
                cj[i] -= out.mean[i];
            }
        }
    } else {
        // Features are columns; average down each column.
        out.mean.assign(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double* aj = a.col(j);
            double sum = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                sum += aj[i];
            }
            const double mean = sum / static_cast<double>(m);
            out.mean[j] = mean;
            double* cj = out.centered.col(j);
            for (std::size_t i = 0; i < m; ++i) {
                cj[i] -= mean;
            }
        }
    }
    return out;
}

double total_variance(const DenseMatrix& centered) {
    return frobenius_norm_sq(centered);
}

std::optional<std::size_t> select_components(const std::vector<double>& eigenvalues,
                                             double total, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw ParamError("select_components: threshold " + std::to_string(threshold) +
                         " outside [0, 1]");
    }
    if (!(total > 0.0)) {
        throw ParamError("select_components: total variance must be positive");
    }
    double prev = std::numeric_limits<double>::infinity();
    for (double lambda : eigenvalues) {
        if (lambda < 0.0 || lambda > prev) {
            throw ParamError("select_components: eigenvalues must be nonnegative descending");
        }
        prev = lambda;
    }
    if (eigenvalues.empty()) {
        throw ParamError("select_components: empty spectrum");
    }

    double cumulative = 0.0;
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        cumulative += eigenvalues[k];
        if (cumulative / total >= threshold) {
            return k + 1; // K has a floor of 1 even at threshold 0
        }
    }
    return std::nullopt; // stored spectrum cannot reach the threshold
}

PcaModel fit_pca(const DenseMatrix& data, Orientation orientation, SvdMethod method,
                 const MethodParams& params, bool center_data) {
    PcaModel model;
    model.orientation = orientation;

    DenseMatrix centered;
    if (center_data) {
        CenterResult c = center(data, orientation);
        centered = std::move(c.centered);
        model.mean = std::move(c.mean);
    } else {
        centered = data;
        model.mean.assign(
            orientation == Orientation::ColumnsAreExamples ? data.rows() : data.cols(), 0.0);
    }

    model.total_variance = total_variance(centered);
    SvdResult s = compute_svd_any(centered, method, params);
    model.basis = orientation == Orientation::ColumnsAreExamples ? std::move(s.u)
                                                                 : std::move(s.v);
    model.eigenvalues.resize(s.sigma.size());
    for (std::size_t i = 0; i < s.sigma.size(); ++i) {
        model.eigenvalues[i] = s.sigma[i] * s.sigma[i];
    }
    return model;
}

DenseMatrix transform(const PcaModel& model, const DenseMatrix& a) {
    if (model.orientation == Orientation::ColumnsAreExamples) {
        if (a.rows() != model.basis.rows()) {
            throw DimensionError("transform: data is " + shape_string(a) + " but basis is " +
                                 shape_string(model.basis) + " (feature rows must match)");
        }
        return matmul_transposed_left(model.basis, a);
    }
    if (a.cols() != model.basis.rows()) {
        throw DimensionError("transform: data is " + shape_string(a) + " but basis is " +
                             shape_string(model.basis) + " (feature columns must match)");
    }
    return matmul(a, model.basis);
}

double residual_delta(const DenseMatrix& a, const SvdResult& s) {
    if (s.u.rows() != a.rows() || s.v.rows() != a.cols()) {
        throw DimensionError("residual_delta: factors " + shape_string(s.u) + "/" +
                             shape_string(s.v) + " do not match data " + shape_string(a));
    }
    const double norm_sq = frobenius_norm_sq(a);
    if (norm_sq == 0.0) {
        throw ParamError("residual_delta: ||A||_F = 0, ratio undefined");
    }

    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t r = s.rank;
    std::vector<double> weights(r);
    std::vector<double> column(m);
    double residual_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
            weights[k] = s.sigma[k] * s.v(j, k);
        }
        std::fill(column.begin(), column.end(), 0.0);
        for (std::size_t k = 0; k < r; ++k) {
            const double* uk = s.u.col(k);
            const double w = weights[k];
            for (std::size_t i = 0; i < m; ++i) {
                column[i] += uk[i] * w;
            }
        }
        const double* aj = a.col(j);
        for (std::size_t i = 0; i < m; ++i) {
            const double d = aj[i] - column[i];
            residual_sq += d * d;
        }
    }
    return std::sqrt(residual_sq / norm_sq);
}

} // namespace svdkit

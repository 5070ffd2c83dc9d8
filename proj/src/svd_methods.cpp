#include "svdkit/svd_methods.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "svdkit/errors.hpp"

namespace svdkit {

const char* method_name(SvdMethod method) {
    switch (method) {
    case SvdMethod::Truncated:
        return "truncated";
    case SvdMethod::Randomized:
        return "randomized";
    case SvdMethod::Krylov:
        return "krylov";
    }
    return "unknown";
}

std::optional<SvdMethod> method_from_name(std::string_view name) {
    if (name == "truncated") return SvdMethod::Truncated;
    if (name == "randomized") return SvdMethod::Randomized;
    if (name == "krylov") return SvdMethod::Krylov;
    return std::nullopt;
}

MethodParams MethodParams::defaults_for(std::size_t n, RngSeed seed) {
    return MethodParams{(n + 1) / 2, 1, seed};
}

namespace {

constexpr double kRankDropRatio = 1e-12;

void require_tall(const DenseMatrix& a, const char* op) {
    if (a.rows() < a.cols()) {
        throw DimensionError(std::string(op) + ": needs rows >= cols, got " + shape_string(a) +
                             "; pass the transpose and swap U/V, or use compute_svd_any");
    }
    if (a.cols() == 0) {
        throw DimensionError(std::string(op) + ": empty input");
    }
}

/// Flips each (v column, u column) pair so the largest-magnitude entry of
/// the v column is positive. Ties take the first maximal index.
void normalize_signs(SvdResult& s) {
    for (std::size_t j = 0; j < s.rank; ++j) {
        double* vj = s.v.col(j);
        std::size_t arg = 0;
        double best = 0.0;
        for (std::size_t i = 0; i < s.v.rows(); ++i) {
            if (std::abs(vj[i]) > best) {
                best = std::abs(vj[i]);
                arg = i;
            }
        }
        if (vj[arg] < 0.0) {
            for (std::size_t i = 0; i < s.v.rows(); ++i) {
                vj[i] = -vj[i];
            }
            double* uj = s.u.col(j);
            for (std::size_t i = 0; i < s.u.rows(); ++i) {
                uj[i] = -uj[i];
            }
        }
    }
}

void swap_factors(SvdResult& s) {
    std::swap(s.u, s.v);
}

void validate_sketch_params(const DenseMatrix& a, const MethodParams& p, bool krylov) {
    const std::size_t n = a.cols();
    if (p.sketch_width < 1 || p.sketch_width > n) {
        throw ParamError("sketch width l = " + std::to_string(p.sketch_width) +
                         " outside [1, n] for n = " + std::to_string(n));
    }
    if (krylov) {
        if (p.power_iterations < 1) {
            throw ParamError("krylov_svd: needs power_iterations >= 1");
        }
        const std::size_t width = (p.power_iterations + 1) * p.sketch_width;
        if (width > a.rows()) {
            throw ParamError("krylov_svd: block width (i+1)*l = " + std::to_string(width) +
                             " exceeds rows = " + std::to_string(a.rows()));
        }
    }
}

/// Small SVD used inside the sketch methods; transposes first when the
/// block is wider than tall so truncated_svd always sees a tall matrix.
SvdResult small_svd(const DenseMatrix& t) {
    if (t.rows() >= t.cols()) {
        return truncated_svd(t);
    }
    SvdResult s = truncated_svd(transpose(t));
    swap_factors(s);
    return s;
}

SvdResult finish_sketch(const DenseMatrix& q, const DenseMatrix& t, SvdMethod method) {
    // T = A^T Q factors as V sigma W^T; U of A is then Q W.
    SvdResult inner = small_svd(t);
    SvdResult out;
    out.u = matmul(q, inner.v);
    out.sigma = std::move(inner.sigma);
    out.v = std::move(inner.u);
    out.rank = inner.rank;
    out.method = method;
    normalize_signs(out);
    return out;
}

} // namespace

SvdResult truncated_svd(const DenseMatrix& a) {
    require_tall(a, "truncated_svd");
    const std::size_t n = a.cols();

    EigResult eig = eig_sym(gram(a));

    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        sigma[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    }
    std::size_t rank = 0;
    while (rank < n && sigma[rank] > kRankDropRatio * sigma[0]) {
        ++rank;
    }
    sigma.resize(rank);

    DenseMatrix v(n, rank);
    for (std::size_t j = 0; j < rank; ++j) {
        const double* src = eig.eigenvectors.col(j);
        double* dst = v.col(j);
        for (std::size_t i = 0; i < n; ++i) {
            dst[i] = src[i];
        }
    }

    DenseMatrix u = matmul(a, v);
    for (std::size_t j = 0; j < rank; ++j) {
        double* uj = u.col(j);
        const double inv = 1.0 / sigma[j];
        for (std::size_t i = 0; i < u.rows(); ++i) {
            uj[i] *= inv;
        }
    }

    SvdResult result{std::move(u), std::move(sigma), std::move(v), rank, SvdMethod::Truncated};
    normalize_signs(result);
    return result;
}

SvdResult randomized_pca(const DenseMatrix& a, const MethodParams& p) {
    require_tall(a, "randomized_pca");
    validate_sketch_params(a, p, /*krylov=*/false);

    DenseMatrix h = matmul(a, gaussian_matrix(a.cols(), p.sketch_width, p.seed));
    for (std::size_t j = 0; j < p.power_iterations; ++j) {
        h = matmul(a, matmul_transposed_left(a, h));
    }
    const DenseMatrix q = qr_thin(h).q;
    return finish_sketch(q, matmul_transposed_left(a, q), SvdMethod::Randomized);
}

SvdResult krylov_svd(const DenseMatrix& a, const MethodParams& p) {
    require_tall(a, "krylov_svd");
    validate_sketch_params(a, p, /*krylov=*/true);

    const std::size_t l = p.sketch_width;
    const std::size_t blocks = p.power_iterations + 1;

    DenseMatrix h(a.rows(), blocks * l);
    DenseMatrix block = matmul(a, gaussian_matrix(a.cols(), l, p.seed));
    for (std::size_t b = 0; b < blocks; ++b) {
        if (b > 0) {
            block = matmul(a, matmul_transposed_left(a, block));
        }
        for (std::size_t j = 0; j < l; ++j) {
            const double* src = block.col(j);
            double* dst = h.col(b * l + j);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                dst[i] = src[i];
            }
        }
    }

    const DenseMatrix q = qr_thin(h).q;
    return finish_sketch(q, matmul_transposed_left(a, q), SvdMethod::Krylov);
}

SvdResult truncate_rank(const SvdResult& s, std::size_t k) {
    if (k < 1 || k > s.rank) {
        throw ParamError("truncate_rank: k = " + std::to_string(k) + " outside [1, rank = " +
                         std::to_string(s.rank) + "]");
    }
    if (k == s.rank) {
        return s;
    }
    SvdResult out;
    out.u = DenseMatrix(s.u.rows(), k);
    out.v = DenseMatrix(s.v.rows(), k);
    out.sigma.assign(s.sigma.begin(), s.sigma.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t j = 0; j < k; ++j) {
        const double* usrc = s.u.col(j);
        double* udst = out.u.col(j);
        for (std::size_t i = 0; i < s.u.rows(); ++i) {
            udst[i] = usrc[i];
        }
        const double* vsrc = s.v.col(j);
        double* vdst = out.v.col(j);
        for (std::size_t i = 0; i < s.v.rows(); ++i) {
            vdst[i] = vsrc[i];
        }
    }
    out.rank = k;
    out.method = s.method;
    return out;
}

SvdResult compute_svd(const DenseMatrix& a, SvdMethod method, const MethodParams& p) {
    switch (method) {
    case SvdMethod::Truncated:
        return truncated_svd(a);
    case SvdMethod::Randomized:
        return randomized_pca(a, p);
    case SvdMethod::Krylov:
        return krylov_svd(a, p);
    }
    throw ParamError("compute_svd: unknown method");
}

SvdResult compute_svd_any(const DenseMatrix& a, SvdMethod method, const MethodParams& p) {
    if (a.rows() >= a.cols()) {
        return compute_svd(a, method, p);
    }
    SvdResult s = compute_svd(transpose(a), method, p);
    std::swap(s.u, s.v);
    return s;
}

} // namespace svdkit

#include "svdkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "svdkit/errors.hpp"

namespace svdkit {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ, a is " + shape_string(a) +
                             ", b is " + shape_string(b));
    }
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t l = b.cols();
    DenseMatrix c(m, l);
    // jki order: for each output column, accumulate scaled columns of a.
    // Per entry this sums over k in ascending order, same as the naive loop.
    for (std::size_t j = 0; j < l; ++j) {
        double* cj = c.col(j);
        const double* bj = b.col(j);
        for (std::size_t k = 0; k < n; ++k) {
            const double bkj = bj[k];
            if (bkj == 0.0) {
                continue;
            }
            const double* ak = a.col(k);
            for (std::size_t i = 0; i < m; ++i) {
                cj[i] += ak[i] * bkj;
            }
        }
    }
    for (double v : c.data()) {
        if (!std::isfinite(v)) {
            throw NumericalError("matmul: non-finite result (overflow)", 0.0);
        }
    }
    return c;
}

DenseMatrix matmul_transposed_left(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("matmul_transposed_left: row counts differ, a is " +
                             shape_string(a) + ", b is " + shape_string(b));
    }
    const std::size_t m = a.rows();
    DenseMatrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const double* bj = b.col(j);
        double* cj = c.col(j);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double* ai = a.col(i);
            double sum = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                sum += ai[k] * bj[k];
            }
            cj[i] = sum;
        }
    }
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const double* aj = a.col(j);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            t(j, i) = aj[i];
        }
    }
    return t;
}

DenseMatrix gram(const DenseMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    DenseMatrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* aj = a.col(j);
        for (std::size_t i = 0; i <= j; ++i) {
            const double* ai = a.col(i);
            double sum = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                sum += ai[k] * aj[k];
            }
            g(i, j) = sum;
            g(j, i) = sum;
        }
    }
    return g;
}

double frobenius_norm_sq(const DenseMatrix& a) {
    double sum = 0.0;
    for (double v : a.data()) {
        sum += v * v;
    }
    return sum;
}

double frobenius_norm(const DenseMatrix& a) {
    return std::sqrt(frobenius_norm_sq(a));
}

QrResult qr_thin(const DenseMatrix& h) {
    const std::size_t m = h.rows();
    const std::size_t p = h.cols();
    if (m < p) {
        throw DimensionError("qr_thin: need rows >= cols, got " + shape_string(h));
    }

    DenseMatrix w = h; // working copy, reduced in place
    const double drop_tol = 1e-12 * frobenius_norm(h);

    // Householder vectors, one per non-deficient column; v[k] spans rows k..m-1.
    std::vector<std::vector<double>> vs(p);
    std::vector<double> betas(p, 0.0);
    std::size_t rank = 0;

    for (std::size_t k = 0; k < p; ++k) {
        double norm_sq = 0.0;
        for (std::size_t i = k; i < m; ++i) {
            norm_sq += w(i, k) * w(i, k);
        }
        const double alpha = std::sqrt(norm_sq);
        if (alpha <= drop_tol) {
            // Residual too small to trust: zero it out and leave R(k,k) = 0.
            for (std::size_t i = k; i < m; ++i) {
                w(i, k) = 0.0;
            }
            continue;
        }
        ++rank;

        std::vector<double> v(m - k);
        for (std::size_t i = k; i < m; ++i) {
            v[i - k] = w(i, k);
        }
        const double sign = v[0] >= 0.0 ? 1.0 : -1.0;
        v[0] += sign * alpha;
        double vtv = 0.0;
        for (double x : v) {
            vtv += x * x;
        }
        const double beta = 2.0 / vtv;
        vs[k] = v;
        betas[k] = beta;

        // Apply the reflector to the remaining columns of w.
        for (std::size_t j = k; j < p; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) {
                dot += v[i - k] * w(i, j);
            }
            const double scale = beta * dot;
            for (std::size_t i = k; i < m; ++i) {
                w(i, j) -= scale * v[i - k];
            }
        }
        // The reflector maps column k onto -sign*alpha*e_k; store it exactly.
        w(k, k) = -sign * alpha;
        for (std::size_t i = k + 1; i < m; ++i) {
            w(i, k) = 0.0;
        }
    }

    // Sign convention: nonnegative diagonal of R.
    std::vector<double> flip(p, 1.0);
    for (std::size_t k = 0; k < p; ++k) {
        if (w(k, k) < 0.0) {
            flip[k] = -1.0;
            for (std::size_t j = k; j < p; ++j) {
                w(k, j) = -w(k, j);
            }
        }
    }

    DenseMatrix r(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            r(i, j) = w(i, j);
        }
    }

    // Thin Q: reflectors applied (in reverse) to the first p identity columns,
    // then the sign flips.
    DenseMatrix q(m, p);
    for (std::size_t j = 0; j < p; ++j) {
        q(j, j) = 1.0;
    }
    for (std::size_t k = p; k-- > 0;) {
        if (betas[k] == 0.0) {
            continue;
        }
        const auto& v = vs[k];
        for (std::size_t j = 0; j < p; ++j) {
            double* qj = q.col(j);
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) {
                dot += v[i - k] * qj[i];
            }
            const double scale = betas[k] * dot;
            for (std::size_t i = k; i < m; ++i) {
                qj[i] -= scale * v[i - k];
            }
        }
    }
    for (std::size_t j = 0; j < p; ++j) {
        if (flip[j] < 0.0) {
            double* qj = q.col(j);
            for (std::size_t i = 0; i < m; ++i) {
                qj[i] = -qj[i];
            }
        }
    }

    return QrResult{std::move(q), std::move(r), rank};
}

namespace {

double off_diagonal_norm(const DenseMatrix& s) {
    const std::size_t n = s.rows();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j + 1; i < n; ++i) {
            sum += s(i, j) * s(i, j);
        }
    }
    return std::sqrt(2.0 * sum);
}

} // namespace

EigResult eig_sym(const DenseMatrix& s) {
    return eig_sym(s, 30);
}

EigResult eig_sym(const DenseMatrix& s, int max_sweeps) {
    const std::size_t n = s.rows();
    if (n != s.cols()) {
        throw DimensionError("eig_sym: matrix not square, got " + shape_string(s));
    }

    double max_abs = 0.0;
    double max_asym = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            max_abs = std::max(max_abs, std::abs(s(i, j)));
            max_asym = std::max(max_asym, std::abs(s(i, j) - s(j, i)));
        }
    }
    if (max_asym > 1e-8 * max_abs) {
        throw ParamError("eig_sym: input asymmetric beyond tolerance, max|s-s^T| = " +
                         std::to_string(max_asym));
    }

    DenseMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            a(i, j) = 0.5 * (s(i, j) + s(j, i));
        }
    }

    const double threshold = 1e-12 * frobenius_norm(a);
    DenseMatrix v = DenseMatrix::identity(n);

    bool converged = off_diagonal_norm(a) <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;

                double* ap = a.col(p);
                double* aq = a.col(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = ap[i];
                    const double aiq = aq[i];
                    ap[i] = c * aip - sn * aiq;
                    aq[i] = sn * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const double apj = a(p, j);
                    const double aqj = a(q, j);
                    a(p, j) = c * apj - sn * aqj;
                    a(q, j) = sn * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                double* vp = v.col(p);
                double* vq = v.col(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vp[i];
                    const double viq = vq[i];
                    vp[i] = c * vip - sn * viq;
                    vq[i] = sn * vip + c * viq;
                }
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged) {
        const double achieved = off_diagonal_norm(a);
        throw NumericalError("eig_sym: no convergence in " + std::to_string(max_sweeps) +
                                 " sweeps, off-diagonal norm " + std::to_string(achieved),
                             achieved);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t lhs, std::size_t rhs) { return a(lhs, lhs) > a(rhs, rhs); });

    EigResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        result.eigenvalues[j] = a(src, src);
        const double* vsrc = v.col(src);
        double* vdst = result.eigenvectors.col(j);
        for (std::size_t i = 0; i < n; ++i) {
            vdst[i] = vsrc[i];
        }
    }
    return result;
}

DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, RngSeed seed) {
    if (rows < 1 || cols < 1) {
        throw ParamError("gaussian_matrix: rows and cols must be >= 1");
    }
    std::mt19937_64 engine(seed.value);
    DenseMatrix g(rows, cols);

    bool has_spare = false;
    double spare = 0.0;
    auto next_normal = [&]() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        // 53-bit uniforms: u1 in (0,1] so log(u1) is finite, u2 in [0,1).
        const double u1 = static_cast<double>((engine() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare = radius * std::sin(angle);
        has_spare = true;
        return radius * std::cos(angle);
    };

    for (std::size_t j = 0; j < cols; ++j) {
        double* gj = g.col(j);
        for (std::size_t i = 0; i < rows; ++i) {
            gj[i] = next_normal();
        }
    }
    return g;
}

} // namespace svdkit

#include "svdkit/dense_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "svdkit/errors.hpp"

namespace svdkit {

namespace {

void check_finite(const std::vector<double>& data) {
    for (double v : data) {
        if (!std::isfinite(v)) {
            throw ParamError("DenseMatrix: non-finite entry (NaN/Inf) rejected");
        }
    }
}

} // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ParamError("DenseMatrix: data length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
    }
    check_finite(data_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw ParamError("DenseMatrix::from_rows: ragged rows");
        }
        std::size_t j = 0;
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw ParamError("DenseMatrix: non-finite entry (NaN/Inf) rejected");
            }
            m(i, j) = v;
            ++j;
        }
        ++i;
    }
    return m;
}

std::string shape_string(const DenseMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

} // namespace svdkit

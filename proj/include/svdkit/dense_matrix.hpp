#ifndef SVDKIT_DENSE_MATRIX_HPP
#define SVDKIT_DENSE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace svdkit {

/// Dense real matrix in column-major storage.
///
/// Values are 64-bit floats. Construction from data validates that every
/// entry is finite; kernels that fill a zero-initialized matrix keep that
/// guarantee themselves. Copying is a deep copy, so values can be shared
/// across threads for reading.
///
/// Factor matrices of rank-deficient decompositions may have zero columns;
/// an empty matrix (0x0) is the default-constructed state.
class DenseMatrix {
public:
    DenseMatrix() = default;

    /// Zero-filled rows x cols matrix.
    DenseMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of column-major data; throws ParamError if the length
    /// is not rows*cols or any entry is NaN/Inf.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static DenseMatrix identity(std::size_t n);

    /// Row-by-row construction, mainly for fixtures:
    /// DenseMatrix::from_rows({{1, 2}, {3, 4}}).
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double operator()(std::size_t i, std::size_t j) const {
        return data_[i + j * rows_];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return data_[i + j * rows_];
    }

    /// Pointer to the start of column j (columns are contiguous).
    double* col(std::size_t j) { return data_.data() + j * rows_; }
    const double* col(std::size_t j) const { return data_.data() + j * rows_; }

    const std::vector<double>& data() const { return data_; }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Human-readable "RxC" shape string for error messages.
std::string shape_string(const DenseMatrix& a);

} // namespace svdkit

#endif

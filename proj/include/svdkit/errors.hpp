#ifndef SVDKIT_ERRORS_HPP
#define SVDKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svdkit {

/// Base class for all svdkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch between operands; the message names both shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its documented domain.
class ParamError : public Error {
public:
    using Error::Error;
};

/// An iterative kernel failed to reach its convergence target.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    /// Residual achieved when the iteration gave up (e.g. off-diagonal norm).
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

/// Malformed input data; carries the byte offset where parsing failed.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

/// Filesystem failure; the message names the path.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace svdkit

#endif

#ifndef SVDKIT_IDX_IO_HPP
#define SVDKIT_IDX_IO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "svdkit/dense_matrix.hpp"

namespace svdkit {

/// A decoded IDX unsigned-byte image container (the MNIST layout).
struct IdxImageSet {
    std::size_t count = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::uint8_t> pixels; ///< count*height*width bytes, row-major per image
};

/// Parses the rank-3 unsigned-byte IDX format: big-endian magic 0x00000803,
/// three big-endian 32-bit dims, then raw bytes. Rejects wrong magic,
/// zero dims, dim products that overflow, and any size mismatch, with the
/// byte offset in the error.
IdxImageSet parse_idx_images(std::span<const std::uint8_t> bytes);

IdxImageSet load_idx_file(const std::string& path);

/// count x (height*width) matrix; row i is image i flattened row-major and
/// scaled to [0, 1] by /255. Rows are examples.
DenseMatrix images_to_matrix(const IdxImageSet& set);

/// One image as a height x width matrix in [0, 1], ready for write_pgm.
DenseMatrix image_as_matrix(const IdxImageSet& set, std::size_t index);

} // namespace svdkit

#endif

#include "svdkit/idx_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

#include "svdkit/errors.hpp"

namespace svdkit {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803; // unsigned byte, rank 3

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t offset) {
    return (static_cast<std::uint32_t>(bytes[offset]) << 24) |
           (static_cast<std::uint32_t>(bytes[offset + 1]) << 16) |
           (static_cast<std::uint32_t>(bytes[offset + 2]) << 8) |
           static_cast<std::uint32_t>(bytes[offset + 3]);
}

} // namespace

IdxImageSet parse_idx_images(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 16) {
        throw FormatError("idx: truncated header, got " + std::to_string(bytes.size()) +
                              " bytes, need 16 (offset " + std::to_string(bytes.size()) + ")",
                          bytes.size());
    }
    const std::uint32_t magic = read_be32(bytes, 0);
    if (magic != kImageMagic) {
        throw FormatError("idx: wrong magic at offset 0, expected 0x00000803", 0);
    }
    const std::uint64_t count = read_be32(bytes, 4);
    const std::uint64_t height = read_be32(bytes, 8);
    const std::uint64_t width = read_be32(bytes, 12);
    if (count == 0 || height == 0 || width == 0) {
        throw FormatError("idx: zero dimension in header (offsets 4-15)", 4);
    }

    if (height > std::numeric_limits<std::uint64_t>::max() / width ||
        count > std::numeric_limits<std::uint64_t>::max() / (height * width)) {
        throw FormatError("idx: dimension product overflows (offsets 4-15)", 4);
    }
    const std::uint64_t payload = count * height * width;
    if (payload > std::numeric_limits<std::size_t>::max() - 16) {
        throw FormatError("idx: dimension product overflows (offsets 4-15)", 4);
    }
    const std::size_t expected = 16 + static_cast<std::size_t>(payload);
    if (bytes.size() < expected) {
        throw FormatError("idx: truncated payload, expected " + std::to_string(expected) +
                              " bytes, got " + std::to_string(bytes.size()) + " (offset " +
                              std::to_string(bytes.size()) + ")",
                          bytes.size());
    }
    if (bytes.size() > expected) {
        throw FormatError("idx: trailing bytes after payload (offset " +
                              std::to_string(expected) + ")",
                          expected);
    }

    IdxImageSet set;
    set.count = static_cast<std::size_t>(count);
    set.height = static_cast<std::size_t>(height);
    set.width = static_cast<std::size_t>(width);
    set.pixels.assign(bytes.begin() + 16, bytes.end());
    return set;
}

IdxImageSet load_idx_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return parse_idx_images(bytes);
}

DenseMatrix images_to_matrix(const IdxImageSet& set) {
    const std::size_t pixels_per_image = set.height * set.width;
    DenseMatrix a(set.count, pixels_per_image);
    for (std::size_t i = 0; i < set.count; ++i) {
        const std::uint8_t* image = set.pixels.data() + i * pixels_per_image;
        for (std::size_t p = 0; p < pixels_per_image; ++p) {
            a(i, p) = static_cast<double>(image[p]) / 255.0;
        }
    }
    return a;
}

DenseMatrix image_as_matrix(const IdxImageSet& set, std::size_t index) {
    if (index >= set.count) {
        throw ParamError("image index " + std::to_string(index) + " out of range, have " +
                         std::to_string(set.count) + " images");
    }
    DenseMatrix img(set.height, set.width);
    const std::uint8_t* image = set.pixels.data() + index * set.height * set.width;
    for (std::size_t r = 0; r < set.height; ++r) {
        for (std::size_t c = 0; c < set.width; ++c) {
            img(r, c) = static_cast<double>(image[r * set.width + c]) / 255.0;
        }
    }
    return img;
}

} // namespace svdkit

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "graybin/image.hpp"

namespace graybin {

enum class PgmFlavor { kPlain /* P2 */, kRaw /* P5 */ };

// Parses a P2 or P5 graymap with maxval 255. Header comments are skipped.
//
// Throws FormatError for a bad magic or header, UnsupportedDepthError when
// maxval != 255, TruncationError when fewer samples than width * height are
// present, RangeError for a P2 sample above maxval. Extra payload after the
// last sample is a FormatError.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);
GrayImage read_pgm(std::string_view text);

// Header is "P5\n<w> <h>\n255\n" (or P2). P2 writes one image row per line.
std::string write_pgm(const GrayImage& image, PgmFlavor flavor);
std::string write_pgm(const BinaryImage& image, PgmFlavor flavor);

// File helpers. I/O failures throw std::filesystem::filesystem_error.
GrayImage load_pgm(const std::filesystem::path& path);

}  // namespace graybin

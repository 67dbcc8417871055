#include "graybin/image.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "graybin/errors.hpp"

namespace graybin {
namespace {

void check_shape(std::size_t width, std::size_t height, std::size_t count) {
  if (width == 0 || height == 0) {
    throw ArgumentError("image dimensions must be positive, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
  if (count / width != height || count % width != 0) {
    throw ArgumentError("pixel count " + std::to_string(count) +
                        " does not match " + std::to_string(width) + "x" +
                        std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_shape(width_, height_, pixels_.size());
}

BinaryImage::BinaryImage(std::size_t width, std::size_t height,
                         std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_shape(width_, height_, pixels_.size());
  const bool two_level = std::all_of(
      pixels_.begin(), pixels_.end(),
      [](std::uint8_t v) { return v == kBackground || v == kForeground; });
  if (!two_level) {
    throw ArgumentError("binary image pixels must be 0 or 255");
  }
}

GrayImage BinaryImage::as_gray() const {
  return GrayImage(width_, height_, pixels_);
}

}  // namespace graybin

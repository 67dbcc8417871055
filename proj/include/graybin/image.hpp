#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graybin {

/// 8-bit grayscale image, row-major. Always at least 1x1.
class GrayImage {
 public:
  /// Throws ArgumentError if a dimension is zero or the pixel count does not
  /// match width * height.
  GrayImage(std::size_t width, std::size_t height,
            std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::uint8_t at(std::size_t x, std::size_t y) const {
    return pixels_[y * width_ + x];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Two-level image holding only 0 (background) and 255 (foreground).
class BinaryImage {
 public:
  static constexpr std::uint8_t kBackground = 0;
  static constexpr std::uint8_t kForeground = 255;

  /// Throws ArgumentError on bad dimensions or any value other than 0/255.
  BinaryImage(std::size_t width, std::size_t height,
              std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  /// Reinterprets the binary image as a grayscale one (values unchanged).
  GrayImage as_gray() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace graybin

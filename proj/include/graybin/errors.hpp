#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graybin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PGM input: bad magic, bad header tokens, trailing data.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// maxval other than 255.
class UnsupportedDepthError : public FormatError {
 public:
  explicit UnsupportedDepthError(long maxval)
      : FormatError("unsupported maxval " + std::to_string(maxval) +
                    " (only 255 is supported)"),
        maxval_(maxval) {}

  long maxval() const noexcept { return maxval_; }

 private:
  long maxval_;
};

/// Pixel payload shorter than the header declares.
class TruncationError : public FormatError {
 public:
  TruncationError(std::size_t expected, std::size_t found)
      : FormatError("truncated pixel data: expected " +
                    std::to_string(expected) + " samples, found " +
                    std::to_string(found)),
        expected_(expected),
        found_(found) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t expected_;
  std::size_t found_;
};

/// A P2 sample greater than maxval.
class RangeError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Caller passed an argument outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operation needs at least one pixel.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace graybin

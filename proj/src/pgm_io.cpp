#include "graybin/pgm_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <system_error>
#include <vector>

#include "graybin/errors.hpp"

namespace graybin {
namespace {

constexpr long kMaxval = 255;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool done() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

  // Whitespace and '#' comments, as allowed between header fields.
  void skip_header_filler() {
    while (!done()) {
      if (is_space(peek())) {
        advance();
      } else if (peek() == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') advance();
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (!done() && is_space(peek())) advance();
  }

  // Reads a run of non-space bytes.
  std::string_view token() {
    const std::size_t start = pos_;
    while (!done() && !is_space(peek())) advance();
    return {reinterpret_cast<const char*>(bytes_.data()) + start,
            pos_ - start};
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::optional<unsigned long long> parse_decimal(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  for (char c : tok) {
    if (!is_digit(static_cast<std::uint8_t>(c))) return std::nullopt;
  }
  unsigned long long value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) return std::nullopt;
  return value;
}

unsigned long long header_field(Cursor& in, const char* name) {
  in.skip_header_filler();
  if (in.done()) {
    throw FormatError(std::string("missing ") + name + " in PGM header");
  }
  const std::string_view tok = in.token();
  auto value = parse_decimal(tok);
  if (!value) {
    throw FormatError(std::string("invalid ") + name + " '" +
                      std::string(tok) + "' in PGM header");
  }
  return *value;
}

std::size_t pixel_count(unsigned long long width, unsigned long long height) {
  if (width == 0 || height == 0) {
    throw FormatError("PGM dimensions must be positive, got " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  constexpr auto kLimit = std::numeric_limits<std::uint32_t>::max();
  if (width > kLimit || height > kLimit || width * height > kLimit) {
    throw FormatError("PGM dimensions " + std::to_string(width) + "x" +
                      std::to_string(height) + " are too large");
  }
  return static_cast<std::size_t>(width * height);
}

std::vector<std::uint8_t> read_plain_samples(Cursor& in, std::size_t expected) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(std::min(expected, in.remaining()));
  for (;;) {
    in.skip_space();
    if (in.done()) break;
    const std::string_view tok = in.token();
    auto value = parse_decimal(tok);
    if (!value) {
      throw FormatError("invalid P2 sample '" + std::string(tok) + "'");
    }
    if (*value > static_cast<unsigned long long>(kMaxval)) {
      throw RangeError("P2 sample " + std::string(tok) + " exceeds maxval " +
                       std::to_string(kMaxval));
    }
    if (pixels.size() == expected) {
      throw FormatError("P2 payload has more than the declared " +
                        std::to_string(expected) + " samples");
    }
    pixels.push_back(static_cast<std::uint8_t>(*value));
  }
  if (pixels.size() < expected) {
    throw TruncationError(expected, pixels.size());
  }
  return pixels;
}

std::vector<std::uint8_t> read_raw_samples(Cursor& in, std::size_t expected) {
  // Exactly one whitespace byte separates maxval from the raster.
  if (in.done() || !is_space(in.peek())) {
    throw TruncationError(expected, 0);
  }
  in.advance();
  const auto rest = in.rest();
  if (rest.size() < expected) {
    throw TruncationError(expected, rest.size());
  }
  if (rest.size() > expected) {
    throw FormatError("P5 payload has " + std::to_string(rest.size()) +
                      " bytes, header declares " + std::to_string(expected));
  }
  return {rest.begin(), rest.end()};
}

template <typename Image>
std::string write_any(const Image& image, PgmFlavor flavor) {
  const bool plain = flavor == PgmFlavor::kPlain;
  std::string out = plain ? "P2\n" : "P5\n";
  out += std::to_string(image.width());
  out += ' ';
  out += std::to_string(image.height());
  out += "\n255\n";

  const auto pixels = image.pixels();
  if (!plain) {
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    return out;
  }
  out.reserve(out.size() + pixels.size() * 4);
  char buf[4];
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      if (x != 0) out += ' ';
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf,
                                     pixels[y * image.width() + x]);
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  Cursor in(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw FormatError("not a PGM file: bad magic number");
  }
  const std::uint8_t kind = bytes[1];
  if (kind == '3' || kind == '6') {
    throw FormatError("color (PPM) images are not supported");
  }
  if (kind != '2' && kind != '5') {
    throw FormatError("not a PGM file: bad magic number");
  }
  in.advance(2);
  if (!in.done() && !is_space(in.peek()) && in.peek() != '#') {
    throw FormatError("not a PGM file: bad magic number");
  }

  const auto width = header_field(in, "width");
  const auto height = header_field(in, "height");
  const auto maxval = header_field(in, "maxval");
  if (maxval != static_cast<unsigned long long>(kMaxval)) {
    throw UnsupportedDepthError(
        static_cast<long>(std::min<unsigned long long>(
            maxval, std::numeric_limits<long>::max())));
  }
  const std::size_t expected = pixel_count(width, height);

  auto pixels = kind == '2' ? read_plain_samples(in, expected)
                            : read_raw_samples(in, expected);
  return GrayImage(static_cast<std::size_t>(width),
                   static_cast<std::size_t>(height), std::move(pixels));
}

GrayImage read_pgm(std::string_view text) {
  return read_pgm(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string write_pgm(const GrayImage& image, PgmFlavor flavor) {
  return write_any(image, flavor);
}

std::string write_pgm(const BinaryImage& image, PgmFlavor flavor) {
  return write_any(image, flavor);
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw std::filesystem::filesystem_error(
        "cannot read input", path,
        std::make_error_code(std::errc::is_a_directory));
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::filesystem::filesystem_error(
        "cannot open input", path,
        std::make_error_code(std::errc::no_such_file_or_directory));
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                  std::istreambuf_iterator<char>());
  if (file.bad()) {
    throw std::filesystem::filesystem_error(
        "cannot read input", path, std::make_error_code(std::errc::io_error));
  }
  return read_pgm(bytes);
}

}  // namespace graybin

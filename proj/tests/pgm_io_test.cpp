#include "graybin/pgm_io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "graybin/errors.hpp"
#include "test_support.hpp"

namespace graybin {
namespace {

using testing::row_image;

std::string raw(std::string header, std::initializer_list<std::uint8_t> px) {
  for (auto p : px) header.push_back(static_cast<char>(p));
  return header;
}

TEST(ReadPgm, PlainMinimal) {
  const GrayImage img = read_pgm(std::string_view("P2\n2 1\n255\n0 255\n"));
  EXPECT_EQ(img.width(), 2u);
  EXPECT_EQ(img.height(), 1u);
  EXPECT_EQ(img, row_image({0, 255}));
}

TEST(ReadPgm, RawSingleByte) {
  const GrayImage img = read_pgm(raw("P5\n1 1\n255\n", {0x5D}));
  EXPECT_EQ(img, GrayImage(1, 1, {93}));
}

TEST(ReadPgm, TruncatedPlainReportsCounts) {
  try {
    read_pgm(std::string_view("P2\n2 2\n255\n0 0 0\n"));
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.expected(), 4u);
    EXPECT_EQ(e.found(), 3u);
  }
}

TEST(ReadPgm, TruncatedRaw) {
  try {
    read_pgm(raw("P5\n2 2\n255\n", {1, 2, 3}));
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.expected(), 4u);
    EXPECT_EQ(e.found(), 3u);
  }
  EXPECT_THROW(read_pgm(std::string_view("P5\n2 2\n255")), TruncationError);
}

TEST(ReadPgm, HeaderCommentsAreSkipped) {
  const GrayImage img = read_pgm(std::string_view(
      "P2\n# made by hand\n3 # width\n1\n# depth next\n255\n7 8 9\n"));
  EXPECT_EQ(img, row_image({7, 8, 9}));

  const GrayImage raw_img =
      read_pgm(raw("P5 #c\n2 1 255\n", {10, 200}));
  EXPECT_EQ(raw_img, row_image({10, 200}));
}

TEST(ReadPgm, PlainToleratesFreeformWhitespace) {
  const GrayImage img =
      read_pgm(std::string_view("P2 2 2 255 1\t2\r\n3\n\n  4   "));
  EXPECT_EQ(img, GrayImage(2, 2, {1, 2, 3, 4}));
}

TEST(ReadPgm, RejectsBadMagic) {
  EXPECT_THROW(read_pgm(std::string_view("")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P1\n1 1\n1\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P7\n1 1\n255\n0")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("Q2\n1 1\n255\n0")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P25\n1 1\n255\n0")), FormatError);
}

TEST(ReadPgm, RejectsColor) {
  EXPECT_THROW(read_pgm(std::string_view("P3\n1 1\n255\n0 0 0\n")),
               FormatError);
  EXPECT_THROW(read_pgm(raw("P6\n1 1\n255\n", {0, 0, 0})), FormatError);
}

TEST(ReadPgm, RejectsOtherMaxval) {
  try {
    read_pgm(std::string_view("P2\n1 1\n65535\n0\n"));
    FAIL() << "expected UnsupportedDepthError";
  } catch (const UnsupportedDepthError& e) {
    EXPECT_EQ(e.maxval(), 65535);
  }
  EXPECT_THROW(read_pgm(std::string_view("P2\n1 1\n15\n0\n")),
               UnsupportedDepthError);
  EXPECT_THROW(read_pgm(raw("P5\n1 1\n0\n", {0})), UnsupportedDepthError);
}

TEST(ReadPgm, RejectsOverRangeSample) {
  EXPECT_THROW(read_pgm(std::string_view("P2\n2 1\n255\n0 256\n")),
               RangeError);
  EXPECT_THROW(read_pgm(std::string_view("P2\n1 1\n255\n99999999999999999\n")),
               FormatError);
}

TEST(ReadPgm, RejectsBadHeaderFields) {
  EXPECT_THROW(read_pgm(std::string_view("P2\n0 1\n255\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P2\n1 0\n255\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P2\n-1 1\n255\n0\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P2\nx 1\n255\n0\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P2\n1 1\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P2\n99999999 99999999\n255\n0\n")),
               FormatError);
}

TEST(ReadPgm, RejectsBadSampleTokens) {
  EXPECT_THROW(read_pgm(std::string_view("P2\n2 1\n255\n1 x\n")), FormatError);
  EXPECT_THROW(read_pgm(std::string_view("P2\n2 1\n255\n1 -2\n")),
               FormatError);
}

TEST(ReadPgm, RejectsExcessPayload) {
  EXPECT_THROW(read_pgm(std::string_view("P2\n1 1\n255\n1 2\n")), FormatError);
  EXPECT_THROW(read_pgm(raw("P5\n1 1\n255\n", {1, 2})), FormatError);
}

TEST(WritePgm, RawHeaderIsExact) {
  const std::string bytes = write_pgm(GrayImage(1, 1, {0}), PgmFlavor::kRaw);
  EXPECT_EQ(bytes, std::string("P5\n1 1\n255\n") + '\0');
}

TEST(WritePgm, PlainTranscription) {
  EXPECT_EQ(write_pgm(row_image({93, 140}), PgmFlavor::kPlain),
            "P2\n2 1\n255\n93 140\n");
}

TEST(WritePgm, PlainWritesOneRowPerLine) {
  EXPECT_EQ(write_pgm(GrayImage(2, 3, {1, 2, 3, 4, 5, 6}), PgmFlavor::kPlain),
            "P2\n2 3\n255\n1 2\n3 4\n5 6\n");
}

TEST(WritePgm, BinaryImage) {
  const BinaryImage bin(2, 1, {0, 255});
  EXPECT_EQ(write_pgm(bin, PgmFlavor::kPlain), "P2\n2 1\n255\n0 255\n");
}

// Round trip and flavor equivalence over random images.
TEST(PgmProperty, RoundTripBothFlavors) {
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 100; ++i) {
    const GrayImage img =
        testing::random_image(rng, 24, testing::Distribution::kUniform);
    const GrayImage plain = read_pgm(write_pgm(img, PgmFlavor::kPlain));
    const GrayImage rawi = read_pgm(write_pgm(img, PgmFlavor::kRaw));
    ASSERT_EQ(plain, img);
    ASSERT_EQ(rawi, img);
    ASSERT_EQ(plain, rawi);
  }
}

TEST(PgmProperty, DroppingPayloadBytesIsAlwaysRejected) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const GrayImage img =
        testing::random_image(rng, 8, testing::Distribution::kUniform);
    const std::string bytes = write_pgm(img, PgmFlavor::kRaw);
    const std::size_t header = bytes.size() - img.size();
    std::uniform_int_distribution<std::size_t> cut(header, bytes.size() - 1);
    EXPECT_THROW(read_pgm(std::string_view(bytes).substr(0, cut(rng))),
                 TruncationError);
  }
}

}  // namespace
}  // namespace graybin

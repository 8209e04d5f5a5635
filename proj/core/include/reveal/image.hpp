#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reveal/errors.hpp"

namespace reveal {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// Plain RGB8 raster. Row-major, 3 bytes per pixel, no padding.
class RasterImage {
 public:
  RasterImage(int width, int height, Rgb fill = {});

  int width() const { return width_; }
  int height() const { return height_; }

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);

  const std::vector<std::uint8_t>& bytes() const { return data_; }
  std::vector<std::uint8_t>& bytes() { return data_; }

  bool operator==(const RasterImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

/// Decodes PNG or JPEG bytes (sniffed by magic) to RGB. Alpha, when
/// present, is composited over black.
RasterImage decode_image(const std::vector<std::uint8_t>& bytes);

/// Lossless PNG encode with fixed settings; byte-for-byte deterministic
/// for a given pixel buffer.
std::vector<std::uint8_t> encode_png(const RasterImage& image);

RasterImage load_image(const std::string& path);
void save_png(const RasterImage& image, const std::string& path);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes);

}  // namespace reveal

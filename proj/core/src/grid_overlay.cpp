#include "reveal/grid_overlay.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

namespace reveal {

namespace {

// 5x7 bitmaps for digits 1-9, one byte per row, low 5 bits used.
constexpr std::array<std::array<std::uint8_t, 7>, 9> kDigitFont = {{
    {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E},  // 1
    {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F},  // 2
    {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E},  // 3
    {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02},  // 4
    {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E},  // 5
    {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E},  // 6
    {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08},  // 7
    {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E},  // 8
    {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C},  // 9
}};

constexpr int kGlyphW = 5;
constexpr int kGlyphH = 7;

void fill_rect(RasterImage& img, int x, int y, int w, int h, Rgb color) {
  const int x0 = std::max(0, x);
  const int y0 = std::max(0, y);
  const int x1 = std::min(img.width(), x + w);
  const int y1 = std::min(img.height(), y + h);
  for (int yy = y0; yy < y1; ++yy) {
    for (int xx = x0; xx < x1; ++xx) {
      img.set(xx, yy, color);
    }
  }
}

void draw_digit(RasterImage& img, int digit, int x, int y, int scale,
                Rgb color) {
  const auto& glyph = kDigitFont[digit - 1];
  for (int gy = 0; gy < kGlyphH; ++gy) {
    for (int gx = 0; gx < kGlyphW; ++gx) {
      if (glyph[gy] & (1u << (kGlyphW - 1 - gx))) {
        fill_rect(img, x + gx * scale, y + gy * scale, scale, scale, color);
      }
    }
  }
}

}  // namespace

CellRect cell_bounds(int cell_index, int width, int height) {
  if (cell_index < 1 || cell_index > 9) {
    throw Error("cell index out of range [1,9]: " + std::to_string(cell_index));
  }
  if (width < 3 || height < 3) {
    throw Error("image must be at least 3x3 for a 3x3 grid, got " +
                std::to_string(width) + "x" + std::to_string(height));
  }
  const int row = (cell_index - 1) / 3;
  const int col = (cell_index - 1) % 3;
  const auto edge = [](int k, int extent) {
    return static_cast<int>(static_cast<std::int64_t>(k) * extent / 3);
  };
  const int x0 = edge(col, width);
  const int x1 = edge(col + 1, width);
  const int y0 = edge(row, height);
  const int y1 = edge(row + 1, height);
  return {x0, y0, x1 - x0, y1 - y0};
}

RasterImage overlay_grid(const RasterImage& image, const OverlayStyle& style) {
  const int w = image.width();
  const int h = image.height();
  if (w < 3 || h < 3) {
    throw Error("image must be at least 3x3 for a 3x3 grid, got " +
                std::to_string(w) + "x" + std::to_string(h));
  }
  if (style.line_thickness < 1) {
    throw Error("line thickness must be >= 1");
  }
  if (style.label_height_fraction <= 0.0 ||
      style.label_height_fraction >= 1.0 / 3.0) {
    throw Error("label height fraction must be in (0, 1/3)");
  }

  const int min_cell_h = cell_bounds(1, w, h).h;  // top row cells are smallest
  const int scale = std::max(
      1, static_cast<int>(style.label_height_fraction * min_cell_h) / kGlyphH);
  const int pad = scale;
  const int box_w = kGlyphW * scale + 2 * pad;
  const int box_h = kGlyphH * scale + 2 * pad;
  const int min_cell = std::min(min_cell_h, cell_bounds(1, w, h).w);
  if (box_h >= min_cell || box_w >= min_cell) {
    const int needed = 3 * (std::max(box_w, box_h) + 1 + style.line_thickness);
    throw Error("image too small for grid labels; need at least " +
                std::to_string(needed) + "x" + std::to_string(needed));
  }

  RasterImage out = image;
  const int t = style.line_thickness;

  // Border plus interior boundary lines, centered on the boundary.
  fill_rect(out, 0, 0, w, t, style.line_color);
  fill_rect(out, 0, h - t, w, t, style.line_color);
  fill_rect(out, 0, 0, t, h, style.line_color);
  fill_rect(out, w - t, 0, t, h, style.line_color);
  for (int k = 1; k < 3; ++k) {
    const int bx = static_cast<int>(static_cast<std::int64_t>(k) * w / 3);
    const int by = static_cast<int>(static_cast<std::int64_t>(k) * h / 3);
    fill_rect(out, bx - t / 2, 0, t, h, style.line_color);
    fill_rect(out, 0, by - t / 2, w, t, style.line_color);
  }

  for (int cell = 1; cell <= 9; ++cell) {
    const CellRect rect = cell_bounds(cell, w, h);
    const int lx = rect.x + t;
    const int ly = rect.y + t;
    fill_rect(out, lx, ly, box_w, box_h, style.label_background);
    draw_digit(out, cell, lx + pad, ly + pad, scale, style.label_color);
  }
  return out;
}

}  // namespace reveal

#pragma once

#include "reveal/image.hpp"

namespace reveal {

struct CellRect {
  int x = 0, y = 0, w = 0, h = 0;
  bool operator==(const CellRect&) const = default;
};

struct OverlayStyle {
  Rgb line_color = {255, 0, 0};
  int line_thickness = 3;
  Rgb label_color = {255, 255, 255};
  Rgb label_background = {0, 0, 0};
  double label_height_fraction = 0.12;  // of cell height, in (0, 1/3)
};

/// Rectangle of cell `cell_index` (1..9, row-major from top-left) under the
/// floor-boundary split: column edges at floor(k*width/3), row edges at
/// floor(k*height/3). The nine rectangles tile the image exactly.
CellRect cell_bounds(int cell_index, int width, int height);

/// Draws the 3x3 grid and the 1-9 cell labels over a copy of the input.
/// Deterministic byte-for-byte given (image, style); digits come from an
/// embedded bitmap font, no system font involved. Never resizes.
RasterImage overlay_grid(const RasterImage& image, const OverlayStyle& style);

}  // namespace reveal

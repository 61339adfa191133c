#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dfrac/demand.hpp"
#include "dfrac/dynamics.hpp"

namespace dfrac {

// Complex-plane window plus pixel resolution. Pixel (x, y) samples the
// point re_min + (x+1/2)*dre, im_max - (y+1/2)*dim (pixel centers, y down
// in image space, up in the plane).
struct Viewport {
  double re_min = -2.0, re_max = 1.0;
  double im_min = -1.5, im_max = 1.5;
  int width = 512, height = 512;

  void validate() const;
  double dre() const { return (re_max - re_min) / width; }
  double dim() const { return (im_max - im_min) / height; }
  Complex pixel_center(int x, int y) const {
    return {re_min + (x + 0.5) * dre(), im_max - (y + 0.5) * dim()};
  }
};

enum class RenderMode { mandelbrot, julia };

struct EscapePixel {
  bool escaped = false;
  int iterations = 0;
  double smooth = 0.0; // smooth_iteration value for escaped pixels, else 0
};

// Per-pixel paint layered on top of the escape data by the figure
// compositors (demand markers, montage separators).
enum class OverlayPaint : std::uint8_t { none = 0, marker = 1, separator = 2 };

struct EscapeRaster {
  Viewport viewport;
  IterationConfig cfg;
  RenderMode mode = RenderMode::mandelbrot;
  Complex julia_c{0.0, 0.0};
  std::vector<EscapePixel> pixels;              // row-major, top row first
  std::vector<OverlayPaint> overlay;            // empty when no overlay
  int skipped_points = 0;

  const EscapePixel& at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * viewport.width + x];
  }
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// Deterministic pixel coloring. Default: black interior, grayscale
// floor(255*t/max_iter) for escaped pixels. Smooth hue palette is opt-in.
struct ColorMap {
  Rgb interior{0, 0, 0};
  bool smooth_hue = false;

  Rgb color(const EscapePixel& px, int max_iter) const;
};

// Renders the window tile by tile. Output is byte-identical for any
// tile_size >= 1 and any worker count (workers = 0 means hardware
// concurrency); tiles write to disjoint regions of the shared buffer.
EscapeRaster render_raster(RenderMode mode, Complex julia_c,
                           const Viewport& viewport, const IterationConfig& cfg,
                           int tile_size, int workers = 1);

// Binary PPM (P6), `P6\n<w> <h>\n255\n` then RGB rows top-first. Returns
// bytes written. Overlay paint wins over escape colors: markers red,
// separators white.
std::size_t write_ppm(const EscapeRaster& raster, const ColorMap& cmap,
                      std::ostream& sink);

// Mandelbrot raster with each demand point drawn as a 5x5 cross in marker
// paint. Points outside the window are counted in skipped_points.
EscapeRaster render_demand_overlay(const std::vector<DemandPoint>& points,
                                   const Viewport& viewport,
                                   const IterationConfig& cfg,
                                   int tile_size = 64, int workers = 1);

// Julia panels for the requested hours, 4 columns wide, row-major in hour
// order, 2-pixel white separators. Throws validation_error when a
// requested hour has no point.
EscapeRaster render_daily_montage(const std::vector<DemandPoint>& points,
                                  const Viewport& per_panel,
                                  const IterationConfig& cfg,
                                  const std::vector<int>& hours,
                                  int tile_size = 64, int workers = 1);

// Standalone SVG line chart (800x480) of the P, Q, S curves over the day.
// Deterministic bytes for identical input; needs at least 2 records.
std::size_t plot_demand_curves(const std::vector<DemandRecord>& records,
                               std::ostream& sink);

}  // namespace dfrac

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dfrac/raster.hpp"

namespace dfrac {

struct BinaryGrid {
  int width = 0, height = 0;
  std::vector<std::uint8_t> cells; // row-major, 0/1

  bool at(int x, int y) const {
    return cells[static_cast<std::size_t>(y) * width + x] != 0;
  }
  std::size_t count() const;
};

// Quantitative fractal descriptors of one hour's Julia set.
struct FoldMetrics {
  int hour = 0;
  double boundary_pixel_fraction = 0.0;
  double box_dimension = 0.0;
  double box_dimension_stderr = 0.0;
  double m_distance_estimate = 0.0;
};

struct BoxCountFit {
  double dimension = 0.0;
  double stderr_ = 0.0;
};

// Marks bounded pixels with at least one escaped 4-neighbor; border pixels
// use only in-grid neighbors. Julia rasters only.
BinaryGrid boundary_mask(const EscapeRaster& raster);

// Least-squares slope of log N(s) vs log(1/s), N(s) = number of s x s
// boxes containing a marked cell. Needs a nonempty mask and >= 4 strictly
// increasing scales, each dividing both grid dimensions.
BoxCountFit box_counting_dimension(const BinaryGrid& mask,
                                   std::span<const int> scales);

// Distance from c to the M boundary by radial probing: the smallest radius
// (multiples of step) at which some angular sample has an escaping critical
// orbit. For exterior c this is step (the first shell already escapes).
double distance_to_m_boundary(Complex c, const IterationConfig& cfg,
                              double step = 1e-3, int angles = 360,
                              double r_max = 0.5);

// Per-hour Julia metrics on a [-1.6,1.6]^2 window at resolution^2 pixels:
// boundary fraction, box dimension over scales {2,4,8,16,32}, and distance
// of c to the M boundary. Ordered by hour.
std::vector<FoldMetrics> fold_report(const std::vector<DemandPoint>& points,
                                     const IterationConfig& cfg,
                                     int resolution, int workers = 1);

// CSV `hour,boundary_fraction,box_dim,box_dim_stderr,m_distance`, 6
// significant digits.
void write_fold_csv(const std::vector<FoldMetrics>& report, std::ostream& out);

}  // namespace dfrac

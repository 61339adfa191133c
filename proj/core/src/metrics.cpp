#include "dfrac/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace dfrac {

std::size_t BinaryGrid::count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](auto c) { return c != 0; }));
}

BinaryGrid boundary_mask(const EscapeRaster& raster) {
  if (raster.mode != RenderMode::julia)
    throw validation_error("boundary_mask: defined for Julia rasters only");
  const int w = raster.viewport.width, h = raster.viewport.height;
  BinaryGrid mask{w, h, std::vector<std::uint8_t>(raster.pixels.size(), 0)};
  auto escaped = [&](int x, int y) { return raster.at(x, y).escaped; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (escaped(x, y)) continue;
      const bool edge = (x > 0 && escaped(x - 1, y)) ||
                        (x + 1 < w && escaped(x + 1, y)) ||
                        (y > 0 && escaped(x, y - 1)) ||
                        (y + 1 < h && escaped(x, y + 1));
      if (edge) mask.cells[static_cast<std::size_t>(y) * w + x] = 1;
    }
  return mask;
}

BoxCountFit box_counting_dimension(const BinaryGrid& mask,
                                   std::span<const int> scales) {
  if (mask.count() == 0)
    throw validation_error("box_counting_dimension: empty mask");
  if (scales.size() < 4)
    throw validation_error("box_counting_dimension: need >= 4 scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const int s = scales[i];
    if (s < 1 || mask.width % s != 0 || mask.height % s != 0)
      throw validation_error("box_counting_dimension: scale " +
                             std::to_string(s) + " does not divide the grid");
    if (i > 0 && scales[i] <= scales[i - 1])
      throw validation_error("box_counting_dimension: scales must increase");
  }

  std::vector<double> xs, ys;
  xs.reserve(scales.size());
  ys.reserve(scales.size());
  for (int s : scales) {
    long boxes = 0;
    for (int by = 0; by < mask.height; by += s)
      for (int bx = 0; bx < mask.width; bx += s) {
        bool occupied = false;
        for (int y = by; y < by + s && !occupied; ++y)
          for (int x = bx; x < bx + s; ++x)
            if (mask.at(x, y)) {
              occupied = true;
              break;
            }
        if (occupied) ++boxes;
      }
    xs.push_back(std::log(1.0 / s));
    ys.push_back(std::log(static_cast<double>(boxes)));
  }

  // OLS slope with standard error.
  const std::size_t n = xs.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (slope * xs[i] + intercept);
    ss_res += r * r;
  }
  const double se = std::sqrt(ss_res / (n - 2) / sxx);
  return {slope, se};
}

double distance_to_m_boundary(Complex c, const IterationConfig& cfg,
                              double step, int angles, double r_max) {
  if (!(step > 0.0) || angles < 1 || !(r_max > 0.0))
    throw validation_error("distance_to_m_boundary: bad probe parameters");
  const bool inside = mandelbrot_member(c, cfg);
  for (double r = step; r <= r_max; r += step) {
    for (int k = 0; k < angles; ++k) {
      const double th = 2.0 * std::numbers::pi * k / angles;
      const Complex p = c + r * Complex{std::cos(th), std::sin(th)};
      if (mandelbrot_member(p, cfg) != inside) return r;
    }
  }
  return r_max;
}

std::vector<FoldMetrics> fold_report(const std::vector<DemandPoint>& points,
                                     const IterationConfig& cfg,
                                     int resolution, int workers) {
  if (points.empty()) throw validation_error("fold_report: no demand points");
  static constexpr std::array<int, 5> kScales = {2, 4, 8, 16, 32};

  std::vector<DemandPoint> ordered = points;
  std::sort(ordered.begin(), ordered.end(),
            [](const DemandPoint& a, const DemandPoint& b) { return a.hour < b.hour; });

  Viewport window{-1.6, 1.6, -1.6, 1.6, resolution, resolution};
  std::vector<FoldMetrics> report;
  report.reserve(ordered.size());
  for (const DemandPoint& pt : ordered) {
    EscapeRaster raster =
        render_raster(RenderMode::julia, pt.c(), window, cfg, 64, workers);
    BinaryGrid mask = boundary_mask(raster);
    FoldMetrics m;
    m.hour = pt.hour;
    m.boundary_pixel_fraction =
        static_cast<double>(mask.count()) / raster.pixels.size();
    BoxCountFit fit = box_counting_dimension(mask, kScales);
    m.box_dimension = fit.dimension;
    m.box_dimension_stderr = fit.stderr_;
    m.m_distance_estimate = distance_to_m_boundary(pt.c(), cfg);
    report.push_back(m);
  }
  return report;
}

void write_fold_csv(const std::vector<FoldMetrics>& report, std::ostream& out) {
  out << "hour,boundary_fraction,box_dim,box_dim_stderr,m_distance\n";
  for (const FoldMetrics& m : report) {
    std::array<char, 160> buf;
    const int n = std::snprintf(buf.data(), buf.size(), "%d,%.6g,%.6g,%.6g,%.6g\n",
                                m.hour, m.boundary_pixel_fraction,
                                m.box_dimension, m.box_dimension_stderr,
                                m.m_distance_estimate);
    out.write(buf.data(), n);
  }
}

}  // namespace dfrac

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dfrac/demand.hpp"
#include "dfrac/raster.hpp"

using namespace dfrac;

namespace {
const IterationConfig kCfg50{50, 2.0};
}

TEST_CASE("viewport validation and pixel mapping") {
  Viewport vp{-2, 1, -1.5, 1.5, 3, 3};
  vp.validate();
  CHECK(vp.pixel_center(0, 0) == Complex{-1.5, 1.0});
  CHECK(vp.pixel_center(1, 1) == Complex{-0.5, 0.0});
  CHECK_THROWS_AS((Viewport{1, -1, 0, 1, 4, 4}.validate()), validation_error);
  CHECK_THROWS_AS((Viewport{-1, 1, 0, 1, 0, 4}.validate()), validation_error);
}

TEST_CASE("render_raster small fixtures") {
  // center pixel of a 3x3 grid over the default window is c = -0.5
  auto m = render_raster(RenderMode::mandelbrot, {0, 0},
                         Viewport{-2, 1, -1.5, 1.5, 3, 3}, kCfg50, 16);
  CHECK_FALSE(m.at(1, 1).escaped);

  // Julia(0): filled set is the unit disk; 3x3 corners start outside radius
  // 2 squared away, center is the fixed point
  auto j = render_raster(RenderMode::julia, {0, 0}, Viewport{-2, 2, -2, 2, 3, 3},
                         kCfg50, 16);
  CHECK(j.at(0, 0).escaped);
  CHECK(j.at(0, 0).iterations == 1);
  CHECK(j.at(2, 2).escaped);
  CHECK_FALSE(j.at(1, 1).escaped);

  auto j3 = render_raster(RenderMode::julia, {0.30, 0.21},
                          Viewport{-1.5, 1.5, -1.5, 1.5, 512, 512},
                          IterationConfig{200, 2.0}, 64);
  auto bounded = std::count_if(j3.pixels.begin(), j3.pixels.end(),
                               [](const EscapePixel& p) { return !p.escaped; });
  CHECK(bounded > 0);
}

TEST_CASE("pixel-center exactness on a 1x1 viewport") {
  Viewport vp{0.1, 0.3, 0.2, 0.4, 1, 1};
  auto r = render_raster(RenderMode::mandelbrot, {0, 0}, vp, kCfg50, 1);
  auto expected = iterate_escape({0, 0}, {0.2, 0.3}, kCfg50);
  CHECK(r.pixels[0].escaped == expected.escaped);
  CHECK(r.pixels[0].iterations == expected.iterations);
}

TEST_CASE("scheduling independence: tiles and workers do not change bytes") {
  Viewport vp{-2, 1, -1.5, 1.5, 64, 48};
  IterationConfig cfg{200, 2.0};
  ColorMap cmap;
  std::string reference;
  for (int tile : {1, 16, 64}) {
    for (int workers : {1, 4, 8}) {
      auto r = render_raster(RenderMode::mandelbrot, {0, 0}, vp, cfg, tile, workers);
      std::ostringstream out;
      write_ppm(r, cmap, out);
      if (reference.empty()) reference = out.str();
      CHECK(out.str() == reference);
    }
  }
}

TEST_CASE("conjugation symmetry across the real axis") {
  Viewport vp{-2, 1, -1.2, 1.2, 48, 40};
  auto r = render_raster(RenderMode::mandelbrot, {0, 0}, vp, kCfg50, 16);
  for (int y = 0; y < vp.height / 2; ++y)
    for (int x = 0; x < vp.width; ++x)
      CHECK(r.at(x, y).iterations == r.at(x, vp.height - 1 - y).iterations);
}

TEST_CASE("write_ppm fixed fixtures") {
  ColorMap cmap;
  EscapeRaster r;
  r.viewport = Viewport{-1, 1, -1, 1, 1, 1};
  r.cfg = IterationConfig{254, 2.0};
  r.pixels = {EscapePixel{false, 254, 0.0}};
  std::ostringstream out;
  auto n = write_ppm(r, cmap, out);
  CHECK(out.str() == std::string("P6\n1 1\n255\n\0\0\0", 14));
  CHECK(n == out.str().size());

  r.pixels = {EscapePixel{true, 127, 0.0}};
  out.str("");
  write_ppm(r, cmap, out);
  CHECK(out.str() == std::string("P6\n1 1\n255\n\x7f\x7f\x7f", 14));

  r.viewport.width = 2;
  r.pixels = {EscapePixel{false, 254, 0.0}, EscapePixel{true, 254, 0.0}};
  out.str("");
  write_ppm(r, cmap, out);
  CHECK(out.str().size() == std::string("P6\n2 1\n255\n").size() + 6);
}

TEST_CASE("colormap: smooth hue palette is deterministic and distinct") {
  ColorMap hue;
  hue.smooth_hue = true;
  EscapePixel px{true, 10, 10.25};
  CHECK(hue.color(px, 100) == hue.color(px, 100));
  ColorMap gray;
  CHECK_FALSE(gray.color(px, 100) == Rgb{255, 0, 0}); // marker red is reserved
}

TEST_CASE("demand overlay marks and skips points") {
  auto points = to_per_unit(builtin_table1(), BasePower(4000));
  Viewport vp{-2, 1, -1.5, 1.5, 128, 128};
  auto r = render_demand_overlay(points, vp, kCfg50, 32, 1);
  CHECK(r.skipped_points == 0);
  auto markers = std::count(r.overlay.begin(), r.overlay.end(), OverlayPaint::marker);
  // neighbouring hours overlap at this resolution; a cross paints <= 9 px
  CHECK(markers >= 9);
  CHECK(markers <= 24 * 9);

  auto one = render_demand_overlay({{0, -0.5, 0.0}}, vp, kCfg50, 32, 1);
  CHECK(one.skipped_points == 0);
  CHECK(std::count(one.overlay.begin(), one.overlay.end(), OverlayPaint::marker) == 9);

  auto far = render_demand_overlay({{0, 10.0, 0.0}}, vp, kCfg50, 32, 1);
  CHECK(far.skipped_points == 1);
  CHECK(std::count(far.overlay.begin(), far.overlay.end(), OverlayPaint::marker) == 0);

  CHECK_THROWS_AS(render_demand_overlay({}, vp, kCfg50), validation_error);
}

TEST_CASE("daily montage layout") {
  auto points = to_per_unit(builtin_table1(), BasePower(4000));
  Viewport panel{-1.6, 1.6, -1.6, 1.6, 32, 32};

  std::vector<int> odd;
  for (int h = 1; h <= 23; h += 2) odd.push_back(h);
  auto m = render_daily_montage(points, panel, kCfg50, odd, 16, 1);
  CHECK(m.viewport.width == 4 * 32 + 3 * 2);
  CHECK(m.viewport.height == 3 * 32 + 2 * 2);
  // separator column between panels is painted
  CHECK(m.overlay[32] == OverlayPaint::separator);
  CHECK(m.overlay[0] == OverlayPaint::none);

  auto single = render_daily_montage(points, panel, kCfg50, {19}, 16, 1);
  CHECK(single.viewport.width == 32);
  CHECK(single.viewport.height == 32);
  CHECK(std::count(single.overlay.begin(), single.overlay.end(),
                   OverlayPaint::separator) == 0);

  CHECK_THROWS_WITH_AS(render_daily_montage(points, panel, kCfg50, {25}, 16, 1),
                       doctest::Contains("25"), validation_error);
}

TEST_CASE("montage panel content matches a direct julia render") {
  auto points = to_per_unit(builtin_table1(), BasePower(4000));
  Viewport panel{-1.6, 1.6, -1.6, 1.6, 24, 24};
  auto m = render_daily_montage(points, panel, kCfg50, {1, 3}, 16, 1);
  auto direct = render_raster(RenderMode::julia, points[3].c(), panel, kCfg50, 16);
  // second panel starts at x = 24 + 2
  for (int y = 0; y < 24; ++y)
    for (int x = 0; x < 24; ++x)
      CHECK(m.at(26 + x, y).iterations == direct.at(x, y).iterations);
}

TEST_CASE("demand curves SVG") {
  std::ostringstream out;
  auto n = plot_demand_curves(builtin_table1(), out);
  const std::string svg = out.str();
  CHECK(n == svg.size());
  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    ++pos;
  }
  CHECK(polylines == 3);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("width=\"800\" height=\"480\"") != std::string::npos);

  // determinism
  std::ostringstream again;
  plot_demand_curves(builtin_table1(), again);
  CHECK(again.str() == svg);

  std::ostringstream two;
  plot_demand_curves({{0, 100, 50, 112}, {1, 200, 80, 215}}, two);
  CHECK(two.str().find("<polyline") != std::string::npos);

  std::ostringstream one;
  CHECK_THROWS_AS(plot_demand_curves({{0, 100, 50, 112}}, one), validation_error);
}

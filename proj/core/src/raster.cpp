#include "dfrac/raster.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace dfrac {

void Viewport::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw validation_error("viewport bounds must satisfy min < max");
  if (width < 1 || height < 1)
    throw validation_error("viewport resolution must be >= 1 pixel");
}

Rgb ColorMap::color(const EscapePixel& px, int max_iter) const {
  if (!px.escaped) return interior;
  if (smooth_hue) {
    // Cyclic hue from the fractional escape count; period 32 iterations.
    const double phase = 2.0 * 3.14159265358979323846 * px.smooth / 32.0;
    auto chan = [&](double shift) {
      return static_cast<std::uint8_t>(
          std::lround(127.5 * (1.0 + std::sin(phase + shift))));
    };
    return {chan(0.0), chan(2.0943951023931953), chan(4.1887902047863905)};
  }
  const long g = std::clamp(255L * px.iterations / max_iter, 0L, 255L);
  return {static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(g),
          static_cast<std::uint8_t>(g)};
}

namespace {

void render_tile(EscapeRaster& out, int x0, int y0, int x1, int y1) {
  const Viewport& vp = out.viewport;
  for (int y = y0; y < y1; ++y) {
    EscapePixel* row = out.pixels.data() + static_cast<std::size_t>(y) * vp.width;
    for (int x = x0; x < x1; ++x) {
      const Complex p = vp.pixel_center(x, y);
      const Complex z0 = out.mode == RenderMode::mandelbrot ? Complex{0, 0} : p;
      const Complex c = out.mode == RenderMode::mandelbrot ? p : out.julia_c;
      EscapeResult res = iterate_escape(z0, c, out.cfg);
      EscapePixel& px = row[x];
      px.escaped = res.escaped;
      px.iterations = res.iterations;
      px.smooth = res.escaped && res.final_magnitude > 1.0
                      ? smooth_iteration(res)
                      : 0.0;
    }
  }
}

}  // namespace

EscapeRaster render_raster(RenderMode mode, Complex julia_c,
                           const Viewport& viewport, const IterationConfig& cfg,
                           int tile_size, int workers) {
  viewport.validate();
  cfg.validate();
  if (tile_size < 1) throw validation_error("tile_size must be >= 1");
  if (workers < 0) throw validation_error("workers must be >= 0");
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());

  EscapeRaster out;
  out.viewport = viewport;
  out.cfg = cfg;
  out.mode = mode;
  out.julia_c = julia_c;
  out.pixels.resize(static_cast<std::size_t>(viewport.width) * viewport.height);

  struct Tile { int x0, y0, x1, y1; };
  std::vector<Tile> tiles;
  for (int y = 0; y < viewport.height; y += tile_size)
    for (int x = 0; x < viewport.width; x += tile_size)
      tiles.push_back({x, y, std::min(x + tile_size, viewport.width),
                       std::min(y + tile_size, viewport.height)});

  const int nthreads = std::min<int>(workers, static_cast<int>(tiles.size()));
  if (nthreads <= 1) {
    for (const Tile& t : tiles) render_tile(out, t.x0, t.y0, t.x1, t.y1);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int i = 0; i < nthreads; ++i)
    pool.emplace_back([&] {
      for (std::size_t idx; (idx = next.fetch_add(1)) < tiles.size();) {
        const Tile& t = tiles[idx];
        render_tile(out, t.x0, t.y0, t.x1, t.y1);
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

std::size_t write_ppm(const EscapeRaster& raster, const ColorMap& cmap,
                      std::ostream& sink) {
  const Viewport& vp = raster.viewport;
  std::array<char, 64> header;
  const int hlen = std::snprintf(header.data(), header.size(), "P6\n%d %d\n255\n",
                                 vp.width, vp.height);
  sink.write(header.data(), hlen);

  std::vector<char> row(static_cast<std::size_t>(vp.width) * 3);
  const bool has_overlay = !raster.overlay.empty();
  for (int y = 0; y < vp.height; ++y) {
    for (int x = 0; x < vp.width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * vp.width + x;
      Rgb rgb = cmap.color(raster.pixels[i], raster.cfg.max_iter);
      if (has_overlay) {
        if (raster.overlay[i] == OverlayPaint::marker) rgb = {255, 0, 0};
        else if (raster.overlay[i] == OverlayPaint::separator) rgb = {255, 255, 255};
      }
      row[3 * x] = static_cast<char>(rgb.r);
      row[3 * x + 1] = static_cast<char>(rgb.g);
      row[3 * x + 2] = static_cast<char>(rgb.b);
    }
    sink.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!sink) throw io_error("write_ppm: sink write failed");
  return static_cast<std::size_t>(hlen) + row.size() * vp.height;
}

EscapeRaster render_demand_overlay(const std::vector<DemandPoint>& points,
                                   const Viewport& viewport,
                                   const IterationConfig& cfg,
                                   int tile_size, int workers) {
  if (points.empty())
    throw validation_error("render_demand_overlay: no demand points");
  EscapeRaster out = render_raster(RenderMode::mandelbrot, {0, 0}, viewport,
                                   cfg, tile_size, workers);
  out.overlay.assign(out.pixels.size(), OverlayPaint::none);

  auto mark = [&](int x, int y) {
    if (x >= 0 && x < viewport.width && y >= 0 && y < viewport.height)
      out.overlay[static_cast<std::size_t>(y) * viewport.width + x] =
          OverlayPaint::marker;
  };
  for (const DemandPoint& pt : points) {
    const int px = static_cast<int>(std::floor((pt.c_re - viewport.re_min) / viewport.dre()));
    const int py = static_cast<int>(std::floor((viewport.im_max - pt.c_im) / viewport.dim()));
    if (px < 0 || px >= viewport.width || py < 0 || py >= viewport.height) {
      ++out.skipped_points;
      continue;
    }
    for (int d = -2; d <= 2; ++d) {
      mark(px + d, py);
      mark(px, py + d);
    }
  }
  return out;
}

EscapeRaster render_daily_montage(const std::vector<DemandPoint>& points,
                                  const Viewport& per_panel,
                                  const IterationConfig& cfg,
                                  const std::vector<int>& hours,
                                  int tile_size, int workers) {
  per_panel.validate();
  if (hours.empty()) throw validation_error("montage: no hours requested");
  std::vector<Complex> params;
  params.reserve(hours.size());
  for (int h : hours) {
    auto it = std::find_if(points.begin(), points.end(),
                           [h](const DemandPoint& p) { return p.hour == h; });
    if (it == points.end())
      throw validation_error("montage: no demand point for hour " +
                             std::to_string(h));
    params.push_back(it->c());
  }

  const int n = static_cast<int>(hours.size());
  const int cols = std::min(n, 4);
  const int rows = (n + 3) / 4;
  const int sep = n > 1 ? 2 : 0;
  const int pw = per_panel.width, ph = per_panel.height;

  EscapeRaster out;
  out.viewport = per_panel;
  out.viewport.width = cols * pw + (cols - 1) * sep;
  out.viewport.height = rows * ph + (rows - 1) * sep;
  out.cfg = cfg;
  out.mode = RenderMode::julia;
  out.pixels.resize(static_cast<std::size_t>(out.viewport.width) *
                    out.viewport.height);
  // Separator pixels stay painted even where no panel covers them.
  out.overlay.assign(out.pixels.size(), OverlayPaint::separator);

  for (int i = 0; i < n; ++i) {
    EscapeRaster panel = render_raster(RenderMode::julia, params[i], per_panel,
                                       cfg, tile_size, workers);
    const int ox = (i % 4) * (pw + sep);
    const int oy = (i / 4) * (ph + sep);
    for (int y = 0; y < ph; ++y) {
      const std::size_t src = static_cast<std::size_t>(y) * pw;
      const std::size_t dst =
          static_cast<std::size_t>(oy + y) * out.viewport.width + ox;
      std::copy_n(panel.pixels.begin() + src, pw, out.pixels.begin() + dst);
      std::fill_n(out.overlay.begin() + dst, pw, OverlayPaint::none);
    }
  }
  return out;
}

std::size_t plot_demand_curves(const std::vector<DemandRecord>& records,
                               std::ostream& sink) {
  if (records.size() < 2)
    throw validation_error("plot_demand_curves: need at least 2 records");

  constexpr int kWidth = 800, kHeight = 480;
  constexpr int kLeft = 60, kRight = 20, kTop = 20, kBottom = 40;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double max_val = 0.0;
  int min_hour = records.front().hour, max_hour = records.front().hour;
  for (const auto& r : records) {
    max_val = std::max({max_val, r.p_mw, r.q_mvar, r.s_mva});
    min_hour = std::min(min_hour, r.hour);
    max_hour = std::max(max_hour, r.hour);
  }
  if (max_val <= 0.0) max_val = 1.0;
  const double hour_span = std::max(1, max_hour - min_hour);

  auto sx = [&](double h) { return kLeft + (h - min_hour) / hour_span * plot_w; };
  auto sy = [&](double v) { return kTop + (1.0 - v / max_val) * plot_h; };

  std::string svg;
  svg.reserve(8192);
  auto appendf = [&svg](const char* fmt, auto... args) {
    std::array<char, 256> buf;
    const int n = std::snprintf(buf.data(), buf.size(), fmt, args...);
    svg.append(buf.data(), static_cast<std::size_t>(n));
  };

  appendf("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
          "viewBox=\"0 0 %d %d\">\n", kWidth, kHeight, kWidth, kHeight);
  appendf("<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n",
          kWidth, kHeight);
  appendf("<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n",
          kLeft, kHeight - kBottom, kWidth - kRight, kHeight - kBottom);
  appendf("<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n",
          kLeft, kTop, kLeft, kHeight - kBottom);

  struct Series { const char* name; const char* color; double DemandRecord::*field; };
  const Series series[] = {
      {"P", "#d62728", &DemandRecord::p_mw},
      {"Q", "#1f77b4", &DemandRecord::q_mvar},
      {"S", "#2ca02c", &DemandRecord::s_mva},
  };
  for (const Series& s : series) {
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += s.color;
    svg += "\" stroke-width=\"2\" points=\"";
    for (const auto& r : records) {
      appendf("%.2f,%.2f ", sx(r.hour), sy(r.*s.field));
    }
    if (svg.back() == ' ') svg.pop_back();
    svg += "\"/>\n";
  }
  for (int i = 0; i < 3; ++i)
    appendf("<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"14\" "
            "fill=\"%s\">%s</text>\n",
            kWidth - kRight - 60 + 22 * i, kTop + 16, series[i].color,
            series[i].name);
  appendf("<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"14\">"
          "hour</text>\n", kWidth / 2 - 18, kHeight - 10);
  appendf("<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"14\" "
          "transform=\"rotate(-90 16 %d)\">MW / MVAr / MVA</text>\n",
          16, kHeight / 2, kHeight / 2);
  svg += "</svg>\n";

  sink.write(svg.data(), static_cast<std::streamsize>(svg.size()));
  if (!sink) throw io_error("plot_demand_curves: sink write failed");
  return svg.size();
}

}  // namespace dfrac

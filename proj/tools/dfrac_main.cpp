// dfrac: demand-curve fractal analysis CLI.
//
//   dfrac classify --builtin-table1
//   dfrac render julia --hour 19 --builtin-table1 -o julia19.ppm
//   dfrac render montage --hours odd --builtin-table1 -o montage.ppm
//   dfrac metrics --builtin-table1 -o report.csv

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfrac/demand.hpp"
#include "dfrac/dynamics.hpp"
#include "dfrac/metrics.hpp"
#include "dfrac/raster.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct RunConfig {
  std::string input_path;
  bool builtin = false;
  double base_power = 4000.0;
  int max_iter = 1000;
  double escape_radius = 2.0;
  double boundary_epsilon = 0.02;
  int width = 512;
  int height = 512;
  std::vector<double> viewport_bounds; // re_min re_max im_min im_max
  int workers = 0;                     // 0 = available parallelism
  int tile_size = 64;
  int resolution = 512;
  std::string output_path;
  int hour = -1;
  std::string hours = "odd";
  bool smooth_hue = false;
};

void add_common_flags(CLI::App& app, RunConfig& cfg) {
  auto* input = app.add_option("-i,--input", cfg.input_path,
                               "Demand CSV (hour,p_mw,q_mvar[,s_mva])");
  auto* builtin = app.add_flag("--builtin-table1", cfg.builtin,
                               "Use the embedded 24-hour dataset");
  input->excludes(builtin);
  builtin->excludes(input);
  app.add_option("--base-power", cfg.base_power, "Per-unit base, MVA")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-iter", cfg.max_iter, "Iteration budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--escape-radius", cfg.escape_radius, "Bailout radius (>= 2)")
      ->check(CLI::Range(2.0, 1e9))
      ->capture_default_str();
  app.add_option("-w,--workers", cfg.workers,
                 "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

std::vector<dfrac::DemandRecord> load_records(const RunConfig& cfg) {
  if (cfg.builtin) return dfrac::builtin_table1();
  if (cfg.input_path.empty())
    throw dfrac::validation_error("no input: pass --input FILE or --builtin-table1");
  std::ifstream in(cfg.input_path);
  if (!in) throw dfrac::io_error("cannot open input file " + cfg.input_path);
  auto records = dfrac::parse_demand_csv(in);
  if (records.empty())
    throw dfrac::validation_error("input contains no demand records");
  return records;
}

dfrac::IterationConfig iteration_config(const RunConfig& cfg) {
  dfrac::IterationConfig it{cfg.max_iter, cfg.escape_radius};
  it.validate();
  return it;
}

dfrac::Viewport make_viewport(const RunConfig& cfg, double re_min, double re_max,
                              double im_min, double im_max) {
  dfrac::Viewport vp{re_min, re_max, im_min, im_max, cfg.width, cfg.height};
  if (!cfg.viewport_bounds.empty()) {
    vp.re_min = cfg.viewport_bounds[0];
    vp.re_max = cfg.viewport_bounds[1];
    vp.im_min = cfg.viewport_bounds[2];
    vp.im_max = cfg.viewport_bounds[3];
  }
  vp.validate();
  return vp;
}

std::ostream& open_sink(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.output_path.empty()) return std::cout;
  file.open(cfg.output_path, std::ios::binary);
  if (!file) throw dfrac::io_error("cannot open output file " + cfg.output_path);
  return file;
}

std::vector<int> parse_hours(const std::string& spec,
                             const std::vector<dfrac::DemandPoint>& points) {
  std::vector<int> hours;
  if (spec == "odd") {
    for (int h = 1; h <= 23; h += 2) hours.push_back(h);
  } else if (spec == "all") {
    for (const auto& p : points) hours.push_back(p.hour);
    std::sort(hours.begin(), hours.end());
  } else {
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        hours.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw dfrac::validation_error("bad hour list entry '" + tok + "'");
      }
    }
    if (hours.empty()) throw dfrac::validation_error("empty hour list");
  }
  return hours;
}

int run_classify(const RunConfig& cfg) {
  auto records = load_records(cfg);
  auto points = dfrac::to_per_unit(records, dfrac::BasePower(cfg.base_power));
  auto it = iteration_config(cfg);
  std::ofstream file;
  std::ostream& out = open_sink(cfg, file);
  out << "hour,c_re,c_im,class,connected,m_distance\n";
  for (const auto& pt : points) {
    auto cls = dfrac::classify_parameter(pt.c(), it, cfg.boundary_epsilon);
    const char* name = cls.kind == dfrac::ParameterClass::interior ? "INTERIOR"
                       : cls.kind == dfrac::ParameterClass::boundary ? "BOUNDARY"
                                                                     : "EXTERIOR";
    const bool connected = dfrac::julia_connected(pt.c(), it);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d,%.6g,%.6g,%s,%s,%.6g\n", pt.hour,
                  pt.c_re, pt.c_im, name, connected ? "true" : "false",
                  cls.distance_estimate);
    out << buf;
  }
  return kExitOk;
}

int run_metrics(const RunConfig& cfg) {
  auto records = load_records(cfg);
  auto points = dfrac::to_per_unit(records, dfrac::BasePower(cfg.base_power));
  auto report = dfrac::fold_report(points, iteration_config(cfg), cfg.resolution,
                                   cfg.workers);
  std::ofstream file;
  std::ostream& out = open_sink(cfg, file);
  dfrac::write_fold_csv(report, out);
  return kExitOk;
}

int run_render(const RunConfig& cfg, const std::string& target) {
  auto it = iteration_config(cfg);
  dfrac::ColorMap cmap;
  cmap.smooth_hue = cfg.smooth_hue;
  std::ofstream file;

  if (target == "mandelbrot") {
    auto vp = make_viewport(cfg, -2.0, 1.0, -1.5, 1.5);
    auto raster = dfrac::render_raster(dfrac::RenderMode::mandelbrot, {0, 0}, vp,
                                       it, cfg.tile_size, cfg.workers);
    dfrac::write_ppm(raster, cmap, open_sink(cfg, file));
    return kExitOk;
  }
  if (target == "curves") {
    dfrac::plot_demand_curves(load_records(cfg), open_sink(cfg, file));
    return kExitOk;
  }

  auto points = dfrac::to_per_unit(load_records(cfg),
                                   dfrac::BasePower(cfg.base_power));
  if (target == "julia") {
    if (cfg.hour < 0)
      throw dfrac::validation_error("render julia needs --hour H");
    auto pt = std::find_if(points.begin(), points.end(),
                           [&](const auto& p) { return p.hour == cfg.hour; });
    if (pt == points.end())
      throw dfrac::validation_error("no demand point for hour " +
                                    std::to_string(cfg.hour));
    auto vp = make_viewport(cfg, -1.6, 1.6, -1.6, 1.6);
    auto raster = dfrac::render_raster(dfrac::RenderMode::julia, pt->c(), vp, it,
                                       cfg.tile_size, cfg.workers);
    dfrac::write_ppm(raster, cmap, open_sink(cfg, file));
    return kExitOk;
  }
  if (target == "overlay") {
    auto vp = make_viewport(cfg, -2.0, 1.0, -1.5, 1.5);
    auto raster = dfrac::render_demand_overlay(points, vp, it, cfg.tile_size,
                                               cfg.workers);
    if (raster.skipped_points > 0)
      std::cerr << "warning: " << raster.skipped_points
                << " demand point(s) outside the viewport\n";
    dfrac::write_ppm(raster, cmap, open_sink(cfg, file));
    return kExitOk;
  }
  if (target == "montage") {
    auto hours = parse_hours(cfg.hours, points);
    auto vp = make_viewport(cfg, -1.6, 1.6, -1.6, 1.6);
    auto raster = dfrac::render_daily_montage(points, vp, it, hours,
                                              cfg.tile_size, cfg.workers);
    dfrac::write_ppm(raster, cmap, open_sink(cfg, file));
    return kExitOk;
  }
  throw dfrac::validation_error("unknown render target " + target);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractal analysis of a daily power-demand curve"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* classify = app.add_subcommand(
      "classify", "Per-hour parameter class, connectivity and M distance");
  add_common_flags(*classify, cfg);
  classify->add_option("--boundary-epsilon", cfg.boundary_epsilon,
                       "Boundary classification threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify->add_option("-o,--output", cfg.output_path, "CSV output (default stdout)");

  CLI::App* render = app.add_subcommand("render", "Render fractal images");
  render->require_subcommand(1);
  std::string render_target;
  for (const char* t : {"mandelbrot", "julia", "overlay", "montage", "curves"}) {
    CLI::App* sub = render->add_subcommand(t);
    add_common_flags(*sub, cfg);
    sub->add_option("--width", cfg.width)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--height", cfg.height)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--viewport", cfg.viewport_bounds,
                    "re_min re_max im_min im_max")->expected(4);
    sub->add_option("--tile-size", cfg.tile_size)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--smooth-hue", cfg.smooth_hue, "Hue palette from smooth counts");
    sub->add_option("-o,--output", cfg.output_path, "Output file (default stdout)");
    if (std::string(t) == "julia")
      sub->add_option("--hour", cfg.hour, "Hour of the Julia parameter");
    if (std::string(t) == "montage")
      sub->add_option("--hours", cfg.hours,
                      "'odd', 'all' or comma-separated hour list")
          ->capture_default_str();
    sub->callback([&render_target, t] { render_target = t; });
  }

  CLI::App* metrics = app.add_subcommand(
      "metrics", "Fold metrics report (boundary density, box dimension)");
  add_common_flags(*metrics, cfg);
  metrics->add_option("--resolution", cfg.resolution, "Julia raster resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  metrics->add_option("-o,--output", cfg.output_path, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return run_classify(cfg);
    if (metrics->parsed()) return run_metrics(cfg);
    if (render->parsed()) return run_render(cfg, render_target);
  } catch (const dfrac::io_error& e) {
    std::cerr << "dfrac: " << e.what() << "\n";
    return kExitIo;
  } catch (const dfrac::parse_error& e) {
    std::cerr << "dfrac: " << e.what() << "\n";
    return kExitInput;
  } catch (const dfrac::validation_error& e) {
    std::cerr << "dfrac: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "dfrac: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

#include "dfrac/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace dfrac {

EscapeResult iterate_escape(Complex z0, Complex c, const IterationConfig& cfg,
                            DerivativeMode deriv) {
  cfg.validate();
  if (!std::isfinite(z0.real()) || !std::isfinite(z0.imag()) ||
      !std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw validation_error("iterate_escape: non-finite input");

  const double bail2 = cfg.escape_radius * cfg.escape_radius;
  double zr = z0.real(), zi = z0.imag();
  double dr = deriv == DerivativeMode::dynamic ? 1.0 : 0.0;
  double di = 0.0;
  const double g = deriv == DerivativeMode::parameter ? 1.0 : 0.0;

  for (int t = 0;; ++t) {
    const double mag2 = zr * zr + zi * zi;
    if (mag2 > bail2)
      return {true, t, std::sqrt(mag2), std::hypot(dr, di)};
    if (t == cfg.max_iter)
      return {false, cfg.max_iter, std::sqrt(mag2), std::hypot(dr, di)};
    if (deriv != DerivativeMode::none) {
      // d <- 2 z d + g, with z before the update
      const double ndr = 2.0 * (zr * dr - zi * di) + g;
      const double ndi = 2.0 * (zr * di + zi * dr);
      dr = ndr;
      di = ndi;
    }
    const double nzr = zr * zr - zi * zi + c.real();
    const double nzi = 2.0 * zr * zi + c.imag();
    zr = nzr;
    zi = nzi;
  }
}

bool mandelbrot_member(Complex c, const IterationConfig& cfg) {
  return !iterate_escape({0.0, 0.0}, c, cfg).escaped;
}

bool cardioid_bulb_member(Complex c) {
  const double re = c.real(), im = c.imag();
  const double x = re - 0.25;
  const double q = x * x + im * im;
  if (q * (q + x) < 0.25 * im * im) return true;       // main cardioid
  const double px = re + 1.0;
  return px * px + im * im < 0.0625;                   // period-2 disk
}

Classification classify_parameter(Complex c, const IterationConfig& cfg,
                                  double boundary_epsilon) {
  if (!(boundary_epsilon > 0.0))
    throw validation_error("boundary_epsilon must be > 0");
  EscapeResult res = iterate_escape({0.0, 0.0}, c, cfg, DerivativeMode::parameter);
  if (res.escaped) {
    // Exterior distance estimate d = |z| ln|z| / |dz/dc|.
    double d = 0.0;
    if (res.derivative_magnitude > 0.0)
      d = res.final_magnitude * std::log(res.final_magnitude) /
          res.derivative_magnitude;
    if (d >= boundary_epsilon) return {ParameterClass::exterior, d};
    return {ParameterClass::boundary, d};
  }
  // Bounded orbit: probe 8 points on the eps circle around c.
  for (int k = 0; k < 8; ++k) {
    const double th = k * std::numbers::pi / 4.0;
    const Complex probe = c + boundary_epsilon * Complex{std::cos(th), std::sin(th)};
    if (iterate_escape({0.0, 0.0}, probe, cfg).escaped)
      return {ParameterClass::boundary, 0.0};
  }
  return {ParameterClass::interior, 0.0};
}

bool julia_connected(Complex c, const IterationConfig& cfg) {
  return mandelbrot_member(c, cfg);
}

double smooth_iteration(const EscapeResult& res) {
  if (!res.escaped)
    throw validation_error("smooth_iteration: orbit did not escape");
  if (!(res.final_magnitude > 1.0))
    throw validation_error("smooth_iteration: final magnitude must be > 1");
  return res.iterations + 1.0 - std::log2(std::log(res.final_magnitude));
}

}  // namespace dfrac

#pragma once

#include <complex>

#include "dfrac/errors.hpp"

namespace dfrac {

using Complex = std::complex<double>;

// Settings for the escape-time iteration z <- z^2 + c.
struct IterationConfig {
  int max_iter = 1000;
  double escape_radius = 2.0; // radius 2 is the minimal correct bailout

  void validate() const {
    if (max_iter < 1) throw validation_error("max_iter must be >= 1");
    if (!(escape_radius >= 2.0))
      throw validation_error("escape_radius must be >= 2");
  }
};

struct EscapeResult {
  bool escaped = false;
  int iterations = 0;          // first t with |Z_t| > escape_radius, else max_iter
  double final_magnitude = 0.0;
  double derivative_magnitude = 0.0; // |dZ/dC| or |dZ/dZ0|, when tracked
};

enum class DerivativeMode {
  none,      // skip the co-iteration
  parameter, // d0 = 0, d <- 2zd + 1  (Mandelbrot / parameter space)
  dynamic,   // d0 = 1, d <- 2zd      (Julia / dynamic space)
};

enum class ParameterClass { interior, boundary, exterior };

struct Classification {
  ParameterClass kind = ParameterClass::interior;
  double distance_estimate = 0.0; // meaningful for exterior/boundary
};

// Iterates z <- z^2 + c from z0, stopping at the first |z| > escape_radius
// or after cfg.max_iter steps. z0 itself counts as iteration 0.
EscapeResult iterate_escape(Complex z0, Complex c, const IterationConfig& cfg,
                            DerivativeMode deriv = DerivativeMode::none);

// Critical-orbit boundedness within cfg.max_iter.
bool mandelbrot_member(Complex c, const IterationConfig& cfg);

// Analytic one-sided oracle: true iff c lies in the main cardioid or the
// period-2 disk. true implies membership in M; false says nothing.
bool cardioid_bulb_member(Complex c);

// Three-way split: exterior when the critical orbit escapes with exterior
// distance estimate d = |z| ln|z| / |dz/dc| >= eps; boundary when it escapes
// with d < eps, or is bounded but one of 8 probe points at distance eps
// escapes; interior otherwise.
Classification classify_parameter(Complex c, const IterationConfig& cfg,
                                  double boundary_epsilon);

// Connectivity dichotomy: J(f_c) is connected iff the critical orbit is
// bounded.
bool julia_connected(Complex c, const IterationConfig& cfg);

// Fractional escape count nu = iterations + 1 - log2(ln |Z|) for smooth
// coloring. Throws validation_error for bounded results.
double smooth_iteration(const EscapeResult& res);

}  // namespace dfrac

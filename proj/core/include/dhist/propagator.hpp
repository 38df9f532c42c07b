#pragma once

#include <utility>

#include "dhist/model.hpp"
#include "dhist/time_function.hpp"

namespace dhist {

// Constituents of the reduced propagator.  The full complex kernel is never
// built: every implemented quantity needs only |K_0|^2 and phase
// differences, in which the unknown global pieces cancel.
struct PropagatorConstants {
  double B = 0.0;
  double g = 0.0;
  double A_D = 0.0;
  double B_D = 0.0;
  double k0_mag_sq = 0.0;  // m*omega / (2*pi*sin(omega*T))
};

// B = 2 * int_0^T f(t) sin(omega t) dt.  Closed form for the constant
// profile, adaptive quadrature (rel_tol 1e-10) otherwise.
double coupling_B(const TimeFunction& f, double omega, double T);

// g = B / (T sin(omega T)).  For omega*T below the series threshold the
// free-particle limit (2/T^2) int t f(t) dt is used, with the first
// (omega*T)^2 correction retained.  Throws SingularPropagator when omega*T
// falls in the exclusion band of a nonzero multiple of pi.
double coupling_g(const TimeFunction& f, double omega, double T);

// A_D = int_0^T dt f_D(t) sin(omega(T-t)) int_0^t ds f_D(s) sin(omega s),
// B_D analogous to B.  Nested adaptive quadrature at rel_tol 1e-8.
std::pair<double, double> driving_integrals(const TimeFunction& f_D,
                                            double omega, double T);

// phi(xbar) = [xbar * B_D - A_D/(m omega)] / sin(omega T); affine in xbar.
// Only differences of phi across history pairs are physical.
double phase_phi(double xbar, const PropagatorConstants& consts,
                 const OscillatorParams& params);

// Pointer displacement acquired over the measurement: s = g*(x + x')/2 + d.
double shift_function(double x, double xprime, double g, double d);

// |K_0|^2 = m*omega / (2*pi*sin(omega*T)); free-particle limit m/(2*pi*T)
// below the series threshold.  Past the first half period this is negative;
// that throws NegativeDensity unless allow_caustic is set, in which case
// |sin| is used.
double k0_magnitude_sq(double m, double omega, double T,
                       bool allow_caustic = false);

// Bundles the above for one parameter set.
PropagatorConstants propagator_constants(const OscillatorParams& params);

}  // namespace dhist

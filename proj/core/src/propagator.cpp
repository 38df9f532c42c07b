#include "dhist/propagator.hpp"

#include <cmath>

#include "dhist/errors.hpp"
#include "dhist/quadrature.hpp"

namespace dhist {

namespace {

const QuadratureSpec kProfileQuad{1e-10, 1e-14, 40, 8.0};
const QuadratureSpec kDrivingQuad{1e-8, 1e-13, 40, 8.0};

// Throws when omega*T falls inside the exclusion band of a nonzero multiple
// of pi.  omega*T -> 0 is not singular: the limit forms take over there.
void require_nonsingular(double omega, double T) {
  const double u = omega * T;
  const double n = std::round(u / M_PI);
  if (n >= 1.0 && std::abs(u - n * M_PI) < kSingularBand) {
    throw SingularPropagator("omega*T within 1e-6 of a multiple of pi");
  }
}

}  // namespace

double coupling_B(const TimeFunction& f, double omega, double T) {
  if (f.is_identically_zero()) {
    return 0.0;
  }
  if (f.kind() == TimeFunction::Kind::Constant) {
    const double c = f(0.0);
    const double u = omega * T;
    if (u < kSmallPhaseThreshold) {
      // 2c(1-cos u)/omega with the cancellation expanded away.
      return c * omega * T * T * (1.0 - u * u / 12.0);
    }
    return 2.0 * c * (1.0 - std::cos(u)) / omega;
  }
  return 2.0 * integrate(
                   [&](double t) { return f(t) * std::sin(omega * t); }, 0.0,
                   T, kProfileQuad);
}

double coupling_g(const TimeFunction& f, double omega, double T) {
  if (f.is_identically_zero()) {
    return 0.0;
  }
  const double u = omega * T;
  if (u < kSmallPhaseThreshold) {
    // Free-particle limit with the first (omega*T)^2 correction:
    // g = g0 (1 + u^2/6) - (omega^2 / 3T^2) int t^3 f dt.
    const double tf = integrate([&](double t) { return t * f(t); }, 0.0, T,
                                kProfileQuad);
    const double g0 = 2.0 * tf / (T * T);
    if (omega == 0.0) {
      return g0;
    }
    const double t3f = integrate(
        [&](double t) { return t * t * t * f(t); }, 0.0, T, kProfileQuad);
    return g0 * (1.0 + u * u / 6.0) -
           omega * omega / (3.0 * T * T) * t3f;
  }
  require_nonsingular(omega, T);
  return coupling_B(f, omega, T) / (T * std::sin(u));
}

std::pair<double, double> driving_integrals(const TimeFunction& f_D,
                                            double omega, double T) {
  if (f_D.is_identically_zero()) {
    return {0.0, 0.0};
  }
  const QuadratureSpec inner = kDrivingQuad.tightened();
  const double A_D = integrate(
      [&](double t) {
        const double running = integrate(
            [&](double s) { return f_D(s) * std::sin(omega * s); }, 0.0, t,
            inner);
        return f_D(t) * std::sin(omega * (T - t)) * running;
      },
      0.0, T, kDrivingQuad);
  return {A_D, coupling_B(f_D, omega, T)};
}

double phase_phi(double xbar, const PropagatorConstants& consts,
                 const OscillatorParams& params) {
  const double u = params.omega * params.T;
  if (u < kSmallPhaseThreshold) {
    // Limit of [xbar B_D - A_D/(m omega)]/sin(omega T): both driving
    // integrals carry factors of omega that cancel against the denominator.
    const double slope = params.T * coupling_g(params.f_D, params.omega,
                                               params.T);
    if (params.f_D.is_identically_zero()) {
      return xbar * slope;
    }
    const QuadratureSpec inner = kDrivingQuad.tightened();
    const double C = integrate(
        [&](double t) {
          const double running = integrate(
              [&](double s) { return params.f_D(s) * s; }, 0.0, t, inner);
          return params.f_D(t) * (params.T - t) * running;
        },
        0.0, params.T, kDrivingQuad);
    return xbar * slope - C / (params.m * params.T);
  }
  require_nonsingular(params.omega, params.T);
  return (xbar * consts.B_D - consts.A_D / (params.m * params.omega)) /
         std::sin(u);
}

double shift_function(double x, double xprime, double g, double d) {
  return g * (x + xprime) / 2.0 + d;
}

double k0_magnitude_sq(double m, double omega, double T, bool allow_caustic) {
  if (!(m > 0.0) || !(T > 0.0)) {
    throw NonPositive("k0_magnitude_sq needs m > 0 and T > 0");
  }
  if (omega < 0.0) {
    throw NonPositive("k0_magnitude_sq needs omega >= 0");
  }
  const double u = omega * T;
  if (u < kSmallPhaseThreshold) {
    return m / (2.0 * M_PI * T) * (1.0 + u * u / 6.0);
  }
  require_nonsingular(omega, T);
  double s = std::sin(u);
  if (s < 0.0) {
    if (!allow_caustic) {
      throw NegativeDensity(
          "sin(omega*T) < 0: kernel density needs allow_caustic_branch");
    }
    s = -s;
  }
  return m * omega / (2.0 * M_PI * s);
}

PropagatorConstants propagator_constants(const OscillatorParams& params) {
  PropagatorConstants c;
  c.B = coupling_B(params.f, params.omega, params.T);
  c.g = coupling_g(params.f, params.omega, params.T);
  const auto [A_D, B_D] = driving_integrals(params.f_D, params.omega,
                                            params.T);
  c.A_D = A_D;
  c.B_D = B_D;
  c.k0_mag_sq = k0_magnitude_sq(params.m, params.omega, params.T,
                                params.allow_caustic_branch);
  return c;
}

}  // namespace dhist

#include "dhist/model.hpp"

#include <algorithm>
#include <cmath>

#include "dhist/errors.hpp"
#include "dhist/propagator.hpp"

namespace dhist {

namespace {

// Symmetry about T/2 on a uniform grid; cheap and catches every smooth
// asymmetry.  Pathological profiles that alias a 257-point grid are the
// caller's responsibility.
constexpr int kSymmetryGridPoints = 257;

void require_symmetric(const TimeFunction& f, double T, const char* name) {
  if (f.is_identically_zero()) {
    return;
  }
  double max_abs = 0.0;
  double max_asym = 0.0;
  for (int i = 0; i < kSymmetryGridPoints; ++i) {
    const double t = T * i / (kSymmetryGridPoints - 1);
    const double a = f(t);
    const double b = f(T - t);
    max_abs = std::max(max_abs, std::abs(a));
    max_asym = std::max(max_asym, std::abs(a - b));
  }
  if (max_asym > 1e-12 * max_abs) {
    throw AsymmetricFunction(std::string(name) +
                             " is not symmetric about T/2");
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw NonPositive(std::string(what) + " must be > 0");
  }
}

struct WidthView {
  double sigma = std::nan("");  // particle halfwidth
  double ell = std::nan("");    // pointer halfwidth
};

WidthView widths(const InitialState& state) {
  WidthView w;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, SharpParticle>) {
          w.ell = s.pointer.halfwidth;
        } else if constexpr (std::is_same_v<S, SharpPointer>) {
          w.sigma = s.particle.halfwidth;
        } else {
          w.sigma = s.particle.halfwidth;
          w.ell = s.pointer.halfwidth;
        }
      },
      state);
  return w;
}

}  // namespace

Configuration validate(const Configuration& config) {
  const OscillatorParams& p = config.params;
  require_positive(p.m, "mass m");
  require_positive(p.T, "duration T");
  if (p.omega < 0.0) {
    throw NonPositive("omega must be >= 0");
  }
  require_positive(config.partition.width, "partition width delta");

  const WidthView w = widths(config.state);
  if (!std::isnan(w.sigma)) {
    require_positive(w.sigma, "particle halfwidth sigma");
  }
  if (!std::isnan(w.ell)) {
    require_positive(w.ell, "pointer halfwidth ell");
  }

  require_symmetric(p.f, p.T, "coupling profile f");
  require_symmetric(p.f_D, p.T, "driving profile f_D");

  const double u = p.omega * p.T;
  const double n = std::round(u / M_PI);
  if (n >= 1.0 && std::abs(u - n * M_PI) < kSingularBand) {
    throw SingularPropagator("omega*T within 1e-6 of a multiple of pi");
  }
  return config;
}

Configuration validate(const OscillatorParams& params,
                       const Partition& partition, const InitialState& state) {
  return validate(Configuration{params, partition, state});
}

DerivedConstants dimensionless_groups(const OscillatorParams& params,
                                      const Partition& partition,
                                      const InitialState& state) {
  DerivedConstants d;
  d.B = coupling_B(params.f, params.omega, params.T);
  d.g = coupling_g(params.f, params.omega, params.T);
  const auto [A_D, B_D] = driving_integrals(params.f_D, params.omega,
                                            params.T);
  d.A_D = A_D;
  d.B_D = B_D;
  d.d = params.pointer_shift;

  const WidthView w = widths(state);
  if (!std::isnan(w.sigma)) {
    d.beta = partition.width / w.sigma;
  }
  if (!std::isnan(w.ell)) {
    d.kappa = std::abs(d.g) / (std::sqrt(8.0) * w.ell);
    d.gamma = d.kappa * partition.width;
    if (!std::isnan(w.sigma)) {
      d.lambda = d.kappa * w.sigma;
    }
  }
  return d;
}

}  // namespace dhist

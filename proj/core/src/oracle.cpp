#include "dhist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dhist/coarse_grain.hpp"
#include "dhist/errors.hpp"
#include "dhist/propagator.hpp"

namespace dhist {

namespace {

using std::complex;

// Gaussian weight over a window clipped to the tail cut, by quadrature.
double gauss_window(double lo, double hi, double tc,
                    const QuadratureSpec& spec) {
  lo = std::max(lo, -tc);
  hi = std::min(hi, tc);
  if (hi <= lo) {
    return 0.0;
  }
  return integrate([](double z) { return std::exp(-z * z); }, lo, hi, spec);
}

// I and P0 share the structure int dw W1(w) W2(w) with W the window
// integrals; J and P1 add the (z'' - z')^2 kernel, which stops the two
// window integrals from factorising.
double factor_with_kernel(double beta, double shift,
                          const QuadratureSpec& spec) {
  const double tc = spec.tail_cut;
  const QuadratureSpec mid = spec.tightened(0.1);
  const QuadratureSpec inner = spec.tightened(0.01);
  const double w_lo = -tc - beta - shift;
  const double w_hi = tc + beta - shift;
  return integrate(
      [&](double w) {
        const double zlo = std::max(w + shift - beta, -tc);
        const double zhi = std::min(w + shift + beta, tc);
        if (zhi <= zlo) {
          return 0.0;
        }
        const double ylo = std::max(w - beta, -tc);
        const double yhi = std::min(w + beta, tc);
        if (yhi <= ylo) {
          return 0.0;
        }
        return integrate(
            [&](double z2) {
              const double moments = integrate(
                  [&](double z1) {
                    const double d = z2 - z1;
                    return d * d * std::exp(-z1 * z1);
                  },
                  ylo, yhi, inner);
              return std::exp(-z2 * z2) * moments;
            },
            zlo, zhi, mid);
      },
      w_lo, w_hi, spec);
}

double factor_without_kernel(double beta, double shift,
                             const QuadratureSpec& spec) {
  const double tc = spec.tail_cut;
  const QuadratureSpec inner = spec.tightened(0.01);
  const double w_lo = -tc - beta - shift;
  const double w_hi = tc + beta - shift;
  return integrate(
      [&](double w) {
        return gauss_window(w - beta, w + beta, tc, inner) *
               gauss_window(w + shift - beta, w + shift + beta, tc, inner);
      },
      w_lo, w_hi, spec);
}

// The narrow-pointer factors are double integrals whose value must not
// depend on the window position w.
double pointer_factor_at(double gamma, double w, bool with_kernel,
                         const QuadratureSpec& spec) {
  const QuadratureSpec inner = spec.tightened(0.01);
  const double c = w + gamma;
  return integrate(
      [&](double z2) {
        return integrate(
            [&](double z1) {
              const double d = z2 - z1;
              double kernel = 1.0;
              if (with_kernel) {
                // Sign-flipped relative to the defining bracket so the
                // reported value is the magnitude entering the bound.
                kernel = z2 * z2 + z1 * z1 - 2.0 * c * c;
              }
              return kernel * std::exp(-d * d);
            },
            w - gamma, w + gamma, inner);
      },
      w + gamma, w + 3.0 * gamma, spec.tightened(0.1));
}

double pointer_factor(double gamma, bool with_kernel,
                      const QuadratureSpec& spec) {
  const double v0 = pointer_factor_at(gamma, 0.0, with_kernel, spec);
  const double tol =
      std::max(spec.abs_tol, 10.0 * spec.rel_tol * (1.0 + std::abs(v0)));
  for (const double w : {1.0, -1.0}) {
    const double v = pointer_factor_at(gamma, w, with_kernel, spec);
    if (std::abs(v - v0) > tol) {
      throw QuadratureFailure(
          "pointer factor integral is not window-independent");
    }
  }
  return v0;
}

}  // namespace

ErfProductResult erf_product_integral(double a, double b,
                                      const QuadratureSpec& spec) {
  spec.check();
  const double L = std::abs(a) + std::abs(b) + spec.tail_cut;
  const double numeric = integrate(
      [&](double x) { return std::erf(a + x) * std::erf(b - x) + 1.0; }, -L,
      L, spec);
  const double s = a + b;
  const double closed = 2.0 * s * std::erf(s / std::sqrt(2.0)) +
                        2.0 * std::sqrt(2.0 / M_PI) * std::exp(-s * s / 2.0);
  return {numeric, closed};
}

double oracle_factor(FactorKind kind, double arg, const QuadratureSpec& spec) {
  spec.check();
  if (arg < 0.0) {
    throw NonPositive("oracle_factor argument must be >= 0");
  }
  if (arg == 0.0) {
    return 0.0;  // every window degenerates to a point
  }
  switch (kind) {
    case FactorKind::I:
      return factor_without_kernel(arg, 2.0 * arg, spec);
    case FactorKind::P0:
      return factor_without_kernel(arg, 0.0, spec);
    case FactorKind::J:
      return factor_with_kernel(arg, 2.0 * arg, spec);
    case FactorKind::P1:
      return factor_with_kernel(arg, 0.0, spec);
    case FactorKind::F:
      return pointer_factor(arg, false, spec);
    case FactorKind::G:
      return pointer_factor(arg, true, spec);
  }
  throw ConfigError("unknown factor kind");
}

std::complex<double> oracle_general_functional(
    std::int64_t alpha, std::int64_t alpha_prime, const ProductState& state,
    const OscillatorParams& params, const Partition& partition,
    const QuadratureSpec& spec, FunctionalMode mode) {
  spec.check();
  const double sigma = state.particle.halfwidth;
  const double ell = state.pointer.halfwidth;
  if (!(sigma > 0.0) || !(ell > 0.0)) {
    throw NonPositive("product-state halfwidths must be > 0");
  }
  const double x0 = state.particle.center;
  const double a2 = state.particle.amplitude_sq();
  // Pointer overlap integral: |B|^2 ell sqrt(pi/2) e^{-kappa^2 dx^2}; the
  // pointer centre drops out.
  const double overlap_norm =
      state.pointer.amplitude_sq() * ell * std::sqrt(M_PI / 2.0);
  const double g = coupling_g(params.f, params.omega, params.T);
  const double kappa = std::abs(g) / (std::sqrt(8.0) * ell);
  const double k2 = k0_magnitude_sq(params.m, params.omega, params.T,
                                    params.allow_caustic_branch);

  const IntervalBounds ia = interval_bounds(alpha, partition);
  const IntervalBounds ib = interval_bounds(alpha_prime, partition);
  const double R = spec.tail_cut * sigma;

  // Kernel phase coefficients; free-particle limits below the threshold.
  const double u = params.omega * params.T;
  double c_quad, c_cross;
  if (u < kSmallPhaseThreshold) {
    c_quad = c_cross = params.m / (2.0 * params.T);
  } else {
    const double s = std::sin(u);
    c_quad = params.m * params.omega * std::cos(u) / (2.0 * s);
    c_cross = params.m * params.omega / (2.0 * s);
  }
  // Driving phase: B_D (x'' - x') / (2 sin wT) = (T/2) g[f_D] (x'' - x').
  const double c_drive =
      params.T / 2.0 * coupling_g(params.f_D, params.omega, params.T);

  const QuadratureSpec mid = spec.tightened(0.1);
  const QuadratureSpec inner = spec.tightened(0.01);

  auto x_window = [&](double xp, double xpp, double* lo, double* hi) {
    *lo = std::max(2.0 * ia.low - xp, 2.0 * ib.low - xpp);
    *hi = std::min(2.0 * ia.high - xp, 2.0 * ib.high - xpp);
    return *hi > *lo;
  };
  auto weight = [&](double xp, double xpp) {
    const double zp = (xp - x0) / sigma;
    const double zpp = (xpp - x0) / sigma;
    const double dx = xpp - xp;
    return a2 * std::exp(-zp * zp - zpp * zpp) * overlap_norm *
           std::exp(-kappa * kappa * dx * dx);
  };

  if (mode == FunctionalMode::ModulusBound) {
    const double value = integrate(
        [&](double xp) {
          return integrate(
              [&](double xpp) {
                double lo, hi;
                if (!x_window(xp, xpp, &lo, &hi)) {
                  return 0.0;
                }
                // |integrand| is x-independent: the x integral is the
                // window length.
                return weight(xp, xpp) * (hi - lo);
              },
              x0 - R, x0 + R, mid);
        },
        x0 - R, x0 + R, spec);
    return {k2 * value, 0.0};
  }

  const complex<double> value = integrate(
      [&](double xp) {
        return integrate(
            [&](double xpp) {
              double lo, hi;
              if (!x_window(xp, xpp, &lo, &hi)) {
                return complex<double>{};
              }
              const double theta0 =
                  c_quad * (xp * xp - xpp * xpp) - c_drive * (xpp - xp);
              const double slope = 2.0 * c_cross * (xpp - xp);
              const complex<double> osc = integrate(
                  [&](double x) {
                    return std::exp(
                        complex<double>(0.0, theta0 + slope * x));
                  },
                  lo, hi, inner);
              return weight(xp, xpp) * osc;
            },
            x0 - R, x0 + R, mid);
      },
      x0 - R, x0 + R, spec);
  return k2 * value;
}

SumRuleResult sum_rule_check(const ProductState& state,
                             const OscillatorParams& params,
                             const Partition& partition, int window,
                             const QuadratureSpec& spec) {
  if (window < 0) {
    throw ConfigError("sum rule window must be >= 0");
  }
  SumRuleResult r{};
  const bool normalised =
      state.particle.normalization == Normalization::L2Normalized &&
      state.pointer.normalization == Normalization::L2Normalized;
  r.target = normalised ? 1.0 : std::numeric_limits<double>::infinity();

  double sum = 0.0;
  double max_imag = 0.0;
  for (std::int64_t a = -window; a <= window; ++a) {
    const auto d = oracle_general_functional(a, a, state, params, partition,
                                             spec, FunctionalMode::Complex);
    sum += d.real();
    max_imag = std::max(max_imag, std::abs(d.imag()));
  }
  for (std::int64_t a = -window; a < window; ++a) {
    const auto d = oracle_general_functional(a, a + 1, state, params,
                                             partition, spec,
                                             FunctionalMode::Complex);
    sum += 2.0 * d.real();
  }
  r.partial_sum = sum;
  r.max_imag_residue = max_imag;

  // Error bar for the omitted |a - a'| >= 2 pairs: the largest such
  // modulus bound sits next to the state centre.
  const std::int64_t centre =
      interval_index(state.particle.center, partition);
  const double m2 =
      oracle_general_functional(centre - 1, centre + 1, state, params,
                                partition, spec, FunctionalMode::ModulusBound)
          .real();
  const double n = 2.0 * window + 1.0;
  const double omitted = n * n - n - 4.0 * window;
  r.offdiag_bound = omitted * m2;
  return r;
}

}  // namespace dhist

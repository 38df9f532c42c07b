#include "dhist/gaussian_analysis.hpp"

#include <cmath>

#include "dhist/errors.hpp"
#include "dhist/propagator.hpp"

namespace dhist {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * M_PI);

// erf(2*sqrt(2)*b) - erf(sqrt(2)*b) via erfc so the large-argument
// difference does not cancel.
double erf_tail_particle(double beta) {
  return std::erfc(std::sqrt(2.0) * beta) -
         std::erfc(2.0 * std::sqrt(2.0) * beta);
}

// erf(4*g) - erf(2*g), same trick.
double erf_tail_pointer(double gamma) {
  return std::erfc(2.0 * gamma) - std::erfc(4.0 * gamma);
}

double record_coupling(const OscillatorParams& params) {
  return coupling_g(params.f, params.omega, params.T);
}

double kernel_density(const OscillatorParams& params) {
  return k0_magnitude_sq(params.m, params.omega, params.T,
                         params.allow_caustic_branch);
}

}  // namespace

double pointer_overlap_gaussian(double dx, double g, double ell) {
  if (!(ell > 0.0)) {
    throw NonPositive("pointer halfwidth ell must be > 0");
  }
  const double e = g * dx / ell;
  return std::exp(-e * e / 8.0);
}

std::pair<double, double> particle_factors(double beta, JForm j_form) {
  const double e2 = std::exp(-2.0 * beta * beta);
  const double e8 = std::exp(-8.0 * beta * beta);
  const double tail = 2.0 * M_PI * beta * erf_tail_particle(beta);
  const double I = kSqrt2Pi * (0.5 - e2 + 0.5 * e8) + tail;
  const double j_coeff = (j_form == JForm::Appendix) ? 1.0 : 2.0;
  const double J = kSqrt2Pi * (1.0 - 2.0 * e2 + j_coeff * e8) + tail;
  return {I, J};
}

std::pair<double, double> pointer_factors(double gamma) {
  const double g2 = gamma * gamma;
  const double e4 = std::exp(-4.0 * g2);
  const double e16 = std::exp(-16.0 * g2);
  const double tail = erf_tail_pointer(gamma);
  const double F =
      0.5 * (1.0 + e16 - 2.0 * e4 + 4.0 * std::sqrt(M_PI) * gamma * tail);
  const double G =
      (1.0 + (1.0 + 4.0 * g2) * e16 - 2.0 * (1.0 + 4.0 * g2) * e4 +
       std::sqrt(M_PI) * gamma * (3.0 + 16.0 * g2) * tail) /
      3.0;
  return {F, G};
}

double prob_kernel_p0(double beta) {
  const double e2 = std::exp(-2.0 * beta * beta);
  return kSqrt2Pi * (e2 - 1.0) +
         2.0 * M_PI * beta * std::erf(std::sqrt(2.0) * beta);
}

double prob_kernel_p1(double beta) {
  // The defining integral carries one more Gaussian difference than P0;
  // its closed form is P0 - sqrt(2 pi)(1 - e^{-2 beta^2}).
  const double e2 = std::exp(-2.0 * beta * beta);
  return 2.0 * kSqrt2Pi * (e2 - 1.0) +
         2.0 * M_PI * beta * std::erf(std::sqrt(2.0) * beta);
}

ExpansionBound narrow_particle_bound(const OscillatorParams& params,
                                     const Partition& partition, double sigma,
                                     double ell,
                                     Normalization normalization) {
  if (!(sigma > 0.0) || !(ell > 0.0)) {
    throw NonPositive("narrow_particle_bound needs sigma > 0 and ell > 0");
  }
  const double k2 = kernel_density(params);
  const double g = record_coupling(params);
  const double kappa = std::abs(g) / (std::sqrt(8.0) * ell);
  const double beta = partition.width / sigma;
  const GaussianSpec particle{0.0, sigma, normalization};
  const double a2 = particle.amplitude_sq();
  const auto [I, J] = particle_factors(beta);

  ExpansionBound b;
  const double scale = k2 * a2 * sigma * sigma * sigma;
  b.leading = scale * I;
  b.condition_ratio = kappa * kappa * sigma * sigma;
  b.correction = -b.condition_ratio * scale * J;
  b.valid = b.condition_ratio < 1.0;
  return b;
}

ExpansionBound narrow_particle_probability(const OscillatorParams& params,
                                           const Partition& partition,
                                           double sigma, double ell,
                                           Normalization normalization) {
  if (!(sigma > 0.0) || !(ell > 0.0)) {
    throw NonPositive(
        "narrow_particle_probability needs sigma > 0 and ell > 0");
  }
  const double k2 = kernel_density(params);
  const double g = record_coupling(params);
  const double kappa = std::abs(g) / (std::sqrt(8.0) * ell);
  const double beta = partition.width / sigma;
  const GaussianSpec particle{0.0, sigma, normalization};
  const double a2 = particle.amplitude_sq();

  ExpansionBound b;
  const double scale = k2 * a2 * sigma * sigma * sigma;
  b.leading = scale * prob_kernel_p0(beta);
  b.condition_ratio = kappa * kappa * sigma * sigma;
  b.correction = -b.condition_ratio * scale * prob_kernel_p1(beta);
  b.valid = b.condition_ratio < 1.0;
  return b;
}

ExpansionBound narrow_pointer_bound(const OscillatorParams& params,
                                    const Partition& partition, double sigma,
                                    double ell, Normalization normalization) {
  if (!(sigma > 0.0) || !(ell > 0.0)) {
    throw NonPositive("narrow_pointer_bound needs sigma > 0 and ell > 0");
  }
  const double g = record_coupling(params);
  if (g == 0.0) {
    throw DecoupledApparatus("g = 0: pointer records nothing");
  }
  const double k2 = kernel_density(params);
  const double kappa = std::abs(g) / (std::sqrt(8.0) * ell);
  const double gamma = kappa * partition.width;
  const GaussianSpec particle{0.0, sigma, normalization};
  const double a2 = particle.amplitude_sq();
  const auto [F, G] = pointer_factors(gamma);

  ExpansionBound b;
  const double prefactor = std::sqrt(M_PI / 2.0) * k2 * a2;
  b.leading = prefactor * sigma / (kappa * kappa) * F;
  // Negative: the asymptotic bound carries (1 - 16 ell^2 / (3 g^2 sigma^2)).
  b.correction = -prefactor * G / (kappa * kappa * kappa * kappa * sigma);
  b.condition_ratio =
      16.0 * ell * ell / (3.0 * g * g * sigma * sigma);
  b.valid = b.condition_ratio < 1.0;
  return b;
}

double pointer_leading_asymptote(const OscillatorParams& params, double ell) {
  const double g = record_coupling(params);
  if (g == 0.0) {
    throw DecoupledApparatus("g = 0: pointer records nothing");
  }
  return kernel_density(params) * 4.0 * ell * ell / (g * g);
}

double narrow_pointer_probability(const OscillatorParams& params,
                                  const Partition& partition, double ell,
                                  Normalization normalization) {
  if (!(ell > 0.0)) {
    throw NonPositive("narrow_pointer_probability needs ell > 0");
  }
  const double g = record_coupling(params);
  if (g == 0.0) {
    throw DecoupledApparatus("g = 0: pointer records nothing");
  }
  const double k2 = kernel_density(params);
  if (normalization == Normalization::DeltaLimit) {
    // Written exactly as the sharp-pointer diagonal so the two agree
    // bit-for-bit.
    return (4.0 * k2 * partition.width) / g;
  }
  return (4.0 * k2 * partition.width) / g * std::sqrt(2.0 * M_PI) * ell;
}

}  // namespace dhist

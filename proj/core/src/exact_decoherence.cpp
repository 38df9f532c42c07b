#include "dhist/exact_decoherence.hpp"

#include <cmath>

#include "dhist/errors.hpp"
#include "dhist/propagator.hpp"

namespace dhist {

namespace {

FunctionalResult exact(double diagonal_value, bool diagonal) {
  FunctionalResult r;
  r.kind = FunctionalResult::Kind::ExactValue;
  r.method = FunctionalResult::Method::ClosedForm;
  r.order0 = diagonal ? diagonal_value : 0.0;
  r.order1 = 0.0;
  r.total = r.order0;
  return r;
}

}  // namespace

FunctionalResult sharp_particle_functional(std::int64_t alpha,
                                           std::int64_t alpha_prime,
                                           const OscillatorParams& params,
                                           const Partition& partition) {
  const double k2 = k0_magnitude_sq(params.m, params.omega, params.T,
                                    params.allow_caustic_branch);
  return exact(2.0 * k2 * partition.width, alpha == alpha_prime);
}

FunctionalResult sharp_pointer_functional(std::int64_t alpha,
                                          std::int64_t alpha_prime,
                                          const OscillatorParams& params,
                                          const Partition& partition) {
  const double g = coupling_g(params.f, params.omega, params.T);
  if (g == 0.0) {
    throw DecoupledApparatus(
        "g = 0: sharp-pointer probability diverges for a decoupled "
        "apparatus");
  }
  const double k2 = k0_magnitude_sq(params.m, params.omega, params.T,
                                    params.allow_caustic_branch);
  return exact((4.0 * k2 * partition.width) / g, alpha == alpha_prime);
}

FunctionalResult uncoupled_particle_functional(std::int64_t alpha,
                                               std::int64_t alpha_prime,
                                               const OscillatorParams& params,
                                               const Partition& partition) {
  return sharp_particle_functional(alpha, alpha_prime, params, partition);
}

}  // namespace dhist

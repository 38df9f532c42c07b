#pragma once

#include <cstdint>

#include "dhist/model.hpp"

namespace dhist {

// Closed-form decoherence functional for initial states that decohere
// exactly: every off-diagonal element is identically zero and the diagonal
// is a constant relative probability (the initial states are not
// normalisable, so the diagonal values sum to infinity, not one).

// Particle starts sharp at some x0, pointer in any normalised state.
// Off-diagonal: 0.  Diagonal: 2*delta*|K_0|^2 = m*omega*delta/(pi sin wT),
// independent of alpha, x0, the driving force, and the pointer shape.
FunctionalResult sharp_particle_functional(std::int64_t alpha,
                                           std::int64_t alpha_prime,
                                           const OscillatorParams& params,
                                           const Partition& partition);

// Pointer starts sharp, particle in any normalised state.  Off-diagonal: 0.
// Diagonal: (4*delta/g)*|K_0|^2 = 2*m*omega*delta/(g pi sin wT).
// Throws DecoupledApparatus when g = 0 (the probability diverges).
FunctionalResult sharp_pointer_functional(std::int64_t alpha,
                                          std::int64_t alpha_prime,
                                          const OscillatorParams& params,
                                          const Partition& partition);

// Sharp particle with the apparatus switched off entirely; the overlap
// factor is 1 and the result coincides with sharp_particle_functional.
FunctionalResult uncoupled_particle_functional(std::int64_t alpha,
                                               std::int64_t alpha_prime,
                                               const OscillatorParams& params,
                                               const Partition& partition);

}  // namespace dhist

#pragma once

#include <cmath>
#include <variant>

#include "dhist/time_function.hpp"

namespace dhist {

// Physical configuration of the measured oscillator, hbar = 1 throughout.
// f(t) is the dimensionless switching profile of the particle-pointer
// coupling, f_D(t) the external driving force.
struct OscillatorParams {
  double m = 1.0;      // particle mass
  double omega = 0.0;  // angular frequency (0 = free particle)
  double T = 1.0;      // measurement duration
  TimeFunction f;      // coupling profile, symmetric about T/2
  TimeFunction f_D;    // driving force, symmetric about T/2
  // Constant pointer displacement d.  It cancels in every quantity computed
  // here (only differences of the shift function enter), so it is accepted
  // as an override and defaults to 0.
  double pointer_shift = 0.0;
  // Effective pointer mass; eliminated by the pointer-momentum integration,
  // kept only for interface completeness.
  double pointer_mass = 1.0;
  // Permit omega*T beyond the first half period; the kernel normalisation
  // then uses |sin(omega*T)|.
  bool allow_caustic_branch = false;
};

// Equal-length decomposition of the real line into half-open intervals
// (center - width/2, center + width/2], indexed by an integer alpha with
// interval 0 centred at `origin`.
struct Partition {
  double width = 1.0;   // interval length delta
  double origin = 0.0;  // centre of interval alpha = 0
};

// Normalisation convention for a Gaussian A exp[-(x-c)^2/s^2]:
//  - L2Normalized: unit L2 norm, |A|^2 = sqrt(2/pi)/s;
//  - DeltaLimit:   tends to delta(x-c) as s -> 0, |A|^2 = 1/(pi s^2).
enum class Normalization { L2Normalized, DeltaLimit };

struct GaussianSpec {
  double center = 0.0;
  double halfwidth = 1.0;
  Normalization normalization = Normalization::L2Normalized;

  double amplitude_sq() const {
    return normalization == Normalization::L2Normalized
               ? std::sqrt(2.0 / M_PI) / halfwidth
               : 1.0 / (M_PI * halfwidth * halfwidth);
  }
};

// Particle starts in a position eigenstate at x0; the pointer may be any
// normalised state (results do not depend on its shape).
struct SharpParticle {
  double x0 = 0.0;
  GaussianSpec pointer;
};

// Pointer starts in a position eigenstate; the particle may be any
// normalised state.
struct SharpPointer {
  GaussianSpec particle;
};

// Gaussian (x) Gaussian product state.
struct ProductState {
  GaussianSpec particle;
  GaussianSpec pointer;
};

using InitialState = std::variant<SharpParticle, SharpPointer, ProductState>;

// Coupling/driving constants of the reduced propagator plus the
// dimensionless groups of the Gaussian analysis.  Groups that need a width
// the state does not provide are NaN.
struct DerivedConstants {
  double B = 0.0;    // 2 * integral of f(t) sin(omega t)
  double g = 0.0;    // B / (T sin(omega T)), the record-coupling strength
  double A_D = 0.0;  // double driving integral
  double B_D = 0.0;  // 2 * integral of f_D(t) sin(omega t)
  double d = 0.0;    // constant pointer displacement (pass-through)
  double kappa = std::nan("");   // |g| / (sqrt(8) * ell)
  double beta = std::nan("");    // delta / sigma
  double gamma = std::nan("");   // kappa * delta
  double lambda = std::nan("");  // kappa * sigma
};

// Value or bound of the decoherence functional with order-by-order terms.
struct FunctionalResult {
  enum class Kind { ExactValue, UpperBound };
  enum class Method { ClosedForm, Oracle };
  Kind kind = Kind::ExactValue;
  double order0 = 0.0;
  double order1 = 0.0;
  double total = 0.0;
  Method method = Method::ClosedForm;
  double estimated_error = 0.0;
};

struct Configuration {
  OscillatorParams params;
  Partition partition;
  InitialState state;
};

// Exclusion half-band around multiples of pi for omega*T: inside it the
// 1/sin(omega*T) prefactor destroys all downstream accuracy.
inline constexpr double kSingularBand = 1e-6;

// Below this value of omega*T the free-particle limit forms are used
// (relative error of the retained series is O((omega*T)^2) ~ 1e-8).
inline constexpr double kSmallPhaseThreshold = 1e-4;

// Checks every type invariant (positivity, profile symmetry about T/2,
// distance of omega*T from multiples of pi) and returns the configuration
// unchanged.  Throws NonPositive, AsymmetricFunction, or SingularPropagator.
Configuration validate(const Configuration& config);

// Convenience overload.
Configuration validate(const OscillatorParams& params,
                       const Partition& partition, const InitialState& state);

// Computes B, g, A_D, B_D and the dimensionless groups for a validated
// configuration.  kappa/gamma/lambda need the pointer width, beta/lambda the
// particle width; missing ones stay NaN.
DerivedConstants dimensionless_groups(const OscillatorParams& params,
                                      const Partition& partition,
                                      const InitialState& state);

}  // namespace dhist

#pragma once

#include <complex>
#include <cstdint>

#include "dhist/model.hpp"
#include "dhist/quadrature.hpp"

namespace dhist {

// Brute-force evaluation of every defining integral, sharing no code paths
// with the closed forms it checks: special functions enter only through the
// integrands, never through evaluated antiderivatives.

enum class FactorKind { I, J, F, G, P0, P1 };

struct ErfProductResult {
  double numeric;
  double closed;
};

// Product-of-error-functions identity: numeric side is the adaptive
// quadrature of int [erf(a+x) erf(b-x) + 1] dx over a tail-cut window,
// closed side is 2(a+b) erf((a+b)/sqrt(2)) + 2 sqrt(2/pi) e^{-(a+b)^2/2}.
ErfProductResult erf_product_integral(double a, double b,
                                      const QuadratureSpec& spec = {});

// Nested quadrature of the defining integral of a dimensionless factor.
//   I, J, P0, P1: triple integrals over (w, z'', z') with Gaussian weights
//   and interval windows of half-width beta; the w integral is truncated at
//   spec.tail_cut.
//   F, G: the w-independent double integral over (z'', z'); evaluated at
//   w = 0 and re-checked at w = +-1 (QuadratureFailure on mismatch).  The
//   defining G kernel is the negative of the published closed form; the
//   sign-flipped kernel is integrated so both routes report the magnitude
//   that enters the bound.
double oracle_factor(FactorKind kind, double arg,
                     const QuadratureSpec& spec = {});

enum class FunctionalMode {
  // Integral of |integrand|: the upper bound the closed-form analysis works
  // with.  Returned in the real part.
  ModulusBound,
  // Full complex integrand, using the standard quadratic-potential kernel
  // phase.  Needed for the sum rule, where off-diagonal phases matter.
  Complex
};

// Triple quadrature over (x', x'', x) of the decoherence functional for a
// Gaussian (x) Gaussian product state: kernel density, phase factors (in
// Complex mode), Gaussian amplitudes, interval indicators, and the pointer
// overlap.  x'/x'' windows truncate at spec.tail_cut particle widths.
std::complex<double> oracle_general_functional(
    std::int64_t alpha, std::int64_t alpha_prime, const ProductState& state,
    const OscillatorParams& params, const Partition& partition,
    const QuadratureSpec& spec = {},
    FunctionalMode mode = FunctionalMode::ModulusBound);

struct SumRuleResult {
  double partial_sum;      // sum of D over the truncated index window
  double target;           // squared norm of the initial state (1 for L2)
  double offdiag_bound;    // modulus bound on all omitted |a - a'| >= 2 terms
  double max_imag_residue; // largest |Im| seen on the diagonal
};

// Truncated double sum of the functional over alpha, alpha' in [-N, N]:
// diagonal and first off-diagonal terms evaluated in Complex mode, farther
// pairs bounded in modulus and reported as an error bar.  For an
// L2-normalised product state the sum must approach 1.
SumRuleResult sum_rule_check(const ProductState& state,
                             const OscillatorParams& params,
                             const Partition& partition, int window,
                             const QuadratureSpec& spec = {});

}  // namespace dhist

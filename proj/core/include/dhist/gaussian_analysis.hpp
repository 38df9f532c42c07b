#pragma once

#include <utility>

#include "dhist/model.hpp"

namespace dhist {

// Two-term expansion of a bound (or probability).  `valid` only flags
// whether the smallness condition behind the expansion holds; values are
// reported either way so sweeps produce continuous curves.
struct ExpansionBound {
  double leading = 0.0;     // nonnegative lowest-order term
  double correction = 0.0;  // signed next-order term
  bool valid = false;
  double condition_ratio = 0.0;  // the expansion parameter

  double total() const { return leading + correction; }
};

// Which closed form to use for the second narrow-particle factor.  The two
// published variants disagree in the e^{-8 beta^2} coefficient; only
// Appendix matches the defining integral (MainText gives a nonzero value at
// beta = 0 where the integral vanishes).  MainText is kept selectable so
// the discrepancy can be demonstrated.
enum class JForm { Appendix, MainText };

// Overlap of the initial Gaussian pointer with its shifted copy:
// exp[-g^2 dx^2 / (8 ell^2)].
double pointer_overlap_gaussian(double dx, double g, double ell);

// Narrow-particle dimensionless factors (I, J) as functions of
// beta = delta/sigma.  I weights the leading bound term, J the first
// overlap correction.
std::pair<double, double> particle_factors(double beta,
                                           JForm j_form = JForm::Appendix);

// Narrow-pointer dimensionless factors (F, G) as functions of
// gamma = kappa*delta.  Asymptotes: F -> 1/2, G -> 1/3.
std::pair<double, double> pointer_factors(double gamma);

// Diagonal (probability) kernels for the narrow-particle case:
// P0 weights the leading term, P1 the first overlap correction.
double prob_kernel_p0(double beta);
double prob_kernel_p1(double beta);

// |D(c_a, c_{a+1})| <= |K0|^2 |A|^2 sigma^3 (I - kappa^2 sigma^2 J) for a
// particle Gaussian of halfwidth sigma and pointer halfwidth ell.
// condition_ratio = kappa^2 sigma^2.
ExpansionBound narrow_particle_bound(const OscillatorParams& params,
                                     const Partition& partition, double sigma,
                                     double ell, Normalization normalization);

// p_a <~ |K0|^2 |A|^2 sigma^3 (P0 - kappa^2 sigma^2 P1), same regime.
ExpansionBound narrow_particle_probability(
    const OscillatorParams& params, const Partition& partition, double sigma,
    double ell,
    Normalization normalization = Normalization::L2Normalized);

// |D(c_a, c_{a+1})| <= sqrt(pi/2) |K0|^2 |A|^2 [ (sigma/kappa^2) F -
// (1/(kappa^4 sigma)) G ] for a narrow pointer.  condition_ratio =
// 16 ell^2 / (3 g^2 sigma^2).  `normalization` refers to the particle
// Gaussian.  Throws DecoupledApparatus when g = 0.
ExpansionBound narrow_pointer_bound(const OscillatorParams& params,
                                    const Partition& partition, double sigma,
                                    double ell, Normalization normalization);

// Large-gamma limit of the leading narrow-pointer term for an L2 particle:
// 2 m omega ell^2 / (pi g^2 sin(omega T)) = |K0|^2 * 4 ell^2 / g^2.
double pointer_leading_asymptote(const OscillatorParams& params, double ell);

// Narrow-pointer probability bound, step-function regime (gamma >> 1).
// L2Normalized pointer: (4/g)|K0|^2 sqrt(2 pi) ell delta; DeltaLimit
// pointer: (4/g)|K0|^2 delta, which is the sharp-pointer value exactly.
// `normalization` refers to the pointer Gaussian.
double narrow_pointer_probability(const OscillatorParams& params,
                                  const Partition& partition, double ell,
                                  Normalization normalization);

}  // namespace dhist

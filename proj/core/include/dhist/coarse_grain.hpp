#pragma once

#include <cstdint>

#include "dhist/model.hpp"

namespace dhist {

struct IntervalBounds {
  double low;   // exclusive
  double high;  // inclusive
};

// Bounds of interval alpha: (origin + alpha*width - width/2,
// origin + alpha*width + width/2].
IntervalBounds interval_bounds(std::int64_t alpha, const Partition& p);

// Top-hat membership: 1 iff low < xbar <= high.  The half-open convention
// makes the pairwise product vanish identically for distinct intervals,
// which is what drives exact decoherence.
bool indicator(double xbar, std::int64_t alpha, const Partition& p);

// The unique alpha whose interval contains xbar.  Rounding plus a one-step
// correction against the indicator, so representable boundary points land
// in the lower interval exactly as the half-open rule demands.
std::int64_t interval_index(double xbar, const Partition& p);

}  // namespace dhist

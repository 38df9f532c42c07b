#include "dhist/coarse_grain.hpp"

#include <cmath>

namespace dhist {

IntervalBounds interval_bounds(std::int64_t alpha, const Partition& p) {
  const double low =
      p.origin + static_cast<double>(alpha) * p.width - p.width / 2.0;
  return {low, low + p.width};
}

bool indicator(double xbar, std::int64_t alpha, const Partition& p) {
  const IntervalBounds b = interval_bounds(alpha, p);
  return b.low < xbar && xbar <= b.high;
}

std::int64_t interval_index(double xbar, const Partition& p) {
  auto alpha = static_cast<std::int64_t>(
      std::llround((xbar - p.origin) / p.width));
  // Rounding can land one off at representable boundaries; the indicator is
  // the source of truth.
  if (!indicator(xbar, alpha, p)) {
    if (indicator(xbar, alpha - 1, p)) {
      alpha -= 1;
    } else if (indicator(xbar, alpha + 1, p)) {
      alpha += 1;
    }
  }
  return alpha;
}

}  // namespace dhist

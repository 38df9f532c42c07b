#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "dhist/errors.hpp"

namespace dhist {

// Tolerances and budget for adaptive integration.  One struct is threaded
// through every numerical routine so nested integrals stay consistent.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  int max_depth = 40;
  // Half-width, in units of the relevant Gaussian width, at which infinite
  // integrals are truncated.  exp(-tail_cut^2) ~ 1.6e-28 at the default.
  double tail_cut = 8.0;

  void check() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
      throw NonPositive("quadrature tolerances must be > 0");
    }
    if (max_depth < 2) {
      throw ConfigError("quadrature max_depth must be >= 2");
    }
    if (!(tail_cut > 0.0)) {
      throw NonPositive("quadrature tail_cut must be > 0");
    }
  }

  // Convenience: same budget, tighter tolerances, for inner integrals of a
  // nested evaluation.
  QuadratureSpec tightened(double factor = 0.1) const {
    QuadratureSpec s = *this;
    s.rel_tol *= factor;
    s.abs_tol *= factor;
    return s;
  }
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (positive half).
// Even-indexed Kronrod nodes are the extension points, odd-indexed ones plus
// the centre carry the embedded 7-point Gauss rule.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T, class F>
struct Panel {
  double a, b;
  double err;
  T value;
  int depth;
};

template <class F>
auto gk15(F& f, double a, double b) {
  using T = std::decay_t<decltype(f(a))>;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T gauss{};
  T kronrod{};
  {
    const T fc = f(c);
    kronrod = fc * kGK15WeightsK[7];
    gauss = fc * kGK15WeightsG[3];
  }
  for (int i = 0; i < 7; ++i) {
    const double x = h * kGK15Nodes[i];
    const T sum = f(c - x) + f(c + x);
    kronrod += sum * kGK15WeightsK[i];
    if (i % 2 == 1) {
      gauss += sum * kGK15WeightsG[i / 2];
    }
  }
  kronrod *= h;
  gauss *= h;
  return std::pair<T, double>(kronrod, std::abs(kronrod - gauss));
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b].  Works for
// real or complex integrands.  Bisects the panel with the largest error
// estimate until the summed estimate meets max(abs_tol, rel_tol * |I|), and
// throws QuadratureFailure when the depth or panel budget runs out first.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  using T = std::decay_t<decltype(f(a))>;
  spec.check();
  if (a == b) {
    return T{};
  }
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  struct Panel {
    double a, b, err;
    T value;
    int depth;
  };
  auto worse = [](const Panel& p, const Panel& q) { return p.err < q.err; };

  std::vector<Panel> heap;
  auto [v0, e0] = detail::gk15(f, a, b);
  heap.push_back(Panel{a, b, e0, v0, 0});
  T total = v0;
  double total_err = e0;

  const std::size_t max_panels = 1u << 17;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    Panel p = heap.back();
    heap.pop_back();
    if (p.depth >= spec.max_depth || heap.size() + 2 > max_panels) {
      throw QuadratureFailure("adaptive integration did not converge");
    }
    const double m = 0.5 * (p.a + p.b);
    auto [v1, e1] = detail::gk15(f, p.a, m);
    auto [v2, e2] = detail::gk15(f, m, p.b);
    total += (v1 + v2) - p.value;
    total_err += (e1 + e2) - p.err;
    heap.push_back(Panel{p.a, m, e1, v1, p.depth + 1});
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(Panel{m, p.b, e2, v2, p.depth + 1});
    std::push_heap(heap.begin(), heap.end(), worse);
  }
  return T(sign * total);
}

}  // namespace dhist

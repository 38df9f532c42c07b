#include <cmath>

#include <doctest.h>

#include "dhist/errors.hpp"
#include "dhist/exact_decoherence.hpp"

using namespace dhist;

namespace {

OscillatorParams base_params() {
  OscillatorParams p;
  p.m = 1.0;
  p.omega = 1.0;
  p.T = M_PI / 2.0;
  p.f = TimeFunction::constant(1.0);
  return p;
}

}  // namespace

TEST_CASE("sharp particle: zero off-diagonal, constant diagonal") {
  const auto p = base_params();
  const Partition part{1.0, 0.0};
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      const auto r = sharp_particle_functional(a, b, p, part);
      if (a == b) {
        // 2 delta |K0|^2 = m omega delta / (pi sin wT) = 1/pi here
        CHECK(r.total == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
        CHECK(r.kind == FunctionalResult::Kind::ExactValue);
      } else {
        CHECK(r.total == 0.0);
      }
    }
  }
}

TEST_CASE("sharp pointer: diagonal carries 2/g relative to sharp particle") {
  const auto p = base_params();  // g = 4/pi
  const Partition part{1.0, 0.0};
  const auto r = sharp_pointer_functional(2, 2, p, part);
  // (4 delta / g) |K0|^2 = (4 / (4/pi)) * (1/(2 pi)) = 1/2
  CHECK(r.total == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sharp_pointer_functional(1, 2, p, part).total == 0.0);
}

TEST_CASE("sharp pointer with no coupling throws DecoupledApparatus") {
  auto p = base_params();
  p.f = TimeFunction::zero();
  CHECK_THROWS_AS(sharp_pointer_functional(0, 0, p, Partition{1.0, 0.0}),
                  DecoupledApparatus);
}

TEST_CASE("diagonals are independent of the driving force") {
  auto p = base_params();
  const Partition part{0.3, 0.0};
  const double undriven = sharp_particle_functional(0, 0, p, part).total;
  p.f_D = TimeFunction::constant(5.0);
  p.pointer_shift = 2.0;
  const double driven = sharp_particle_functional(0, 0, p, part).total;
  CHECK(driven == doctest::Approx(undriven).epsilon(1e-12));
}

TEST_CASE("uncoupled particle coincides with the sharp-particle result") {
  auto p = base_params();
  p.f = TimeFunction::zero();
  const Partition part{1.0, 0.0};
  const auto r = uncoupled_particle_functional(0, 0, p, part);
  CHECK(r.total == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK(uncoupled_particle_functional(0, 3, p, part).total == 0.0);
}

TEST_CASE("diagonal scales linearly with the interval width") {
  const auto p = base_params();
  const double d1 = sharp_particle_functional(0, 0, p, Partition{0.4, 0.0}).total;
  const double d2 = sharp_particle_functional(0, 0, p, Partition{0.8, 0.0}).total;
  CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-12));
}

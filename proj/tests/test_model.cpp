#include <cmath>

#include <doctest.h>

#include "dhist/errors.hpp"
#include "dhist/model.hpp"

using namespace dhist;

namespace {

Configuration canonical() {
  OscillatorParams p;
  p.m = 1.0;
  p.omega = 1.0;
  p.T = M_PI / 2.0;
  p.f = TimeFunction::constant(1.0);
  p.f_D = TimeFunction::zero();
  Partition part{1.0, 0.0};
  ProductState state{GaussianSpec{0.0, 0.2, Normalization::L2Normalized},
                     GaussianSpec{0.0, 0.1, Normalization::L2Normalized}};
  return Configuration{p, part, state};
}

}  // namespace

TEST_CASE("a well-posed configuration validates and is returned unchanged") {
  const auto c = canonical();
  const auto v = validate(c);
  CHECK(v.params.m == c.params.m);
  CHECK(v.partition.width == c.partition.width);
  // validating twice is harmless
  CHECK_NOTHROW(validate(v));
}

TEST_CASE("positivity violations throw NonPositive") {
  auto c = canonical();
  c.params.m = 0.0;
  CHECK_THROWS_AS(validate(c), NonPositive);
  c = canonical();
  c.params.T = -1.0;
  CHECK_THROWS_AS(validate(c), NonPositive);
  c = canonical();
  c.partition.width = 0.0;
  CHECK_THROWS_AS(validate(c), NonPositive);
  c = canonical();
  c.params.omega = -1.0;
  CHECK_THROWS_AS(validate(c), NonPositive);
  c = canonical();
  std::get<ProductState>(c.state).particle.halfwidth = -0.5;
  CHECK_THROWS_AS(validate(c), NonPositive);
}

TEST_CASE("omega*T at a multiple of pi is rejected") {
  auto c = canonical();
  c.params.T = M_PI;  // omega*T = pi
  CHECK_THROWS_AS(validate(c), SingularPropagator);
  c.params.T = 2.0 * M_PI + 2e-7;  // inside the exclusion band of 2*pi
  c.params.allow_caustic_branch = true;
  CHECK_THROWS_AS(validate(c), SingularPropagator);
}

TEST_CASE("profiles asymmetric about T/2 are rejected") {
  auto c = canonical();
  c.params.f = TimeFunction::custom([](double t) { return t; });
  CHECK_THROWS_AS(validate(c), AsymmetricFunction);
  c = canonical();
  c.params.f_D = TimeFunction::custom([](double t) { return t * t; });
  CHECK_THROWS_AS(validate(c), AsymmetricFunction);
  // symmetric custom profile is fine
  c = canonical();
  const double T = c.params.T;
  c.params.f = TimeFunction::custom(
      [T](double t) { return (t - T / 2.0) * (t - T / 2.0); });
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("dimensionless groups take their textbook values") {
  auto c = canonical();
  auto& state = std::get<ProductState>(c.state);
  state.particle.halfwidth = 0.5;
  state.pointer.halfwidth = 0.1;
  const auto d = dimensionless_groups(c.params, c.partition, c.state);

  // f = 1, omega = 1, T = pi/2: B = 2, g = B/(T sin T) = 4/pi.
  CHECK(d.B == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(d.g == doctest::Approx(4.0 / M_PI).epsilon(1e-12));
  CHECK(d.beta == doctest::Approx(1.0 / 0.5).epsilon(1e-12));
  const double kappa = (4.0 / M_PI) / (std::sqrt(8.0) * 0.1);
  CHECK(d.kappa == doctest::Approx(kappa).epsilon(1e-12));
  CHECK(d.gamma == doctest::Approx(kappa * 1.0).epsilon(1e-12));
  CHECK(d.lambda == doctest::Approx(kappa * 0.5).epsilon(1e-12));
  // internal consistency: gamma / lambda = beta
  CHECK(d.gamma / d.lambda == doctest::Approx(d.beta).epsilon(1e-12));
}

TEST_CASE("groups missing a width come back NaN") {
  auto c = canonical();
  c.state = SharpParticle{0.3, GaussianSpec{0.0, 0.1}};
  const auto d = dimensionless_groups(c.params, c.partition, c.state);
  CHECK(std::isnan(d.beta));
  CHECK_FALSE(std::isnan(d.kappa));

  c.state = SharpPointer{GaussianSpec{0.0, 0.25}};
  const auto e = dimensionless_groups(c.params, c.partition, c.state);
  CHECK(std::isnan(e.kappa));
  CHECK(e.beta == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("groups are invariant under a uniform rescaling of lengths") {
  auto c = canonical();
  const auto d1 = dimensionless_groups(c.params, c.partition, c.state);

  const double lam = 2.0;
  auto scaled = c;
  scaled.partition.width *= lam;
  auto& st = std::get<ProductState>(scaled.state);
  st.particle.halfwidth *= lam;
  st.pointer.halfwidth *= lam;
  const auto d2 =
      dimensionless_groups(scaled.params, scaled.partition, scaled.state);

  CHECK(d2.beta == doctest::Approx(d1.beta).epsilon(1e-12));
  CHECK(d2.gamma == doctest::Approx(d1.gamma).epsilon(1e-12));
  CHECK(d2.lambda == doctest::Approx(d1.lambda).epsilon(1e-12));
}

TEST_CASE("gaussian amplitudes follow the chosen normalisation") {
  GaussianSpec g{0.0, 0.5, Normalization::L2Normalized};
  CHECK(g.amplitude_sq() ==
        doctest::Approx(std::sqrt(2.0 / M_PI) / 0.5).epsilon(1e-15));
  g.normalization = Normalization::DeltaLimit;
  CHECK(g.amplitude_sq() == doctest::Approx(1.0 / (M_PI * 0.25)).epsilon(1e-15));
}

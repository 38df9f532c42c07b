#include <cmath>
#include <complex>

#include <doctest.h>

#include "dhist/errors.hpp"
#include "dhist/quadrature.hpp"

using namespace dhist;

TEST_CASE("integrates smooth real integrands to tight tolerance") {
  QuadratureSpec q{1e-12, 1e-14, 40, 8.0};
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, q) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return x * x; }, 1.0, 3.0, q) ==
        doctest::Approx(26.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, q) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("handles reversed and empty ranges") {
  QuadratureSpec q;
  CHECK(integrate([](double x) { return x; }, 1.0, 1.0, q) == 0.0);
  CHECK(integrate([](double x) { return std::sin(x); }, M_PI, 0.0, q) ==
        doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("complex integrands work through the same entry point") {
  QuadratureSpec q{1e-12, 1e-14, 40, 8.0};
  const auto v = integrate(
      [](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0,
      M_PI / 2.0, q);
  CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("throws QuadratureFailure when the budget is too small") {
  QuadratureSpec q{1e-12, 1e-16, 4, 8.0};
  CHECK_THROWS_AS(
      integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0, q),
      QuadratureFailure);
}

TEST_CASE("rejects invalid tolerance settings") {
  QuadratureSpec q;
  q.rel_tol = 0.0;
  CHECK_THROWS_AS(q.check(), NonPositive);
  q = QuadratureSpec{};
  q.max_depth = 1;
  CHECK_THROWS_AS(q.check(), ConfigError);
  q = QuadratureSpec{};
  q.tail_cut = -1.0;
  CHECK_THROWS_AS(q.check(), NonPositive);
}

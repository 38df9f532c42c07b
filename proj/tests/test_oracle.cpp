#include <cmath>
#include <complex>

#include <doctest.h>

#include "dhist/gaussian_analysis.hpp"
#include "dhist/oracle.hpp"

using namespace dhist;

namespace {

OscillatorParams base_params() {
  OscillatorParams p;
  p.m = 1.0;
  p.omega = 1.0;
  p.T = M_PI / 2.0;
  p.f = TimeFunction::constant(1.0);  // g = 4/pi
  return p;
}

const QuadratureSpec kSpec{1e-8, 1e-12, 40, 8.0};

}  // namespace

TEST_CASE("erf product identity holds numerically") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{1.0, -1.0},
                      std::pair{2.3, 0.7}, std::pair{-1.5, 2.9}}) {
    const auto r = erf_product_integral(a, b, kSpec);
    CHECK(std::abs(r.numeric - r.closed) < 1e-9);
  }
}

TEST_CASE("all factors vanish at argument zero") {
  for (auto k : {FactorKind::I, FactorKind::J, FactorKind::F, FactorKind::G,
                 FactorKind::P0, FactorKind::P1}) {
    CHECK(oracle_factor(k, 0.0, kSpec) == 0.0);
  }
}

TEST_CASE("quadrature factors match the closed forms") {
  const double beta = 1.0, gamma = 1.0;
  const auto [I, J] = particle_factors(beta);
  const auto [F, G] = pointer_factors(gamma);
  CHECK(std::abs(oracle_factor(FactorKind::I, beta, kSpec) - I) < 1e-7);
  CHECK(std::abs(oracle_factor(FactorKind::J, beta, kSpec) - J) < 1e-7);
  CHECK(std::abs(oracle_factor(FactorKind::F, gamma, kSpec) - F) < 1e-7);
  CHECK(std::abs(oracle_factor(FactorKind::G, gamma, kSpec) - G) < 1e-7);
  CHECK(std::abs(oracle_factor(FactorKind::P0, beta, kSpec) -
                 prob_kernel_p0(beta)) < 1e-7);
  CHECK(std::abs(oracle_factor(FactorKind::P1, beta, kSpec) -
                 prob_kernel_p1(beta)) < 1e-7);
}

TEST_CASE("refinement changes the answer by less than the old tolerance") {
  QuadratureSpec coarse = kSpec;
  coarse.rel_tol = 1e-6;
  QuadratureSpec fine = coarse;
  fine.rel_tol = 5e-7;
  const double v0 = oracle_factor(FactorKind::I, 1.0, coarse);
  const double v1 = oracle_factor(FactorKind::I, 1.0, fine);
  CHECK(std::abs(v1 - v0) < coarse.rel_tol * std::abs(v0));
}

TEST_CASE("uncoupled diagonal reproduces the closed probability kernel") {
  auto p = base_params();
  p.f = TimeFunction::zero();  // overlap factor is 1
  const Partition part{1.0, 0.0};
  const double sigma = 0.3;
  const ProductState state{GaussianSpec{0.0, sigma},
                           GaussianSpec{0.0, 0.1}};
  const auto v = oracle_general_functional(0, 0, state, p, part, kSpec,
                                           FunctionalMode::ModulusBound);
  const double k2 = 1.0 / (2.0 * M_PI);
  const double a2 = std::sqrt(2.0 / M_PI) / sigma;
  const double expected =
      k2 * a2 * sigma * sigma * sigma * prob_kernel_p0(part.width / sigma);
  CHECK(v.real() == doctest::Approx(expected).epsilon(1e-6));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("complex functional is hermitian") {
  const auto p = base_params();
  const Partition part{1.0, 0.0};
  const ProductState state{GaussianSpec{0.2, 0.3}, GaussianSpec{0.0, 0.15}};
  QuadratureSpec spec = kSpec;
  spec.rel_tol = 1e-6;
  const auto d01 = oracle_general_functional(0, 1, state, p, part, spec,
                                             FunctionalMode::Complex);
  const auto d10 = oracle_general_functional(1, 0, state, p, part, spec,
                                             FunctionalMode::Complex);
  CHECK(std::abs(d01 - std::conj(d10)) <
        1e-5 * std::max(1.0, std::abs(d01)));
  const auto diag = oracle_general_functional(0, 0, state, p, part, spec,
                                              FunctionalMode::Complex);
  CHECK(std::abs(diag.imag()) < 1e-8 * std::max(1.0, diag.real()));
}

TEST_CASE("modulus bound dominates the complex value") {
  const auto p = base_params();
  const Partition part{1.0, 0.0};
  const ProductState state{GaussianSpec{0.0, 0.3}, GaussianSpec{0.0, 0.15}};
  QuadratureSpec spec = kSpec;
  spec.rel_tol = 1e-6;
  const auto mod = oracle_general_functional(0, 1, state, p, part, spec,
                                             FunctionalMode::ModulusBound);
  const auto cx = oracle_general_functional(0, 1, state, p, part, spec,
                                            FunctionalMode::Complex);
  CHECK(std::abs(cx) <= mod.real() * (1.0 + 1e-6) + spec.abs_tol);
}

TEST_CASE("near-diagonal modulus stays below the closed-form bound") {
  const auto p = base_params();
  const Partition part{1.0, 0.0};
  const double sigma = 0.25, ell = 0.4;  // weak overlap suppression
  const ProductState state{GaussianSpec{0.0, sigma}, GaussianSpec{0.0, ell}};
  const auto mod = oracle_general_functional(0, 1, state, p, part, kSpec,
                                             FunctionalMode::ModulusBound);
  const auto bound = narrow_particle_bound(p, part, sigma, ell,
                                           Normalization::L2Normalized);
  CHECK(mod.real() <= bound.leading * (1.0 + 1e-6));
}

TEST_CASE("sum rule pieces are sane on a small window") {
  OscillatorParams p = base_params();
  p.m = 4.0;
  const Partition part{1.0, 0.0};
  const ProductState state{GaussianSpec{0.0, 0.2}, GaussianSpec{0.0, 0.1}};
  QuadratureSpec spec{1e-6, 1e-9, 40, 8.0};
  const auto r = sum_rule_check(state, p, part, 1, spec);
  CHECK(r.target == 1.0);
  CHECK(r.partial_sum > 0.85);
  CHECK(r.partial_sum < 1.01);
  CHECK(r.offdiag_bound < 0.05);
  CHECK(r.max_imag_residue < 1e-8);
}

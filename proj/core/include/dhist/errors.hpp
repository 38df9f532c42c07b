#pragma once

#include <stdexcept>
#include <string>

namespace dhist {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// omega*T sits within the exclusion band of a multiple of pi, where the
// oscillator kernel prefactor 1/sin(omega*T) blows up.
class SingularPropagator : public Error {
 public:
  using Error::Error;
};

// A time profile that must satisfy f(t) = f(T - t) does not.
class AsymmetricFunction : public Error {
 public:
  using Error::Error;
};

// A parameter that must be strictly positive (mass, duration, widths, ...)
// is zero or negative.
class NonPositive : public Error {
 public:
  using Error::Error;
};

// Effective record-coupling strength g vanishes: the apparatus stores no
// record and per-record quantities are undefined.
class DecoupledApparatus : public Error {
 public:
  using Error::Error;
};

// Adaptive integration could not reach the requested tolerance within the
// allowed refinement budget.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

// A quantity that must be a positive density came out negative, e.g. the
// kernel normalisation past a half period without the caustic branch enabled.
class NegativeDensity : public Error {
 public:
  using Error::Error;
};

// Malformed configuration input (file, key, or command line value).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dhist

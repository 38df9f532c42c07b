#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dhist {

// Scalar profile on [0, T]: switching function f(t) or drive f_D(t).
// Built-in shapes cover the common cases; Table interpolates a sampled
// profile and Custom wraps an arbitrary callable.
class TimeFunction {
 public:
  enum class Kind { Zero, Constant, SineWindow, Table, Custom };

  TimeFunction() = default;

  static TimeFunction zero();
  static TimeFunction constant(double value);
  // amplitude * sin(pi t / duration): smooth on/off, symmetric about T/2.
  static TimeFunction sine_window(double amplitude, double duration);
  // Samples (t, value), strictly increasing in t; evaluation interpolates
  // linearly and clamps outside the sampled range.
  static TimeFunction table(std::vector<std::array<double, 2>> samples);
  static TimeFunction custom(std::function<double(double)> fn);

  // Parses a profile description as used in config files and on the command
  // line: "zero", "const", "const:<value>", "sine-window",
  // "sine-window:<amplitude>", "table:<csv path>".  Throws ConfigError.
  static TimeFunction from_name(std::string_view name, double duration);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  // True only for shapes that are zero by construction.
  bool is_identically_zero() const {
    return kind_ == Kind::Zero || (kind_ == Kind::Constant && value_ == 0.0);
  }

 private:
  Kind kind_ = Kind::Zero;
  double value_ = 0.0;
  double duration_ = 0.0;
  std::vector<std::array<double, 2>> samples_;
  std::function<double(double)> fn_;
};

}  // namespace dhist

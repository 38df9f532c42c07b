#include "dhist/time_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dhist/errors.hpp"

namespace dhist {

TimeFunction TimeFunction::zero() { return TimeFunction(); }

TimeFunction TimeFunction::constant(double value) {
  TimeFunction f;
  f.kind_ = Kind::Constant;
  f.value_ = value;
  return f;
}

TimeFunction TimeFunction::sine_window(double amplitude, double duration) {
  if (!(duration > 0.0)) {
    throw NonPositive("sine-window duration must be > 0");
  }
  TimeFunction f;
  f.kind_ = Kind::SineWindow;
  f.value_ = amplitude;
  f.duration_ = duration;
  return f;
}

TimeFunction TimeFunction::table(std::vector<std::array<double, 2>> samples) {
  if (samples.size() < 2) {
    throw ConfigError("table profile needs at least two samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i][0] > samples[i - 1][0])) {
      throw ConfigError("table profile times must be strictly increasing");
    }
  }
  TimeFunction f;
  f.kind_ = Kind::Table;
  f.samples_ = std::move(samples);
  return f;
}

TimeFunction TimeFunction::custom(std::function<double(double)> fn) {
  if (!fn) {
    throw ConfigError("custom profile callable is empty");
  }
  TimeFunction f;
  f.kind_ = Kind::Custom;
  f.fn_ = std::move(fn);
  return f;
}

namespace {

double parse_number(std::string_view text, const char* what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw ConfigError(std::string("bad numeric value for ") + what + ": '" +
                      s + "'");
  }
  return v;
}

std::vector<std::array<double, 2>> load_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open table file: " + path);
  }
  std::vector<std::array<double, 2>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double t = 0.0, v = 0.0;
    if (ls >> t >> v) {
      rows.push_back({t, v});
    } else if (!line.empty() &&
               line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ConfigError("bad table row in " + path + ": '" + line + "'");
    }
  }
  return rows;
}

}  // namespace

TimeFunction TimeFunction::from_name(std::string_view name, double duration) {
  std::string_view head = name;
  std::string_view arg;
  if (const auto colon = name.find(':'); colon != std::string_view::npos) {
    head = name.substr(0, colon);
    arg = name.substr(colon + 1);
  }
  if (head == "zero") {
    return zero();
  }
  if (head == "const") {
    return constant(arg.empty() ? 1.0 : parse_number(arg, "const profile"));
  }
  if (head == "sine-window") {
    return sine_window(
        arg.empty() ? 1.0 : parse_number(arg, "sine-window profile"),
        duration);
  }
  if (head == "table") {
    if (arg.empty()) {
      throw ConfigError("table profile needs a file path: table:<path>");
    }
    return table(load_table_csv(std::string(arg)));
  }
  throw ConfigError("unknown time profile: '" + std::string(name) + "'");
}

double TimeFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return value_;
    case Kind::SineWindow:
      return value_ * std::sin(M_PI * t / duration_);
    case Kind::Table: {
      if (t <= samples_.front()[0]) return samples_.front()[1];
      if (t >= samples_.back()[0]) return samples_.back()[1];
      const auto it = std::upper_bound(
          samples_.begin(), samples_.end(), t,
          [](double x, const std::array<double, 2>& s) { return x < s[0]; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = (t - lo[0]) / (hi[0] - lo[0]);
      return lo[1] + w * (hi[1] - lo[1]);
    }
    case Kind::Custom:
      return fn_(t);
  }
  return 0.0;
}

}  // namespace dhist

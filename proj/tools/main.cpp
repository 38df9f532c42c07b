// Command line front end: closed-form parameter sweeps, verification of the
// closed forms against the quadrature oracle, and probability tables, all
// emitted as CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "dhist/coarse_grain.hpp"
#include "dhist/errors.hpp"
#include "dhist/exact_decoherence.hpp"
#include "dhist/gaussian_analysis.hpp"
#include "dhist/model.hpp"
#include "dhist/oracle.hpp"
#include "dhist/propagator.hpp"

namespace {

using namespace dhist;
using dhist::tools::load_config;
using dhist::tools::parse_bool;
using dhist::tools::parse_double;
using dhist::tools::parse_long;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitNumeric = 3;

// 17 significant digits: doubles round-trip losslessly.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Physical/state options shared by `verify` and `prob`.  The defaults
// describe the canonical verification setup: unit-width intervals, a
// quarter-period measurement, and a normalised Gaussian pair with
// sigma = delta/5.
struct PhysicsOpts {
  double m = 4.0;
  double omega = 1.0;
  double T = M_PI / 2.0;
  double delta = 1.0;
  double origin = 0.0;
  double d = 0.0;
  std::string f = "const";
  std::string fd = "zero";
  double sigma = 0.2;
  double ell = 0.1;
  double x0 = 0.0;
  std::string state = "product";
  std::string particle_norm = "l2";
  std::string pointer_norm = "l2";
  long window = 3;
  bool allow_caustic = false;
};

Normalization parse_norm(const std::string& v, const char* key) {
  if (v == "l2") {
    return Normalization::L2Normalized;
  }
  if (v == "delta") {
    return Normalization::DeltaLimit;
  }
  throw ConfigError(std::string(key) + " must be 'l2' or 'delta', got '" + v +
                    "'");
}

OscillatorParams make_params(const PhysicsOpts& o) {
  OscillatorParams p;
  p.m = o.m;
  p.omega = o.omega;
  p.T = o.T;
  p.f = TimeFunction::from_name(o.f, o.T);
  p.f_D = TimeFunction::from_name(o.fd, o.T);
  p.pointer_shift = o.d;
  p.allow_caustic_branch = o.allow_caustic;
  return p;
}

InitialState make_state(const PhysicsOpts& o) {
  const GaussianSpec particle{o.x0, o.sigma,
                              parse_norm(o.particle_norm, "particle-norm")};
  const GaussianSpec pointer{0.0, o.ell,
                             parse_norm(o.pointer_norm, "pointer-norm")};
  if (o.state == "sharp-particle") {
    return SharpParticle{o.x0, pointer};
  }
  if (o.state == "sharp-pointer") {
    return SharpPointer{particle};
  }
  if (o.state == "product") {
    return ProductState{particle, pointer};
  }
  throw ConfigError(
      "state must be 'sharp-particle', 'sharp-pointer', or 'product', "
      "got '" +
      o.state + "'");
}

// Lets a flat key=value file supply any flag the command line left at its
// default; command line always wins.
class Binder {
 public:
  void bind(CLI::Option* opt, std::string key,
            std::function<void(const std::string&)> set) {
    items_.push_back({opt, std::move(key), std::move(set)});
  }
  void bind_double(CLI::Option* opt, const std::string& key, double* target) {
    bind(opt, key,
         [target, key](const std::string& v) { *target = parse_double(v, key); });
  }
  void bind_long(CLI::Option* opt, const std::string& key, long* target) {
    bind(opt, key,
         [target, key](const std::string& v) { *target = parse_long(v, key); });
  }
  void bind_string(CLI::Option* opt, const std::string& key,
                   std::string* target) {
    bind(opt, key, [target](const std::string& v) { *target = v; });
  }
  void bind_bool(CLI::Option* opt, const std::string& key, bool* target) {
    bind(opt, key,
         [target, key](const std::string& v) { *target = parse_bool(v, key); });
  }
  void apply(const std::map<std::string, std::string>& cfg) const {
    for (const auto& item : items_) {
      const auto it = cfg.find(item.key);
      if (it != cfg.end() && item.opt->count() == 0) {
        item.set(it->second);
      }
    }
  }

 private:
  struct Item {
    CLI::Option* opt;
    std::string key;
    std::function<void(const std::string&)> set;
  };
  std::vector<Item> items_;
};

void add_physics_options(CLI::App* cmd, PhysicsOpts* o, Binder* binder) {
  binder->bind_double(cmd->add_option("--m", o->m, "particle mass"), "m",
                      &o->m);
  binder->bind_double(
      cmd->add_option("--omega", o->omega, "angular frequency (0 = free)"),
      "omega", &o->omega);
  binder->bind_double(cmd->add_option("--T", o->T, "measurement duration"),
                      "T", &o->T);
  binder->bind_double(
      cmd->add_option("--delta", o->delta, "partition interval length"),
      "delta", &o->delta);
  binder->bind_double(
      cmd->add_option("--origin", o->origin, "centre of interval 0"),
      "origin", &o->origin);
  binder->bind_double(
      cmd->add_option("--d", o->d, "constant pointer displacement"), "d",
      &o->d);
  binder->bind_string(
      cmd->add_option("--f", o->f,
                      "coupling profile: zero|const[:v]|sine-window[:a]|"
                      "table:<path>"),
      "f", &o->f);
  binder->bind_string(
      cmd->add_option("--fd", o->fd, "driving profile (same syntax as --f)"),
      "fd", &o->fd);
  binder->bind_double(
      cmd->add_option("--sigma", o->sigma, "particle Gaussian halfwidth"),
      "sigma", &o->sigma);
  binder->bind_double(
      cmd->add_option("--ell", o->ell, "pointer Gaussian halfwidth"), "ell",
      &o->ell);
  binder->bind_double(
      cmd->add_option("--x0", o->x0, "particle centre position"), "x0",
      &o->x0);
  binder->bind_string(
      cmd->add_option("--state", o->state,
                      "sharp-particle|sharp-pointer|product"),
      "state", &o->state);
  binder->bind_string(
      cmd->add_option("--particle-norm", o->particle_norm, "l2|delta"),
      "particle-norm", &o->particle_norm);
  binder->bind_string(
      cmd->add_option("--pointer-norm", o->pointer_norm, "l2|delta"),
      "pointer-norm", &o->pointer_norm);
  binder->bind_long(
      cmd->add_option("--window", o->window, "half-width of the index window"),
      "window", &o->window);
  binder->bind_bool(
      cmd->add_flag("--allow-caustic", o->allow_caustic,
                    "permit omega*T beyond the first half period"),
      "allow-caustic", &o->allow_caustic);
}

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  long count = 0;
};

Grid parse_grid(const std::string& text) {
  Grid g;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ConfigError("grid must be start:stop:step, got '" + text + "'");
  }
  g.start = parse_double(text.substr(0, c1), "grid start");
  g.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "grid stop");
  g.step = parse_double(text.substr(c2 + 1), "grid step");
  if (!(g.step > 0.0)) {
    throw ConfigError("grid step must be > 0");
  }
  if (g.stop < g.start) {
    throw ConfigError("grid stop must be >= start");
  }
  g.count = static_cast<long>((g.stop - g.start) / g.step + 1e-9) + 1;
  return g;
}

JForm parse_j_form(const std::string& v) {
  if (v == "appendix") {
    return JForm::Appendix;
  }
  if (v == "main-text") {
    return JForm::MainText;
  }
  throw ConfigError("j-form must be 'appendix' or 'main-text', got '" + v +
                    "'");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw ConfigError("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// ---------------------------------------------------------------- sweep --

int run_sweep(const std::string& kind, const Grid& grid, bool with_oracle,
              JForm j_form, double rel_tol, double abs_tol, Output& out) {
  const bool particle = kind == "particle-factors";
  if (!particle && kind != "pointer-factors") {
    throw ConfigError(
        "kind must be 'particle-factors' or 'pointer-factors', got '" + kind +
        "'");
  }
  std::ostream& os = out.stream();
  const char* a = particle ? "I" : "F";
  const char* b = particle ? "J" : "G";
  os << "arg," << a << ',' << b;
  if (with_oracle) {
    os << ',' << a << "_oracle," << b << "_oracle,d" << a << ",d" << b;
  }
  os << '\n';
  QuadratureSpec q;
  q.rel_tol = rel_tol;
  q.abs_tol = abs_tol;
  for (long i = 0; i < grid.count; ++i) {
    const double arg = grid.start + static_cast<double>(i) * grid.step;
    const auto [va, vb] = particle ? particle_factors(arg, j_form)
                                   : pointer_factors(arg);
    os << fmt(arg) << ',' << fmt(va) << ',' << fmt(vb);
    if (with_oracle) {
      const double oa =
          oracle_factor(particle ? FactorKind::I : FactorKind::F, arg, q);
      const double ob =
          oracle_factor(particle ? FactorKind::J : FactorKind::G, arg, q);
      os << ',' << fmt(oa) << ',' << fmt(ob) << ',' << fmt(std::abs(va - oa))
         << ',' << fmt(std::abs(vb - ob));
    }
    os << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify --

struct Check {
  std::string name;
  double expected;
  double got;
  double tol;
  bool passed() const { return std::abs(expected - got) <= tol; }
};

int run_verify(const PhysicsOpts& phys, JForm j_form, double tol_override,
               Output& out) {
  std::vector<Check> checks;
  const bool overridden = tol_override > 0.0;
  const double factor_tol = overridden ? tol_override : 1e-6;
  const double erf_tol = overridden ? tol_override : 1e-9;
  const double sum_tol = overridden ? tol_override : 1e-3;

  const QuadratureSpec factor_quad{1e-8, 1e-10, 40, 8.0};
  const double args[] = {0.25, 0.5, 1.0, 1.72, 3.0};
  for (const double arg : args) {
    const auto [I, J] = particle_factors(arg, j_form);
    const auto [F, G] = pointer_factors(arg);
    checks.push_back({"factor-I@" + fmt(arg), I,
                      oracle_factor(FactorKind::I, arg, factor_quad),
                      factor_tol});
    checks.push_back({"factor-J@" + fmt(arg), J,
                      oracle_factor(FactorKind::J, arg, factor_quad),
                      factor_tol});
    checks.push_back({"factor-F@" + fmt(arg), F,
                      oracle_factor(FactorKind::F, arg, factor_quad),
                      factor_tol});
    checks.push_back({"factor-G@" + fmt(arg), G,
                      oracle_factor(FactorKind::G, arg, factor_quad),
                      factor_tol});
    checks.push_back({"factor-P0@" + fmt(arg), prob_kernel_p0(arg),
                      oracle_factor(FactorKind::P0, arg, factor_quad),
                      factor_tol});
    checks.push_back({"factor-P1@" + fmt(arg), prob_kernel_p1(arg),
                      oracle_factor(FactorKind::P1, arg, factor_quad),
                      factor_tol});
  }

  // The two published variants of J disagree; the defining integral decides.
  checks.push_back({"J-adjudication@0.5",
                    particle_factors(0.5, j_form).second,
                    oracle_factor(FactorKind::J, 0.5, factor_quad),
                    factor_tol});

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int i = 0; i < 5; ++i) {
    const double a = uni(rng);
    const double b = uni(rng);
    const auto r = erf_product_integral(a, b, factor_quad);
    checks.push_back({"erf-identity@" + std::to_string(i), r.closed,
                      r.numeric, erf_tol});
  }

  const OscillatorParams params = make_params(phys);
  const Partition partition{phys.delta, phys.origin};
  const ProductState state{
      {phys.x0, phys.sigma, parse_norm(phys.particle_norm, "particle-norm")},
      {0.0, phys.ell, parse_norm(phys.pointer_norm, "pointer-norm")}};
  validate(params, partition, state);
  const QuadratureSpec sum_quad{1e-6, 1e-9, 40, 8.0};
  double dev[3] = {0.0, 0.0, 0.0};
  const int windows[3] = {2, 4, 6};
  for (int i = 0; i < 3; ++i) {
    const SumRuleResult r =
        sum_rule_check(state, params, partition, windows[i], sum_quad);
    dev[i] = std::abs(r.partial_sum - r.target);
    if (i == 2) {
      checks.push_back(
          {"sum-rule@N=6", r.target, r.partial_sum, sum_tol});
    }
  }
  const double worst_increase =
      std::max(0.0, std::max(dev[1] - dev[0], dev[2] - dev[1]));
  checks.push_back({"sum-rule-monotone", 0.0, worst_increase, 1e-9});

  std::ostream& os = out.stream();
  int passed = 0;
  for (const Check& c : checks) {
    os << "CHECK " << c.name << " expected=" << fmt(c.expected)
       << " got=" << fmt(c.got) << " tol=" << fmt(c.tol) << ' '
       << (c.passed() ? "PASS" : "FAIL") << '\n';
    passed += c.passed() ? 1 : 0;
  }
  os << "VERIFY " << passed << '/' << checks.size() << " passed\n";
  return passed == static_cast<int>(checks.size()) ? kExitOk
                                                   : kExitVerifyFailed;
}

// ----------------------------------------------------------------- prob --

int run_prob(const PhysicsOpts& phys, Output& out) {
  const OscillatorParams params = make_params(phys);
  const Partition partition{phys.delta, phys.origin};
  const InitialState state = make_state(phys);
  validate(params, partition, state);

  std::ostream& os = out.stream();
  os << "alpha,p,regime,valid\n";
  for (long alpha = -phys.window; alpha <= phys.window; ++alpha) {
    double p = 0.0;
    const char* regime = "exact";
    bool valid = true;
    if (phys.state == "sharp-particle") {
      p = sharp_particle_functional(alpha, alpha, params, partition).total;
    } else if (phys.state == "sharp-pointer") {
      p = sharp_pointer_functional(alpha, alpha, params, partition).total;
    } else if (parse_norm(phys.pointer_norm, "pointer-norm") ==
               Normalization::DeltaLimit) {
      // Pointer collapsing to a position eigenstate: the sharp-pointer
      // result holds exactly.
      p = narrow_pointer_probability(params, partition, phys.ell,
                                     Normalization::DeltaLimit);
      regime = "narrow-pointer";
    } else if (phys.ell <= phys.sigma) {
      p = narrow_pointer_probability(params, partition, phys.ell,
                                     Normalization::L2Normalized);
      regime = "narrow-pointer";
      const DerivedConstants dc =
          dimensionless_groups(params, partition, state);
      valid = dc.gamma > 1.5;
    } else {
      const ExpansionBound b = narrow_particle_probability(
          params, partition, phys.sigma, phys.ell,
          parse_norm(phys.particle_norm, "particle-norm"));
      p = b.total();
      regime = "narrow-particle";
      valid = b.valid;
    }
    os << alpha << ',' << fmt(p) << ',' << regime << ','
       << (valid ? "true" : "false") << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decoherence functionals, bounds, and history probabilities for a "
      "driven oscillator measured by a position-recording apparatus"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;

  // sweep
  CLI::App* sweep = app.add_subcommand(
      "sweep", "closed-form factor curves over a parameter grid (CSV)");
  Binder sweep_binder;
  std::string kind = "particle-factors";
  std::string grid_text = "0:3:0.01";
  bool with_oracle = false;
  std::string j_form_text = "appendix";
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  sweep_binder.bind_string(
      sweep->add_option("--kind", kind, "particle-factors|pointer-factors"),
      "kind", &kind);
  sweep_binder.bind_string(
      sweep->add_option("--grid", grid_text, "start:stop:step"), "grid",
      &grid_text);
  sweep_binder.bind_bool(
      sweep->add_flag("--with-oracle", with_oracle,
                      "append quadrature columns and absolute deltas"),
      "with-oracle", &with_oracle);
  sweep_binder.bind_string(
      sweep->add_option("--j-form", j_form_text, "appendix|main-text"),
      "j-form", &j_form_text);
  sweep_binder.bind_double(
      sweep->add_option("--rel-tol", rel_tol, "oracle relative tolerance"),
      "rel-tol", &rel_tol);
  sweep_binder.bind_double(
      sweep->add_option("--abs-tol", abs_tol, "oracle absolute tolerance"),
      "abs-tol", &abs_tol);

  // verify
  CLI::App* verify = app.add_subcommand(
      "verify", "closed forms vs quadrature oracle; exit 0 iff all pass");
  Binder verify_binder;
  PhysicsOpts verify_phys;
  double tol_override = 0.0;
  add_physics_options(verify, &verify_phys, &verify_binder);
  verify_binder.bind_string(
      verify->add_option("--j-form", j_form_text, "appendix|main-text"),
      "j-form", &j_form_text);
  verify_binder.bind_double(
      verify->add_option("--tol", tol_override,
                         "override every check tolerance"),
      "tol", &tol_override);

  // prob
  CLI::App* prob = app.add_subcommand(
      "prob", "history probability table over an index window (CSV)");
  Binder prob_binder;
  PhysicsOpts prob_phys;
  prob_phys.delta = 0.1;
  prob_phys.state = "sharp-particle";
  prob_phys.m = 1.0;
  add_physics_options(prob, &prob_phys, &prob_binder);

  for (CLI::App* cmd : {sweep, verify, prob}) {
    cmd->add_option("--config", config_path, "flat key=value config file");
    cmd->add_option("--out", out_path, "output path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    std::map<std::string, std::string> cfg;
    if (!config_path.empty()) {
      cfg = load_config(config_path);
    }
    Output out(out_path);
    if (sweep->parsed()) {
      sweep_binder.apply(cfg);
      return run_sweep(kind, parse_grid(grid_text), with_oracle,
                       parse_j_form(j_form_text), rel_tol, abs_tol, out);
    }
    if (verify->parsed()) {
      verify_binder.apply(cfg);
      return run_verify(verify_phys, parse_j_form(j_form_text), tol_override,
                        out);
    }
    prob_binder.apply(cfg);
    return run_prob(prob_phys, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NonPositive& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kExitConfig;
  } catch (const AsymmetricFunction& e) {
    std::cerr << "invalid profile: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SingularPropagator& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DecoupledApparatus& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

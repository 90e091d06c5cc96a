#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "freefam/freefam.hpp"

namespace freefam::cli {

namespace {

using nlohmann::json;

enum class Output { Json, Csv };

struct CliConfig {
  std::size_t order = kDefaultOrder;
  std::size_t quad_nodes = kDefaultQuadratureNodes;
  double tol = 1e-10;
  Output output = Output::Json;
  double m0 = 0.0;
};

// Serializes with format_number so floats are shortest-roundtrip and
// integral values print without a trailing ".0".
void dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += json(key).dump();
        out += ':';
        dump(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        dump(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string to_text(const json& j) {
  std::string out;
  dump(j, out);
  return out;
}

json to_json(std::span<const double> values) {
  json array = json::array();
  for (double v : values) {
    array.push_back(v);
  }
  return array;
}

json to_json(const CheckResult& check) {
  json witness = json::object();
  for (const auto& [name, value] : check.witness) {
    witness[name] = value;
  }
  return {{"name", check.name}, {"passed", check.passed}, {"witness", witness}};
}

json to_json(const AdmissibilityReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back(to_json(check));
  }
  json id_checks = json::array();
  for (const auto& check : report.infinitely_divisible_checks) {
    id_checks.push_back(to_json(check));
  }
  return {{"overall", report.overall},
          {"checks", checks},
          {"infinitely_divisible", report.infinitely_divisible},
          {"infinitely_divisible_checks", id_checks}};
}

void add_config(CLI::App* sub, CliConfig& config) {
  sub->add_option("--order", config.order, "Truncation order")
      ->envname("FREEFAM_ORDER")
      ->check(CLI::Range(std::size_t{4}, std::size_t{512}));
  sub->add_option("--quad-nodes", config.quad_nodes, "Quadrature nodes")
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
  sub->add_option("--tol", config.tol, "Numeric tolerance for input consistency checks")
      ->check(CLI::PositiveNumber);
  sub->add_option("--output", config.output, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Output>{{"json", Output::Json}, {"csv", Output::Csv}}));
  sub->add_option("--m0", config.m0, "Anchor mean of the variance function");
}

struct VarianceArgs {
  std::vector<double> num;
  std::vector<double> den{1.0};
};

void add_variance(CLI::App* sub, VarianceArgs& v) {
  sub->add_option("--num", v.num, "Numerator coefficients c0,c1,...")
      ->delimiter(',')
      ->required();
  sub->add_option("--den", v.den, "Denominator coefficients c0,c1,...")->delimiter(',');
}

RationalVarianceFunction make_variance(const VarianceArgs& v, const CliConfig& config) {
  return RationalVarianceFunction(v.num, v.den, config.m0);
}

// Order used when the subcommand reads a sequence: the sequence length
// unless --order (or FREEFAM_ORDER) was given.
std::size_t sequence_order(const CLI::App* sub, const CliConfig& config, std::size_t length) {
  return sub->count("--order") > 0 ? config.order : length;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free exponential family toolkit"};
  app.require_subcommand(1);

  CliConfig config;
  VarianceArgs var;
  std::vector<double> values;
  std::vector<double> right;
  std::string from = "cumulants";
  double a = 0.0;
  double b = 0.0;
  double lambda = 1.0;
  bool formal = false;
  double clt_n = 1.0;
  double m = 0.0;
  std::vector<double> lambdas{100.0, 1000.0, 10000.0};
  std::size_t hankel_size = 8;
  std::size_t samples = 64;
  std::optional<double> window;
  std::size_t moment_count = 8;
  std::size_t points = 200;
  std::string generator = "semicircle";
  double gen_mean = 0.0;
  double gen_sd = 1.0;

  std::function<void()> action;

  auto* cumulants = app.add_subcommand("cumulants", "Variance function to free cumulants");
  add_config(cumulants, config);
  add_variance(cumulants, var);
  cumulants->callback([&] {
    action = [&] {
      const auto c = cumulants_from_variance(make_variance(var, config), config.order);
      out << to_text(to_json(c.values())) << '\n';
    };
  });

  auto* variance = app.add_subcommand("variance", "Free cumulants to Taylor coefficients of V");
  add_config(variance, config);
  variance->add_option("--values", values, "Cumulants c1,c2,...")->delimiter(',')->required();
  variance->callback([&] {
    action = [&] {
      const CumulantSequence c(values);
      if (c.order() < 3) {
        throw ValidationError("need at least three cumulants");
      }
      const std::size_t degree = variance->count("--order") > 0
                                     ? config.order
                                     : c.order() - 2;
      out << to_text(to_json(variance_from_cumulants(c, degree).coeffs())) << '\n';
    };
  });

  auto* moments = app.add_subcommand("moments", "Convert between moments and free cumulants");
  add_config(moments, config);
  moments->add_option("--from", from, "Input kind")
      ->check(CLI::IsMember({"cumulants", "moments"}));
  moments->add_option("--values", values, "Input sequence x1,x2,...")->delimiter(',')->required();
  moments->callback([&] {
    action = [&] {
      const std::size_t order = sequence_order(moments, config, values.size());
      if (from == "cumulants") {
        out << to_text(to_json(moments_from_cumulants(CumulantSequence(values), order).values()))
            << '\n';
      } else {
        out << to_text(to_json(cumulants_from_moments(MomentSequence(values), order).values()))
            << '\n';
      }
    };
  });

  auto* check = app.add_subcommand("check", "Admissibility report for a variance function");
  add_config(check, config);
  add_variance(check, var);
  check->add_option("--hankel-size", hankel_size, "Largest Hankel matrix")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  check->add_option("--samples", samples, "z-map samples per side")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  check->add_option("--window", window, "z-map half-width")->check(CLI::PositiveNumber);
  check->callback([&] {
    action = [&] {
      AdmissibilityOptions options;
      options.hankel_size = hankel_size;
      options.samples = samples;
      options.window = window;
      out << to_text(to_json(admissibility_report(make_variance(var, config), options))) << '\n';
    };
  });

  auto* meixner = app.add_subcommand("meixner", "Free Meixner law: atoms (json) or density (csv)");
  add_config(meixner, config);
  meixner->add_option("--a", a, "Linear coefficient of V")->required();
  meixner->add_option("--b", b, "Quadratic coefficient of V")->required();
  meixner->add_option("--points", points, "Density rows")->check(CLI::PositiveNumber);
  meixner->callback([&] {
    action = [&] {
      const Measure nu = meixner_measure({a, b}, ArcsineQuadrature(config.quad_nodes));
      for (const auto& note : nu.notes()) {
        err << "note: " << note << '\n';
      }
      if (config.output == Output::Json) {
        out << atoms_json(nu) << '\n';
      } else {
        write_density_csv(out, nu, points);
      }
    };
  });

  auto* family = app.add_subcommand("family", "Density (csv) or atoms (json) of the member Q_m");
  add_config(family, config);
  add_variance(family, var);
  family->add_option("--generator", generator, "Generating measure")
      ->check(CLI::IsMember({"semicircle", "meixner"}));
  family->add_option("--a", a, "Meixner linear coefficient");
  family->add_option("--b", b, "Meixner quadratic coefficient");
  family->add_option("--mean", gen_mean, "Semicircle mean");
  family->add_option("--sd", gen_sd, "Semicircle standard deviation");
  family->add_option("--m", m, "Mean of the member")->required();
  family->add_option("--points", points, "Density rows")->check(CLI::PositiveNumber);
  family->callback([&] {
    if (family->count("--output") == 0) {
      config.output = Output::Csv;
    }
    action = [&] {
      const ArcsineQuadrature rule(config.quad_nodes);
      const Measure nu = generator == "meixner" ? meixner_measure({a, b}, rule)
                                                : semicircle_measure(gen_mean, gen_sd, rule);
      const auto v = make_variance(var, config);
      const double nu_mean = mean(nu);
      if (std::abs(nu_mean - v.anchor_mean()) > config.tol * std::max(1.0, std::abs(nu_mean))) {
        throw ValidationError("generator mean " + format_number(nu_mean) +
                              " differs from --m0 " + format_number(v.anchor_mean()));
      }
      const Measure q = family_member(nu, v, m);
      if (config.output == Output::Json) {
        out << atoms_json(q) << '\n';
      } else {
        write_density_csv(out, q, points);
      }
    };
  });

  auto* power = app.add_subcommand("power", "Cumulants of D_lambda(nu^(boxplus lambda))");
  add_config(power, config);
  add_variance(power, var);
  power->add_option("--lambda", lambda, "Free convolution power")->required();
  power->add_flag("--formal", formal, "Allow 0 < lambda < 1");
  power->callback([&] {
    action = [&] {
      const auto c = reproductive_family(make_variance(var, config), lambda, config.order,
                                         formal ? PowerPolicy::AllowFormal
                                                : PowerPolicy::MeasureOnly);
      out << to_text(json{{"cumulants", to_json(c.values())}, {"formal", lambda < 1.0}}) << '\n';
    };
  });

  auto* convolve = app.add_subcommand("convolve", "Free convolution of two cumulant sequences");
  add_config(convolve, config);
  convolve->add_option("--left", values, "Cumulants of the first law")->delimiter(',')->required();
  convolve->add_option("--right", right, "Cumulants of the second law")
      ->delimiter(',')
      ->required();
  convolve->callback([&] {
    action = [&] {
      const auto c = transform_cumulants(CumulantSequence(values), Convolve{CumulantSequence(right)});
      out << to_text(to_json(c.cumulants.values())) << '\n';
    };
  });

  auto* clt = app.add_subcommand("clt", "Cumulants of D_sqrt(n)(nu^(boxplus n))");
  add_config(clt, config);
  clt->add_option("--values", values, "Centered cumulants c1,c2,...")->delimiter(',')->required();
  clt->add_option("--n", clt_n, "Number of summands")->required();
  clt->callback([&] {
    action = [&] {
      const auto c = clt_cumulants(CumulantSequence(values), clt_n, config.tol);
      out << to_text(to_json(c.values())) << '\n';
    };
  });

  auto* mp = app.add_subcommand("mp-approx", "Marchenko-Pastur approximation distances");
  add_config(mp, config);
  add_variance(mp, var);
  mp->add_option("--m", m, "Scaled mean")->required();
  mp->add_option("--lambdas", lambdas, "Increasing lambda grid")->delimiter(',');
  mp->add_option("--moments", moment_count, "Moments compared")
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  mp->add_option("--window", window, "Bound on |m|")->check(CLI::PositiveNumber);
  mp->callback([&] {
    action = [&] {
      MpApproximationOptions options;
      options.moments = moment_count;
      options.window = window;
      out << convergence_report_json(
                 mp_approximation(make_variance(var, config), lambdas, m, options))
          << '\n';
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    action();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace freefam::cli

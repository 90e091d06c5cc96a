#include "freefam/freeconv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "freefam/cumulants.hpp"
#include "freefam/error.hpp"
#include "freefam/format.hpp"
#include "freefam/moments.hpp"

namespace freefam {

CumulantSequence reproductive_family(const RationalVarianceFunction& v, double lambda,
                                     std::size_t order, PowerPolicy policy) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("free power requires lambda > 0");
  }
  if (lambda < 1.0 && policy != PowerPolicy::AllowFormal) {
    throw ValidationError("lambda < 1 is only formal; pass the formal flag to allow it");
  }
  return transform_cumulants(cumulants_from_variance(v, order), Power{lambda}).cumulants;
}

CumulantSequence clt_cumulants(const CumulantSequence& c, double n, double tolerance) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw ValidationError("CLT scaling needs n >= 1");
  }
  if (c.order() == 0 || std::abs(c(1)) > tolerance) {
    throw ValidationError("generator must be centered");
  }
  std::vector<double> out(c.values().begin(), c.values().end());
  out[0] = 0.0;
  for (std::size_t k = 2; k <= out.size(); ++k) {
    out[k - 1] *= std::pow(n, 1.0 - 0.5 * static_cast<double>(k));
  }
  return CumulantSequence(std::move(out));
}

std::vector<double> family_member_moments(const CumulantSequence& generator, double theta,
                                          double mean, std::size_t count) {
  if (count == 0) {
    return {};
  }
  if (generator.order() < std::max<std::size_t>(count, 2)) {
    throw ValidationError("generator needs at least " + std::to_string(count) + " cumulants");
  }
  const double inverse_normalizer = 1.0 - theta * mean;  // 1 / M(theta)
  std::vector<double> mu(count, 0.0);

  if (theta == 0.0) {
    const MomentSequence g = moments_from_cumulants(generator, count);
    std::copy(g.values().begin(), g.values().end(), mu.begin());
    return mu;
  }

  // Terms of the series shrink at least like 2^-j when |theta| rho <= 1/2.
  constexpr std::size_t kSeriesTerms = 60;
  const bool series = std::abs(theta) * support_bound(generator) <= 0.5 &&
                      generator.order() >= count + kSeriesTerms;
  if (series) {
    const MomentSequence g = moments_from_cumulants(generator, count + kSeriesTerms);
    for (std::size_t k = 1; k <= count; ++k) {
      double acc = 0.0;
      double weight = 1.0;
      for (std::size_t j = 0; j < kSeriesTerms; ++j) {
        acc += weight * g(k + j);
        weight *= theta;
      }
      mu[k - 1] = inverse_normalizer * acc;
    }
    return mu;
  }

  const MomentSequence g = moments_from_cumulants(generator, count);
  double previous = 1.0;
  double previous_g = 1.0;
  for (std::size_t k = 1; k <= count; ++k) {
    mu[k - 1] = (previous - inverse_normalizer * previous_g) / theta;
    previous = mu[k - 1];
    previous_g = g(k);
  }
  return mu;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (n * sxy - sx * sy) / denom;
}

namespace {

void check_grid(std::span<const double> lambdas) {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] >= 1.0) || !std::isfinite(lambdas[i])) {
      throw ValidationError("lambda grid entries must be finite and >= 1");
    }
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      throw ValidationError("lambda grid must be strictly increasing");
    }
  }
}

}  // namespace

ConvergenceReport mp_approximation(const RationalVarianceFunction& v, std::span<const double> lambdas,
                                   double m, const MpApproximationOptions& options) {
  check_grid(lambdas);
  const double m0 = v.anchor_mean();
  const double sigma2 = v.anchor_value();
  const double sigma = std::sqrt(sigma2);
  const double window = options.window.value_or(0.5 * std::min(sigma, sigma2));
  if (!std::isfinite(m) || !(std::abs(m) < window)) {
    throw ValidationError("m outside window (|m| < " + format_number(window) + ")");
  }
  const std::size_t count = options.moments;
  if (count == 0) {
    throw ValidationError("need at least one moment");
  }
  // Enough cumulants for the series branch of family_member_moments.
  const std::size_t order = count + 64;

  std::vector<double> target_c(order, 0.0);
  target_c[1] = sigma2;
  const std::vector<double> target =
      family_member_moments(CumulantSequence(target_c), m / (m * m + sigma2), m, count);

  ConvergenceReport report;
  for (double lambda : lambdas) {
    const double root = std::sqrt(lambda);
    // Generator of F(V/lambda), centered and dilated to sqrt(lambda)(X - m0).
    CumulantSequence c = reproductive_family(v, lambda, order);
    std::vector<double> centered(c.values().begin(), c.values().end());
    centered[0] = 0.0;
    c = transform_cumulants(CumulantSequence(std::move(centered)), Dilate{1.0 / root}).cumulants;

    const RationalVarianceFunction scaled = v.affine_substitute(m0, 1.0 / root);
    if (scaled.has_pole_at(m) || !(scaled(m) > 0.0)) {
      throw ValidationError("m outside window: scaled variance not positive");
    }
    const double theta = m / (m * m + scaled(m));
    const std::vector<double> member = family_member_moments(c, theta, m, count);

    double distance = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      distance = std::max(distance, std::abs(member[k] - target[k]));
    }
    report.grid.push_back(lambda);
    report.distances.push_back(distance);
  }
  report.slope = log_log_slope(report.grid, report.distances);
  return report;
}

ConvergenceReport mora_check(const RationalVarianceFunction& v, std::span<const double> lambdas,
                             std::size_t order) {
  check_grid(lambdas);
  const double m0 = v.anchor_mean();
  std::vector<double> limit(order, 0.0);
  limit[1] = v.anchor_value();

  ConvergenceReport report;
  for (double lambda : lambdas) {
    const CumulantSequence c =
        cumulants_from_variance(v.affine_substitute(m0, 1.0 / std::sqrt(lambda)), order);
    double distance = 0.0;
    for (std::size_t k = 1; k <= order; ++k) {
      distance = std::max(distance, std::abs(c(k) - limit[k - 1]));
    }
    report.grid.push_back(lambda);
    report.distances.push_back(distance);
  }
  report.slope = log_log_slope(report.grid, report.distances);
  return report;
}

}  // namespace freefam

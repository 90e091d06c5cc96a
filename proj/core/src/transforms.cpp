#include "freefam/transforms.hpp"

#include <cmath>
#include <limits>

#include "freefam/error.hpp"

namespace freefam {

TransformBundle bundle_from_cumulants(const CumulantSequence& c) {
  const std::size_t n = c.order();
  if (n == 0) {
    throw ValidationError("empty cumulant sequence");
  }
  TransformBundle bundle;
  bundle.r_series = TruncatedSeries(std::vector<double>(c.values().begin(), c.values().end()), n - 1);

  // K(g) = 1/g + R(g) = 1/w  <=>  w = g / (1 + g R(g)); invert in g.
  std::vector<double> g_r(n + 1, 0.0);
  g_r[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    g_r[k] = c(k);
  }
  const TruncatedSeries denom = reciprocal(TruncatedSeries(std::move(g_r), n));
  std::vector<double> phi(n + 2, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    phi[k + 1] = denom[k];
  }
  bundle.g_tail = revert(TruncatedSeries(std::move(phi), n + 1));
  return bundle;
}

double g_numeric(const Measure& nu, double z) {
  if (!std::isfinite(z) || nu.in_continuous_support(z)) {
    throw ValidationError("evaluation inside support");
  }
  for (const Atom& atom : nu.atoms()) {
    if (atom.location == z) {
      throw ValidationError("evaluation at an atom");
    }
  }
  return nu.integrate([z](double x) { return 1.0 / (z - x); });
}

ThetaMaps theta_maps(const Measure& nu, double theta) {
  const double normalizer = cauchy_kernel_normalizer(nu, theta);
  const double m0 = mean(nu);
  const double first = nu.integrate([theta](double x) { return x / (1.0 - theta * x); });
  const double second =
      nu.integrate([theta, m0](double x) { return x * (x - m0) / (1.0 - theta * x); });
  const double mean_theta = first / normalizer;
  // v = (m - m0)(1/theta - m) = [(m - m0)/theta] (1 - theta m).
  const double variance = (second / normalizer) * (1.0 - theta * mean_theta);
  return {normalizer, mean_theta, variance};
}

double default_theta_window(const Measure& nu) { return 0.5 / nu.support_radius(); }

MeanParametrization mean_to_theta(const RationalVarianceFunction& v, double m) {
  if (!std::isfinite(m) || v.has_pole_at(m) || !(v(m) > 0.0)) {
    throw ValidationError("psi undefined at this mean");
  }
  const double vm = v(m);
  const double shift = m - v.anchor_mean();
  if (shift == 0.0) {
    return {0.0, std::numeric_limits<double>::infinity(), 0.0};
  }
  const double denom = m * shift + vm;
  if (denom == 0.0) {
    throw ValidationError("psi undefined at this mean");
  }
  return {shift / denom, m + vm / shift, shift / vm};
}

}  // namespace freefam

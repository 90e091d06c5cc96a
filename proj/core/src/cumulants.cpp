#include "freefam/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "freefam/error.hpp"

namespace freefam {

CumulantSequence cumulants_from_variance(const RationalVarianceFunction& v, std::size_t order) {
  if (order < 2) {
    throw ValidationError("cumulant order must be at least 2");
  }
  const TruncatedSeries taylor = v.taylor(order);
  std::vector<double> c(order, 0.0);
  c[0] = v.anchor_mean();
  TruncatedSeries power = TruncatedSeries::constant(1.0, order);
  for (std::size_t n = 1; n < order; ++n) {
    power = power * taylor;
    c[n] = power[n - 1] / static_cast<double>(n);
  }
  return CumulantSequence(std::move(c));
}

TruncatedSeries variance_from_cumulants(const CumulantSequence& c) {
  if (c.order() < 2) {
    throw ValidationError("need at least two cumulants");
  }
  return variance_from_cumulants(c, c.order() - 2);
}

TruncatedSeries variance_from_cumulants(const CumulantSequence& c, std::size_t order) {
  if (c.order() < order + 2) {
    throw ValidationError("variance expansion to degree " + std::to_string(order) + " needs " +
                          std::to_string(order + 2) + " cumulants");
  }
  if (!(c(2) > 0.0)) {
    throw ValidationError("degenerate measure has no variance function");
  }
  // F(u) = R(u) - m0 = sum_{n>=2} c_n u^(n-1), so m - m0 = F(u) with
  // u = (m - m0)/V(m). Invert to u = H(t), t = m - m0, then V = t / H(t).
  std::vector<double> f(order + 2, 0.0);
  for (std::size_t n = 2; n <= order + 2; ++n) {
    f[n - 1] = c(n);
  }
  const TruncatedSeries h = revert(TruncatedSeries(std::move(f), order + 1));
  std::vector<double> h_over_t(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    h_over_t[k] = h[k + 1];
  }
  return reciprocal(TruncatedSeries(std::move(h_over_t), order));
}

namespace {

struct ActionVisitor {
  const CumulantSequence& c;

  TransformedCumulants operator()(const Dilate& d) const {
    if (d.r == 0.0 || !std::isfinite(d.r)) {
      throw ValidationError("dilation factor must be finite and nonzero");
    }
    std::vector<double> out(c.values().begin(), c.values().end());
    double scale = 1.0;
    for (double& value : out) {
      scale *= d.r;
      value /= scale;
    }
    return {CumulantSequence(std::move(out)), false};
  }

  TransformedCumulants operator()(const Power& p) const {
    if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
      throw ValidationError("free power requires lambda > 0");
    }
    std::vector<double> out(c.values().begin(), c.values().end());
    double scale = 1.0;
    for (std::size_t k = 1; k < out.size(); ++k) {
      scale *= p.lambda;
      out[k] /= scale;
    }
    return {CumulantSequence(std::move(out)), p.lambda < 1.0};
  }

  TransformedCumulants operator()(const Convolve& conv) const {
    if (conv.other.order() != c.order()) {
      throw ValidationError("free convolution needs cumulant sequences of equal order");
    }
    std::vector<double> out(c.values().begin(), c.values().end());
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] += conv.other.values()[k];
    }
    return {CumulantSequence(std::move(out)), false};
  }
};

}  // namespace

TransformedCumulants transform_cumulants(const CumulantSequence& c, const CumulantAction& action) {
  return std::visit(ActionVisitor{c}, action);
}

RationalVarianceFunction standardize_variance(const RationalVarianceFunction& v) {
  const double at_anchor = v.anchor_value();
  return v.affine_substitute(v.anchor_mean(), std::sqrt(at_anchor)).divided_by(at_anchor);
}

const CheckResult* AdmissibilityReport::find(const std::string& name) const {
  for (const auto* list : {&checks, &infinitely_divisible_checks}) {
    for (const auto& check : *list) {
      if (check.name == name) {
        return &check;
      }
    }
  }
  return nullptr;
}

namespace {

CheckResult z_map_check(const RationalVarianceFunction& vs, double window, std::size_t samples) {
  // z'(u) = 1 + (V'(u) u - V(u)) / u^2 must be negative on both sides of 0.
  CheckResult result{"z_map_decreasing", true, {}};
  double worst = -std::numeric_limits<double>::infinity();
  double worst_at = 0.0;
  const double decades = 3.0;
  for (double side : {-1.0, 1.0}) {
    for (std::size_t i = 0; i < samples; ++i) {
      const double t = samples > 1 ? static_cast<double>(i) / static_cast<double>(samples - 1) : 1.0;
      const double u = side * window * std::pow(10.0, -decades * (1.0 - t));
      double slope = std::numeric_limits<double>::infinity();
      if (!vs.has_pole_at(u) && vs(u) > 0.0) {
        slope = 1.0 + (vs.derivative(u) * u - vs(u)) / (u * u);
      }
      if (!(slope < 0.0)) {
        result.passed = false;
      }
      if (slope > worst) {
        worst = slope;
        worst_at = u;
      }
    }
  }
  result.witness = {{"window", window}, {"max_slope", worst}, {"max_slope_at", worst_at}};
  return result;
}

CheckResult hankel_check(std::string name, std::span<const double> h, std::size_t size,
                         double tolerance) {
  const HankelResult hankel = hankel_determinants(h, size, tolerance);
  CheckResult result{std::move(name), hankel.passed, {}};
  for (std::size_t k = 0; k < hankel.determinants.size(); ++k) {
    result.witness.emplace_back("det_" + std::to_string(k + 1), hankel.determinants[k]);
  }
  return result;
}

}  // namespace

AdmissibilityReport admissibility_report(const RationalVarianceFunction& v,
                                         const AdmissibilityOptions& options) {
  if (options.hankel_size < 2) {
    throw ValidationError("Hankel size must be at least 2");
  }
  if (options.samples == 0) {
    throw ValidationError("z-map check needs at least one sample");
  }
  const RationalVarianceFunction vs = standardize_variance(v);
  const double window = options.window.value_or(0.1 * std::sqrt(vs(0.0)));
  if (!(window > 0.0)) {
    throw ValidationError("z-map window must be positive");
  }

  const std::size_t k = options.hankel_size;
  const CumulantSequence c = cumulants_from_variance(vs, 2 * k);
  const MomentSequence m = moments_from_cumulants(c, 2 * k - 2);
  const double second = 2.0 * vs.taylor(2)[2];

  AdmissibilityReport report;
  report.checks.push_back(z_map_check(vs, window, options.samples));
  report.checks.push_back(
      {"second_derivative_bound", second >= -2.0, {{"second_derivative", second}, {"bound", -2.0}}});
  std::vector<double> moments{1.0};
  moments.insert(moments.end(), m.values().begin(), m.values().end());
  report.checks.push_back(hankel_check("hankel_moments", moments, k, options.hankel_tolerance));

  // c_(n+1) are the moments of the Levy measure: h_j = c_(j+2).
  std::vector<double> shifted(c.values().begin() + 1, c.values().end());
  report.infinitely_divisible_checks.push_back(
      hankel_check("levy_khinchin_hankel", shifted, k, options.hankel_tolerance));
  report.infinitely_divisible_checks.push_back(
      {"second_derivative_nonnegative", second >= 0.0, {{"second_derivative", second}}});

  auto all_passed = [](const std::vector<CheckResult>& list) {
    return std::all_of(list.begin(), list.end(), [](const CheckResult& c) { return c.passed; });
  };
  report.overall = all_passed(report.checks);
  report.infinitely_divisible = all_passed(report.infinitely_divisible_checks);
  return report;
}

}  // namespace freefam

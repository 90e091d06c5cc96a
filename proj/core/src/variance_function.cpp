#include "freefam/variance_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "freefam/error.hpp"

namespace freefam {

namespace {

std::vector<double> trimmed(std::vector<double> coeffs, const char* which) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw ValidationError(std::string(which) + " has a non-finite coefficient");
    }
  }
  while (coeffs.size() > 1 && coeffs.back() == 0.0) {
    coeffs.pop_back();
  }
  if (coeffs.empty()) {
    throw ValidationError(std::string(which) + " must have at least one coefficient");
  }
  return coeffs;
}

std::vector<double> poly_derivative(std::span<const double> coeffs) {
  std::vector<double> d;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    d.push_back(static_cast<double>(k) * coeffs[k]);
  }
  if (d.empty()) {
    d.push_back(0.0);
  }
  return d;
}

}  // namespace

double polyval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * x + coeffs[k];
  }
  return acc;
}

std::vector<double> poly_substitute(std::span<const double> coeffs, double origin, double scale) {
  // Horner in the polynomial ring: p(origin + scale u).
  std::vector<double> out{0.0};
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    std::vector<double> next(out.size() + 1, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i] * origin;
      next[i + 1] += out[i] * scale;
    }
    next[0] += coeffs[k];
    out = std::move(next);
  }
  out.resize(coeffs.size());
  return out;
}

RationalVarianceFunction::RationalVarianceFunction(std::vector<double> numerator,
                                                   std::vector<double> denominator,
                                                   double anchor_mean, std::size_t max_degree)
    : num_(trimmed(std::move(numerator), "numerator")),
      den_(trimmed(std::move(denominator), "denominator")),
      anchor_(anchor_mean) {
  if (!std::isfinite(anchor_)) {
    throw ValidationError("anchor mean must be finite");
  }
  if (num_.size() - 1 > max_degree || den_.size() - 1 > max_degree) {
    throw ValidationError("variance function degree exceeds bound " + std::to_string(max_degree));
  }
  const double q = polyval(den_, anchor_);
  if (q == 0.0) {
    throw ValidationError("degenerate or invalid variance at anchor");
  }
  const double v = polyval(num_, anchor_) / q;
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError("degenerate or invalid variance at anchor");
  }
}

RationalVarianceFunction RationalVarianceFunction::constant(double sigma2, double anchor_mean) {
  return RationalVarianceFunction({sigma2}, {1.0}, anchor_mean);
}

RationalVarianceFunction RationalVarianceFunction::quadratic(double a, double b) {
  return RationalVarianceFunction({1.0, a, b}, {1.0}, 0.0);
}

double RationalVarianceFunction::operator()(double m) const {
  return polyval(num_, m) / polyval(den_, m);
}

double RationalVarianceFunction::derivative(double m) const {
  const double p = polyval(num_, m);
  const double q = polyval(den_, m);
  const auto dp = poly_derivative(num_);
  const auto dq = poly_derivative(den_);
  return (polyval(dp, m) * q - p * polyval(dq, m)) / (q * q);
}

bool RationalVarianceFunction::has_pole_at(double m) const { return polyval(den_, m) == 0.0; }

TruncatedSeries RationalVarianceFunction::taylor(std::size_t order) const {
  const TruncatedSeries p(poly_substitute(num_, anchor_, 1.0), order);
  const TruncatedSeries q(poly_substitute(den_, anchor_, 1.0), order);
  return p * reciprocal(q);
}

RationalVarianceFunction RationalVarianceFunction::affine_substitute(double origin,
                                                                     double scale) const {
  if (scale == 0.0 || !std::isfinite(scale)) {
    throw ValidationError("affine substitution needs a finite nonzero scale");
  }
  return RationalVarianceFunction(poly_substitute(num_, origin, scale),
                                  poly_substitute(den_, origin, scale),
                                  (anchor_ - origin) / scale,
                                  std::max(num_.size(), den_.size()) - 1);
}

RationalVarianceFunction RationalVarianceFunction::divided_by(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ValidationError("variance scaling factor must be positive");
  }
  std::vector<double> num = num_;
  for (double& c : num) {
    c /= factor;
  }
  return RationalVarianceFunction(std::move(num), den_, anchor_,
                                  std::max(num_.size(), den_.size()) - 1);
}

}  // namespace freefam

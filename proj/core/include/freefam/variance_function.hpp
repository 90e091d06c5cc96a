#ifndef FREEFAM_VARIANCE_FUNCTION_HPP
#define FREEFAM_VARIANCE_FUNCTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "freefam/series.hpp"

namespace freefam {

inline constexpr std::size_t kMaxVarianceDegree = 8;

/// V(m) = P(m) / Q(m) together with the anchor mean m0 of the generating
/// measure. Construction enforces Q(m0) != 0 and V(m0) > 0.
class RationalVarianceFunction {
 public:
  /// Coefficient lists are in ascending powers of m. Trailing zeros are
  /// dropped before the degree bound is checked.
  RationalVarianceFunction(std::vector<double> numerator, std::vector<double> denominator,
                           double anchor_mean, std::size_t max_degree = kMaxVarianceDegree);

  /// V(m) = sigma2 everywhere.
  static RationalVarianceFunction constant(double sigma2, double anchor_mean = 0.0);
  /// V(m) = 1 + a m + b m^2 anchored at 0.
  static RationalVarianceFunction quadratic(double a, double b);

  double operator()(double m) const;
  double derivative(double m) const;
  double anchor_mean() const { return anchor_; }
  double anchor_value() const { return (*this)(anchor_); }

  std::span<const double> numerator() const { return num_; }
  std::span<const double> denominator() const { return den_; }

  /// True when Q(m) == 0.
  bool has_pole_at(double m) const;

  /// Taylor coefficients of x -> V(m0 + x) up to degree `order`.
  TruncatedSeries taylor(std::size_t order) const;

  /// W(u) = V(origin + scale * u), anchored at (m0 - origin) / scale.
  RationalVarianceFunction affine_substitute(double origin, double scale) const;

  /// V / factor with the same anchor.
  RationalVarianceFunction divided_by(double factor) const;

 private:
  std::vector<double> num_;
  std::vector<double> den_;
  double anchor_;
};

/// Evaluates sum coeffs[k] x^k.
double polyval(std::span<const double> coeffs, double x);

/// Coefficients of u -> p(origin + scale * u).
std::vector<double> poly_substitute(std::span<const double> coeffs, double origin, double scale);

}  // namespace freefam

#endif  // FREEFAM_VARIANCE_FUNCTION_HPP

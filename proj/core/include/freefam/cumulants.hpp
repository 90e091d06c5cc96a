#ifndef FREEFAM_CUMULANTS_HPP
#define FREEFAM_CUMULANTS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "freefam/moments.hpp"
#include "freefam/sequences.hpp"
#include "freefam/series.hpp"
#include "freefam/variance_function.hpp"

namespace freefam {

/// Free cumulants c_1..c_N of the measure generating the free exponential
/// family with variance function V: c_1 = m0 and
/// c_(n+1) = (1/n) [x^(n-1)] V(m0 + x)^n.
CumulantSequence cumulants_from_variance(const RationalVarianceFunction& v,
                                         std::size_t order = kDefaultOrder);

/// Taylor coefficients of V about m0 = c_1, recovered from R((m - m0)/V(m)) = m.
/// Needs order + 2 cumulants; by default returns the longest expansion the
/// sequence determines (order = c.order() - 2).
TruncatedSeries variance_from_cumulants(const CumulantSequence& c);
TruncatedSeries variance_from_cumulants(const CumulantSequence& c, std::size_t order);

/// Law of X / r: c_k -> c_k / r^k.
struct Dilate {
  double r;
};
/// nu_lambda = D_lambda(nu^(boxplus lambda)): c_1 kept, c_(n+1) -> c_(n+1) / lambda^n.
struct Power {
  double lambda;
};
/// Free convolution with another law: c_k + d_k.
struct Convolve {
  CumulantSequence other;
};
using CumulantAction = std::variant<Dilate, Power, Convolve>;

struct TransformedCumulants {
  CumulantSequence cumulants;
  /// Set for free powers with lambda < 1, which are defined on sequences but
  /// need not correspond to a measure.
  bool formal = false;
};

TransformedCumulants transform_cumulants(const CumulantSequence& c, const CumulantAction& action);

/// V*(u) = V(m0 + u sqrt(V(m0))) / V(m0), anchored at 0 with V*(0) = 1.
RationalVarianceFunction standardize_variance(const RationalVarianceFunction& v);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, double>> witness;
};

struct AdmissibilityOptions {
  /// Largest Hankel matrix examined.
  std::size_t hankel_size = 8;
  /// Half-width of the z-map window around the standardized anchor; unset
  /// means 0.1 * sqrt(V*(0)) = 0.1.
  std::optional<double> window;
  /// Log-spaced sample points per side of the anchor.
  std::size_t samples = 64;
  double hankel_tolerance = kHankelTolerance;
};

/// Necessary-condition checks on a candidate variance function, all run on
/// its standardized form.
///
/// `checks` holds the admissibility conditions: the z-map
/// z(u) = u + V*(u)/u decreasing on both sides of 0, V*''(0) >= -2, and
/// positivity of the moment Hankel minors. `overall` is their conjunction.
/// `infinitely_divisible_checks` holds the conditions for a
/// boxplus-infinitely divisible generator (the shifted cumulants
/// c_2, c_3, ... forming a moment sequence, and V*''(0) >= 0); they feed
/// `infinitely_divisible` only.
struct AdmissibilityReport {
  std::vector<CheckResult> checks;
  bool overall = false;
  std::vector<CheckResult> infinitely_divisible_checks;
  bool infinitely_divisible = false;

  const CheckResult* find(const std::string& name) const;
};

AdmissibilityReport admissibility_report(const RationalVarianceFunction& v,
                                         const AdmissibilityOptions& options = {});

}  // namespace freefam

#endif  // FREEFAM_CUMULANTS_HPP

#ifndef FREEFAM_FREECONV_HPP
#define FREEFAM_FREECONV_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "freefam/sequences.hpp"
#include "freefam/series.hpp"
#include "freefam/variance_function.hpp"

namespace freefam {

struct ConvergenceReport {
  std::vector<double> grid;
  std::vector<double> distances;
  /// Least-squares slope of log(distance) against log(grid); NaN when a
  /// distance is zero or the grid has fewer than two points.
  double slope = 0.0;
};

/// Permission to take free powers with 0 < lambda < 1.
enum class PowerPolicy { MeasureOnly, AllowFormal };

/// Cumulants of nu_lambda = D_lambda(nu^(boxplus lambda)), the generator of
/// the family with variance function V / lambda.
CumulantSequence reproductive_family(const RationalVarianceFunction& v, double lambda,
                                     std::size_t order = kDefaultOrder,
                                     PowerPolicy policy = PowerPolicy::MeasureOnly);

/// Cumulants of D_sqrt(n)(nu^(boxplus n)): c_k -> c_k n^(1 - k/2). Requires
/// |c_1| <= tolerance.
CumulantSequence clt_cumulants(const CumulantSequence& c, double n, double tolerance = 1e-12);

/// Moments mu_1..mu_K of P_theta, the member with mean `mean` of the family
/// generated by the law with cumulants `generator`, where theta = psi(mean).
/// Uses mu_k - theta mu_(k+1) = (1 - theta mean) g_k; runs the recursion
/// forward when |theta| rho > 1/2 and otherwise sums
/// mu_k = (1 - theta mean) sum_j theta^j g_(k+j), rho being
/// support_bound(generator).
std::vector<double> family_member_moments(const CumulantSequence& generator, double theta,
                                          double mean, std::size_t count);

struct MpApproximationOptions {
  std::size_t moments = 8;
  /// |m| must stay below this; unset means 0.5 min(sigma, sigma^2),
  /// sigma^2 = V(m0).
  std::optional<double> window;
};

/// Moment distance between sqrt(lambda)(Y_lambda - m0), Y_lambda the member
/// of the family with variance V/lambda and mean m0 + m/sqrt(lambda), and
/// the constant-variance member pi_(m, 1/V(m0)), for each lambda in the grid.
ConvergenceReport mp_approximation(const RationalVarianceFunction& v, std::span<const double> lambdas,
                                   double m, const MpApproximationOptions& options = {});

/// Distance max_k |c_k(V_lambda) - c_k(V(m0))| with V_lambda(u) = V(m0 + u/sqrt(lambda)).
ConvergenceReport mora_check(const RationalVarianceFunction& v, std::span<const double> lambdas,
                             std::size_t order = kDefaultOrder);

/// Slope of the least-squares line through (log x, log y).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace freefam

#endif  // FREEFAM_FREECONV_HPP

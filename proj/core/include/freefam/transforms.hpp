#ifndef FREEFAM_TRANSFORMS_HPP
#define FREEFAM_TRANSFORMS_HPP

#include "freefam/measures.hpp"
#include "freefam/sequences.hpp"
#include "freefam/series.hpp"
#include "freefam/variance_function.hpp"

namespace freefam {

/// Series view of G, K = G^(-1) and R = K - 1/z for a cumulant sequence
/// c_1..c_N.
struct TransformBundle {
  /// R(z) = sum_n c_n z^(n-1), order N - 1.
  TruncatedSeries r_series;
  /// G as a series in w = 1/z: G = sum_k m_k w^(k+1), order N + 1, so
  /// g_tail[k + 1] = m_k for k = 0..N.
  TruncatedSeries g_tail;
  /// Coefficient of 1/z in K; the regular part of K is r_series.
  double k_pole = 1.0;
};

TransformBundle bundle_from_cumulants(const CumulantSequence& c);

/// Cauchy-Stieltjes transform of nu at a real z outside the support.
double g_numeric(const Measure& nu, double z);

struct ThetaMaps {
  double normalizer;  // M(theta)
  double mean;
  double variance;
};

/// M(theta), the mean and the variance of P_theta. Uses the forms
/// mean = int x/(1 - theta x) dnu / M and
/// (mean - m0)/theta = int x (x - m0)/(1 - theta x) dnu / M, which are the
/// continuous extensions through theta = 0.
ThetaMaps theta_maps(const Measure& nu, double theta);

/// |theta| below this keeps 1 - theta x >= 1/2 on the support of nu.
double default_theta_window(const Measure& nu);

struct MeanParametrization {
  double theta;     // psi(m)
  double z;         // 1/psi(m); infinite at m = m0
  double g_target;  // value G must take at z
};

/// psi(m) = (m - m0)/(m (m - m0) + V(m)), z = m + V(m)/(m - m0) and
/// G(z) = (m - m0)/V(m). At m = m0: theta = 0, z = +inf, g_target = 0.
MeanParametrization mean_to_theta(const RationalVarianceFunction& v, double m);

}  // namespace freefam

#endif  // FREEFAM_TRANSFORMS_HPP

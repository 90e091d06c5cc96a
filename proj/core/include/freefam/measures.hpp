#ifndef FREEFAM_MEASURES_HPP
#define FREEFAM_MEASURES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freefam/quadrature.hpp"
#include "freefam/variance_function.hpp"

namespace freefam {

struct Atom {
  double location;
  double mass;
};

/// Absolutely continuous part: a density on the open interval (lo, hi).
struct ContinuousPart {
  double lo;
  double hi;
  std::function<double(double)> density;
};

/// Compactly supported law: an optional density on an interval plus finitely
/// many atoms. Immutable; integrals use the quadrature rule it carries.
class Measure {
 public:
  Measure(std::optional<ContinuousPart> continuous, std::vector<Atom> atoms,
          std::string description, std::vector<std::string> notes = {},
          ArcsineQuadrature quadrature = ArcsineQuadrature{});

  const std::optional<ContinuousPart>& continuous() const { return continuous_; }
  std::span<const Atom> atoms() const { return atoms_; }
  const std::string& description() const { return description_; }
  /// Construction remarks, e.g. atom masses clamped at zero.
  std::span<const std::string> notes() const { return notes_; }
  const ArcsineQuadrature& quadrature() const { return quadrature_; }

  /// Density of the continuous part; zero outside (lo, hi).
  double density(double x) const;

  /// Integral of f against the measure (quadrature plus atom sum).
  double integrate(const std::function<double(double)>& f) const;

  /// Smallest closed interval containing the support.
  double hull_lo() const;
  double hull_hi() const;
  /// max |x| over the support.
  double support_radius() const;

  /// True for z in the closed interval [lo, hi] of the continuous part.
  bool in_continuous_support(double z) const;

 private:
  std::optional<ContinuousPart> continuous_;
  std::vector<Atom> atoms_;
  std::string description_;
  std::vector<std::string> notes_;
  ArcsineQuadrature quadrature_;
};

inline constexpr std::size_t kMaxMomentOrder = 16;

/// Integral of x^k; k <= kMaxMomentOrder.
double measure_moment(const Measure& nu, std::size_t k);
double total_mass(const Measure& nu);
double mean(const Measure& nu);
double variance(const Measure& nu);

/// (a, b) of V(m) = 1 + a m + b m^2, b >= -1.
struct MeixnerParams {
  double a;
  double b;
};

/// The six types of free Meixner laws, up to dilation and shift.
enum class MeixnerType { Semicircle, FreePoisson, FreePascal, FreeGamma, FreeHyperbolic, FreeBinomial };

MeixnerType meixner_type(MeixnerParams p);
const char* to_string(MeixnerType type);

/// Generating measure of the free exponential family with V(m) = 1 + a m + b m^2,
/// m0 = 0. Atom masses that the closed-form expressions make negative are
/// clamped to zero and reported in notes(); zero-mass atoms are dropped.
/// For b = -1 the law is purely atomic.
Measure meixner_measure(MeixnerParams p, ArcsineQuadrature quadrature = ArcsineQuadrature{});

/// Closed-form Cauchy-Stieltjes transform of meixner_measure(p) at real z
/// outside the support, on the branch with z G(z) -> 1 at infinity.
double meixner_g_closed(MeixnerParams p, double z);

/// Semicircle law with the given mean and standard deviation.
Measure semicircle_measure(double mean, double sd, ArcsineQuadrature quadrature = ArcsineQuadrature{});

/// Member with mean m of the free exponential family with constant variance
/// 1/lambda generated by the centered semicircle; requires m^2 <= 1/lambda.
Measure mp_member(double m, double lambda, ArcsineQuadrature quadrature = ArcsineQuadrature{});

/// M(theta) = integral of 1/(1 - theta x); requires theta x < 1 on the support.
double cauchy_kernel_normalizer(const Measure& nu, double theta);

/// P_theta(dx) = nu(dx) / (M(theta) (1 - theta x)).
Measure kernel_reweight(const Measure& nu, double theta);

/// Total-mass slack accepted by family_member.
inline constexpr double kFamilyMassTolerance = 1e-6;

/// Q_m(dx) = V(m) / (V(m) + (m - m0)(m - x)) nu(dx), m0 = V.anchor_mean().
/// Throws unless the weight is positive on the support and Q_m has mass 1.
Measure family_member(const Measure& nu, const RationalVarianceFunction& v, double m);

}  // namespace freefam

#endif  // FREEFAM_MEASURES_HPP

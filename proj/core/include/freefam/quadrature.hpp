#ifndef FREEFAM_QUADRATURE_HPP
#define FREEFAM_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace freefam {

inline constexpr std::size_t kDefaultQuadratureNodes = 2000;

/// Composite 10-point Gauss-Legendre rule applied after the substitution
/// x = c + r sin(t), which turns square-root behavior at both ends of
/// [lo, hi] into a smooth integrand in t.
class ArcsineQuadrature {
 public:
  /// Total node count; rounded up to a whole number of 10-point panels.
  explicit ArcsineQuadrature(std::size_t nodes = kDefaultQuadratureNodes);

  std::size_t nodes() const { return panels_ * kPanelNodes; }

  /// Integral of f over (lo, hi). The endpoints are never evaluated.
  double integrate(double lo, double hi, const std::function<double(double)>& f) const;

 private:
  static constexpr std::size_t kPanelNodes = 10;
  std::size_t panels_;
};

}  // namespace freefam

#endif  // FREEFAM_QUADRATURE_HPP

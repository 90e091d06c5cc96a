#include "freefam/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "freefam/error.hpp"

namespace freefam {

ArcsineQuadrature::ArcsineQuadrature(std::size_t nodes)
    : panels_((nodes + kPanelNodes - 1) / kPanelNodes) {
  if (panels_ == 0) {
    throw ValidationError("quadrature needs at least one node");
  }
}

double ArcsineQuadrature::integrate(double lo, double hi,
                                    const std::function<double(double)>& f) const {
  if (!(hi > lo)) {
    return 0.0;
  }
  using Rule = boost::math::quadrature::gauss<double, kPanelNodes>;
  const auto& abscissa = Rule::abscissa();
  const auto& weights = Rule::weights();

  const double center = 0.5 * (lo + hi);
  const double radius = 0.5 * (hi - lo);
  const double width = std::numbers::pi / static_cast<double>(panels_);
  auto integrand = [&](double t) {
    return f(center + radius * std::sin(t)) * radius * std::cos(t);
  };

  double total = 0.0;
  for (std::size_t p = 0; p < panels_; ++p) {
    const double mid = -0.5 * std::numbers::pi + (static_cast<double>(p) + 0.5) * width;
    const double half = 0.5 * width;
    // Boost stores the non-negative half of a symmetric rule.
    double panel = 0.0;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      const double offset = half * abscissa[i];
      if (offset == 0.0) {
        panel += weights[i] * integrand(mid);
      } else {
        panel += weights[i] * (integrand(mid - offset) + integrand(mid + offset));
      }
    }
    total += half * panel;
  }
  return total;
}

}  // namespace freefam

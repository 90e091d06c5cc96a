#ifndef FREEFAM_TESTS_TEST_SUPPORT_HPP
#define FREEFAM_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "freefam/sequences.hpp"
#include "freefam/variance_function.hpp"

namespace freefam::testing {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double max_rel_err(std::span<const double> got, std::span<const double> want) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    worst = std::max(worst, rel_err(got[i], want[i]));
  }
  return got.size() == want.size() ? worst : INFINITY;
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  std::vector<double> uniform_vector(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (double& x : out) {
      x = uniform(lo, hi);
    }
    return out;
  }

  CumulantSequence cumulants(std::size_t n) { return CumulantSequence(uniform_vector(n, -1.0, 1.0)); }

  // Random rational V of degree <= 2/2 with V(m0) in [0.5, 2]. Coefficients
  // are kept small: the inverse map loses about log10(|c_(N+2)| / |V_N|)
  // digits, so a V that nearly vanishes near m0 cannot roundtrip at 1e-10
  // in double precision.
  RationalVarianceFunction variance() {
    const double m0 = uniform(-0.5, 0.5);
    const double target = uniform(0.5, 2.0);
    std::vector<double> den{1.0, uniform(-0.2, 0.2), uniform(-0.2, 0.2)};
    std::vector<double> num{0.0, uniform(-0.5, 0.5), uniform(-0.5, 0.5)};
    const double q = polyval(den, m0);
    const double p = polyval(num, m0);
    num[0] = target * q - p;
    return RationalVarianceFunction(num, den, m0);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace freefam::testing

#endif  // FREEFAM_TESTS_TEST_SUPPORT_HPP

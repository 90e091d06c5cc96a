#include <doctest.h>

#include <cmath>
#include <vector>

#include "freefam/cumulants.hpp"
#include "freefam/error.hpp"
#include "freefam/freeconv.hpp"
#include "freefam/io.hpp"
#include "freefam/measures.hpp"
#include "freefam/moments.hpp"
#include "freefam/transforms.hpp"
#include "test_support.hpp"

using freefam::CumulantSequence;
using freefam::RationalVarianceFunction;
using freefam::testing::rel_err;

namespace {

std::vector<RationalVarianceFunction> quadratic_grid() {
  std::vector<RationalVarianceFunction> out;
  for (double a : {-1.0, 0.0, 1.0, 2.0}) {
    for (double b : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
      out.push_back(RationalVarianceFunction::quadratic(a, b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("reproductive family examples") {
  auto v = RationalVarianceFunction({1, 1, 0.5}, {1, 0.2}, 0.3);
  auto base = freefam::cumulants_from_variance(v, 10);
  CHECK(freefam::reproductive_family(v, 1.0, 10) == base);

  auto half = freefam::reproductive_family(RationalVarianceFunction::constant(1.0), 2.0, 6);
  CHECK(std::vector<double>(half.values().begin(), half.values().end()) == std::vector<double>{0, 0.5, 0, 0, 0, 0});

  auto poisson = freefam::reproductive_family(RationalVarianceFunction({1, 1}, {1}, 0.0), 10.0, 6);
  const std::vector<double> want{0, 0.1, 0.01, 0.001, 1e-4, 1e-5};
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(rel_err(poisson(k), want[k - 1]) <= 1e-14);
  }

  CHECK_THROWS(freefam::reproductive_family(v, 0.0));
  CHECK_THROWS(freefam::reproductive_family(v, -1.0));
  CHECK_THROWS(freefam::reproductive_family(v, 0.5));
  CHECK_NOTHROW(freefam::reproductive_family(v, 0.5, 8, freefam::PowerPolicy::AllowFormal));
}

TEST_CASE("reproductive identity") {
  for (const auto& v : quadratic_grid()) {
    auto base = freefam::cumulants_from_variance(v, 12);
    for (double lambda : {1.0, 2.0, 10.0}) {
      auto got = freefam::reproductive_family(v, lambda, 12);
      auto direct = freefam::cumulants_from_variance(v.divided_by(lambda), 12);
      auto powered = freefam::transform_cumulants(base, freefam::Power{lambda}).cumulants;
      for (std::size_t k = 1; k <= 12; ++k) {
        CHECK(std::abs(got(k) - direct(k)) <= 1e-12 * std::abs(direct(k)));
        CHECK(std::abs(got(k) - powered(k)) <= 1e-12 * std::abs(powered(k)));
      }
    }
  }
}

TEST_CASE("free powers compose") {
  for (const auto& v : quadratic_grid()) {
    for (auto [lambda, mu] : {std::pair{2.0, 3.0}, std::pair{1.5, 10.0}}) {
      auto joint = freefam::reproductive_family(v, lambda * mu, 12);
      auto staged = freefam::reproductive_family(v.divided_by(lambda), mu, 12);
      auto twice = freefam::transform_cumulants(freefam::reproductive_family(v, lambda, 12), freefam::Power{mu}).cumulants;
      for (std::size_t k = 1; k <= 12; ++k) {
        CHECK(rel_err(joint(k), staged(k)) <= 1e-12);
        CHECK(rel_err(joint(k), twice(k)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("CLT cumulants examples") {
  CumulantSequence c({0, 1, 1, 1, 1});
  auto r = freefam::clt_cumulants(c, 100);
  const std::vector<double> want{0, 1, 0.1, 0.01, 0.001};
  for (std::size_t k = 1; k <= 5; ++k) {
    CHECK(rel_err(r(k), want[k - 1]) <= 1e-14);
  }
  CHECK(freefam::clt_cumulants(c, 1) == c);
  CHECK_THROWS_WITH(freefam::clt_cumulants(CumulantSequence({0.5, 1}), 10), "generator must be centered");
}

TEST_CASE("CLT bound") {
  freefam::testing::Generator gen(51);
  for (int trial = 0; trial < 100; ++trial) {
    auto values = gen.uniform_vector(10, -1, 1);
    values[0] = 0.0;
    CumulantSequence c(values);
    double biggest = 0.0;
    for (double x : values) biggest = std::max(biggest, std::abs(x));
    for (double n : {4.0, 9.0, 100.0, 1e4}) {
      auto r = freefam::clt_cumulants(c, n);
      double gap = std::abs(r(2) - c(2));
      for (std::size_t k = 3; k <= 10; ++k) gap = std::max(gap, std::abs(r(k)));
      REQUIRE(gap <= biggest / std::sqrt(n) + 1e-15);
    }
  }
}

TEST_CASE("family member moments match quadrature") {
  auto check_family = [](const freefam::Measure& nu, const CumulantSequence& c, double theta) {
    const double mean = freefam::theta_maps(nu, theta).mean;
    auto got = freefam::family_member_moments(c, theta, mean, 8);
    auto p = freefam::kernel_reweight(nu, theta);
    REQUIRE(got.size() == 8);
    for (std::size_t k = 1; k <= 8; ++k) {
      CHECK(std::abs(got[k - 1] - freefam::measure_moment(p, k)) <= 1e-8 * std::max(1.0, std::abs(got[k - 1])));
    }
  };
  // Semicircle: support bound 4, so 0.1 takes the series and 0.2 the
  // forward recursion.
  auto semi = freefam::semicircle_measure(0.0, 1.0);
  auto c = freefam::cumulants_from_variance(RationalVarianceFunction::constant(1.0), 72);
  for (double theta : {-0.2, -0.1, 0.0, 0.05, 0.1, 0.2}) {
    check_family(semi, c, theta);
  }
  auto nu = freefam::meixner_measure({1.0, 0.5});
  auto cm = freefam::cumulants_from_variance(RationalVarianceFunction::quadratic(1.0, 0.5), 72);
  for (double theta : {-0.1, -0.02, 0.03, 0.1}) {
    check_family(nu, cm, theta);
  }
  CHECK_THROWS(freefam::family_member_moments(CumulantSequence({0, 1, 0}), 0.1, 0.1, 8));
}

TEST_CASE("MP approximation with constant variance is exact") {
  const std::vector<double> grid{10, 100, 1000};
  for (double s2 : {0.5, 1.0, 2.0}) {
    for (double m : {-0.2, 0.0, 0.2}) {
      auto r = freefam::mp_approximation(RationalVarianceFunction::constant(s2), grid, m);
      for (double d : r.distances) {
        CHECK(d <= 1e-9);
      }
    }
  }
}

TEST_CASE("MP approximation examples") {
  const std::vector<double> grid{100, 1000, 10000};
  auto r = freefam::mp_approximation(RationalVarianceFunction({1, 1}, {1}, 0.0), grid, 0.3);
  REQUIRE(r.distances.size() == 3);
  CHECK(r.distances[0] > r.distances[1]);
  CHECK(r.distances[1] > r.distances[2]);
  const double ratio = r.distances[0] / r.distances[2];
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 12.0 * 1.2);
  CHECK(std::abs(r.slope + 0.5) <= 0.1);

  // At m = 0 the target is the semicircle with variance V(m0).
  auto semi_target = freefam::mp_approximation(RationalVarianceFunction({2, 1}, {1}, 0.0), grid, 0.0);
  CHECK(semi_target.distances[2] < semi_target.distances[0]);

  CHECK_THROWS_WITH(freefam::mp_approximation(RationalVarianceFunction({1, 1}, {1}, 0.0), grid, 0.6),
                    "m outside window (|m| < 0.5)");
  const std::vector<double> unsorted{100, 10};
  CHECK_THROWS(freefam::mp_approximation(RationalVarianceFunction({1, 1}, {1}, 0.0), unsorted, 0.1));
  const std::vector<double> small{0.5, 10};
  CHECK_THROWS(freefam::mp_approximation(RationalVarianceFunction({1, 1}, {1}, 0.0), small, 0.1));
}

TEST_CASE("MP approximation distances decrease for the quadratic family") {
  const std::vector<double> grid{10, 100, 1000, 10000};
  for (double a : {-1.0, 0.5, 1.0, 2.0}) {
    for (double b : {0.0, 0.5, 1.0}) {
      for (double m : {-0.25, 0.15, 0.3}) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(m);
        auto r = freefam::mp_approximation(RationalVarianceFunction::quadratic(a, b), grid, m);
        for (std::size_t i = 1; i < r.distances.size(); ++i) {
          CHECK(r.distances[i] <= r.distances[i - 1]);
        }
      }
    }
  }
}

TEST_CASE("Mora check examples") {
  const std::vector<double> grid{4, 100, 10000};
  for (double d : freefam::mora_check(RationalVarianceFunction::constant(1.0), grid, 10).distances) {
    CHECK(d == 0.0);
  }

  for (double lambda : grid) {
    const double s = std::sqrt(lambda);
    auto lin = freefam::cumulants_from_variance(RationalVarianceFunction({1, 1}, {1}, 0.0).affine_substitute(0.0, 1 / s), 6);
    CHECK(lin(3) == doctest::Approx(1 / s).epsilon(1e-13));
    auto gamma = freefam::cumulants_from_variance(RationalVarianceFunction({1, 2, 1}, {1}, 0.0).affine_substitute(0.0, 1 / s), 6);
    CHECK(gamma(3) == doctest::Approx(2 / s).epsilon(1e-13));
    CHECK(gamma(4) == doctest::Approx(5 / lambda).epsilon(1e-13));
  }

  auto r = freefam::mora_check(RationalVarianceFunction({1, 1}, {1}, 0.0), grid, 10);
  CHECK(r.distances[0] == doctest::Approx(0.5));
  CHECK(r.distances[2] == doctest::Approx(0.01));
  CHECK(r.slope == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("log-log slope") {
  const std::vector<double> x{1, 10, 100};
  const std::vector<double> y{1, 0.1, 0.01};
  CHECK(freefam::log_log_slope(x, y) == doctest::Approx(-1.0));
  const std::vector<double> zero{1, 0, 1};
  CHECK(std::isnan(freefam::log_log_slope(x, zero)));
  CHECK(std::isnan(freefam::log_log_slope(std::span<const double>(x).first(1), std::span<const double>(y).first(1))));
}

TEST_CASE("convergence report JSON") {
  freefam::ConvergenceReport r{{100, 1000}, {0.5, 0.25}, -0.30102999566398114};
  CHECK(freefam::convergence_report_json(r) == R"({"grid":[100,1000],"distances":[0.5,0.25],"slope":-0.30102999566398114})");
  r.slope = NAN;
  CHECK(freefam::convergence_report_json(r).find("\"slope\":null") != std::string::npos);
}

#include "freefam/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "freefam/error.hpp"

namespace freefam {

namespace {

void require_finite(std::span<const double> coeffs, const char* context) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw ValidationError(std::string(context) + ": non-finite coefficient");
    }
  }
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw ValidationError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, 0.0) {}

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, 0.0);
  require_finite(coeffs_, "series");
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw ValidationError("series needs at least one coefficient");
  }
  const std::size_t order = coeffs.size() - 1;
  return TruncatedSeries(std::move(coeffs), order);
}

TruncatedSeries TruncatedSeries::constant(double value, std::size_t order) {
  return TruncatedSeries({value}, order);
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries x(order);
  if (order >= 1) {
    x.coeffs_[1] = 1.0;
  }
  return x;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const {
  return TruncatedSeries(coeffs_, order);
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries d(order());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.coeffs_[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return d;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] -= rhs.coeffs_[k];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(double s) {
  for (double& c : coeffs_) {
    c *= s;
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  TruncatedSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
      acc += a.coeffs_[i] * b.coeffs_[k - i];
    }
    out.coeffs_[k] = acc;
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0.0) {
    throw ValidationError("non-invertible series");
  }
  const std::size_t n = a.order();
  std::vector<double> b(n + 1, 0.0);
  b[0] = 1.0 / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc += a[i] * b[k - i];
    }
    b[k] = -acc * b[0];
  }
  return TruncatedSeries(std::move(b), n);
}

TruncatedSeries pow(const TruncatedSeries& a, long long exponent) {
  if (exponent < 0) {
    throw ValidationError("series power requires a natural exponent");
  }
  TruncatedSeries result = TruncatedSeries::constant(1.0, a.order());
  TruncatedSeries base = a;
  while (exponent > 0) {
    if (exponent & 1) {
      result = result * base;
    }
    exponent >>= 1;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  if (g[0] != 0.0) {
    throw ValidationError("inner series must vanish at origin");
  }
  // Sum f_j g^j. Since g[0] == 0, g^j has exact zeros below degree j.
  const std::size_t n = f.order();
  TruncatedSeries result = TruncatedSeries::constant(f[0], n);
  TruncatedSeries power = TruncatedSeries::constant(1.0, n);
  for (std::size_t j = 1; j <= n; ++j) {
    power = power * g;
    result += f[j] * power;
  }
  return result;
}

TruncatedSeries revert(const TruncatedSeries& f) {
  const std::size_t n = f.order();
  if (f[0] != 0.0) {
    throw ValidationError("inner series must vanish at origin");
  }
  if (n == 0) {
    return TruncatedSeries(0);
  }
  if (f[1] == 0.0) {
    throw ValidationError("non-invertible at origin");
  }

  std::vector<double> g(n + 1, 0.0);
  g[1] = 1.0 / f[1];
  const TruncatedSeries df = f.derivative();

  // `known` counts correct leading coefficients of g.
  std::size_t known = 2;
  while (known <= n) {
    const std::size_t next = std::min(2 * known, n + 1);
    const std::size_t work = next - 1;
    const TruncatedSeries gw(g, work);
    TruncatedSeries residual = compose(f.with_order(work), gw) - TruncatedSeries::variable(work);
    const TruncatedSeries slope = compose(df.with_order(work), gw);
    const TruncatedSeries step = residual * reciprocal(slope);
    for (std::size_t k = known; k < next; ++k) {
      g[k] = -step[k];
    }
    known = next;
  }
  TruncatedSeries out(std::move(g), n);
  require_finite(out.coeffs(), "series reversion");
  return out;
}

}  // namespace freefam

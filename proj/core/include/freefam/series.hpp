#ifndef FREEFAM_SERIES_HPP
#define FREEFAM_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace freefam {

inline constexpr std::size_t kDefaultOrder = 16;

/// Real formal power series truncated at degree `order()` (inclusive).
///
/// Every operation computes coefficient k from input coefficients of index
/// at most k, with the same floating-point operations regardless of the
/// truncation order, so raising the order never changes earlier
/// coefficients.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order = kDefaultOrder);

  /// Coefficients are padded with zeros or cut to length order + 1.
  TruncatedSeries(std::vector<double> coeffs, std::size_t order);

  /// Order is taken from the coefficient count.
  static TruncatedSeries from_coeffs(std::vector<double> coeffs);
  static TruncatedSeries constant(double value, std::size_t order);
  /// The series x.
  static TruncatedSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const double> coeffs() const { return coeffs_; }

  TruncatedSeries with_order(std::size_t order) const;
  /// Formal derivative; the top coefficient of the result is zero.
  TruncatedSeries derivative() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(double s);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(TruncatedSeries lhs, double s) { return lhs *= s; }
  friend TruncatedSeries operator*(double s, TruncatedSeries rhs) { return rhs *= s; }
  friend TruncatedSeries operator-(TruncatedSeries s) { return s *= -1.0; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<double> coeffs_;
};

/// 1/a; requires a[0] != 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// a^exponent for a natural exponent.
TruncatedSeries pow(const TruncatedSeries& a, long long exponent);

/// f(g(x)); requires g[0] == 0 and equal orders.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse g with f(g(x)) = g(f(x)) = x.
///
/// Requires f[0] == 0 and f[1] != 0. Computed by Newton iteration on the
/// equation f(g) = x, doubling the number of correct coefficients per step;
/// coefficients already correct are never touched again.
TruncatedSeries revert(const TruncatedSeries& f);

}  // namespace freefam

#endif  // FREEFAM_SERIES_HPP

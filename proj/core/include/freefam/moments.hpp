#ifndef FREEFAM_MOMENTS_HPP
#define FREEFAM_MOMENTS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "freefam/sequences.hpp"

namespace freefam {

/// Relative tolerance for every "determinant >= 0" decision.
inline constexpr double kHankelTolerance = 1e-9;

/// Largest n accepted by the non-crossing partition enumerator.
inline constexpr std::size_t kMaxEnumeration = 14;

/// Moments m_1..m_N of the law with free cumulants c, via the block
/// recursion m_n = sum_s c_s [x^(n-s)] M(x)^s, M(x) = sum_i m_i x^i.
MomentSequence moments_from_cumulants(const CumulantSequence& c, std::size_t order);
MomentSequence moments_from_cumulants(const CumulantSequence& c);

/// Inverse of moments_from_cumulants.
CumulantSequence cumulants_from_moments(const MomentSequence& m, std::size_t order);
CumulantSequence cumulants_from_moments(const MomentSequence& m);

/// Partition of {1..n} into pairwise non-crossing blocks.
class NonCrossingPartition {
 public:
  /// labels[i] is the block of element i + 1; blocks are numbered in order
  /// of their smallest element.
  explicit NonCrossingPartition(std::vector<int> labels);

  std::size_t size() const { return labels_.size(); }
  std::span<const int> labels() const { return labels_; }
  /// Blocks as sorted lists of 1-based elements, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;

 private:
  std::vector<int> labels_;
};

/// Calls `visit` with the block labels of every non-crossing partition of
/// {1..n}, each exactly once. Throws past kMaxEnumeration.
void for_each_nc_partition(std::size_t n, const std::function<void(std::span<const int>)>& visit);

std::vector<NonCrossingPartition> enumerate_nc_partitions(std::size_t n);

/// m_n as the literal sum over non-crossing partitions of prod c_|B|.
/// Exists to check moments_from_cumulants.
double moments_via_nc_oracle(const CumulantSequence& c, std::size_t n);

struct HankelResult {
  std::vector<double> determinants;  // leading principal minors, sizes 1..K
  bool passed = false;
};

/// Leading principal minors of [h_(i+j)], 0 <= i, j < size, for a raw
/// sequence h_0, h_1, ... . A minor of size k passes when it is at least
/// -tolerance * s^k, where s is the largest |h_j| entering the matrix
/// (floored at 1).
HankelResult hankel_determinants(std::span<const double> h, std::size_t size,
                                 double tolerance = kHankelTolerance);

/// Hankel test on the moment matrix [m_(i+j)] with m_0 = 1.
HankelResult hankel_psd(const MomentSequence& m, std::size_t size,
                        double tolerance = kHankelTolerance);

/// 4 M + |c_1| with M = max_{2<=k<=N} |c_k|^(1/k): outer bound on the support
/// radius from the Catalan count of non-crossing partitions.
double support_bound(const CumulantSequence& c);

}  // namespace freefam

#endif  // FREEFAM_MOMENTS_HPP

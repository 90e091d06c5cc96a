#ifndef FREEFAM_SEQUENCES_HPP
#define FREEFAM_SEQUENCES_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freefam/error.hpp"

namespace freefam {

/// Real sequence x_1..x_N indexed from one. The tag keeps cumulants and
/// moments from being mixed up at call sites.
template <class Tag>
class OneBasedSequence {
 public:
  OneBasedSequence() = default;

  /// values[0] is x_1.
  explicit OneBasedSequence(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
      if (!std::isfinite(v)) {
        throw ValidationError(std::string(Tag::kName) + " sequence has a non-finite entry");
      }
    }
  }

  std::size_t order() const { return values_.size(); }

  /// x_k for 1 <= k <= order().
  double operator()(std::size_t k) const { return values_.at(k - 1); }

  /// x_1..x_N as a contiguous range.
  std::span<const double> values() const { return values_; }

  /// Sequence cut (or zero-padded) to `order` entries.
  OneBasedSequence truncated(std::size_t order) const {
    std::vector<double> v = values_;
    v.resize(order, 0.0);
    return OneBasedSequence(std::move(v));
  }

  friend bool operator==(const OneBasedSequence&, const OneBasedSequence&) = default;

 private:
  std::vector<double> values_;
};

struct CumulantTag {
  static constexpr const char* kName = "cumulant";
};
struct MomentTag {
  static constexpr const char* kName = "moment";
};

/// Free cumulants c_1..c_N; c_1 is the mean.
using CumulantSequence = OneBasedSequence<CumulantTag>;

/// Moments m_1..m_N; m_0 = 1 is implicit.
using MomentSequence = OneBasedSequence<MomentTag>;

}  // namespace freefam

#endif  // FREEFAM_SEQUENCES_HPP

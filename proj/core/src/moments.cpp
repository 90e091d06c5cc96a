#include "freefam/moments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "freefam/error.hpp"

namespace freefam {

namespace {

// table[s][j] = [x^j] M(x)^s, filled along anti-diagonals s + j = n as the
// moments become known.
class PowerTable {
 public:
  explicit PowerTable(std::size_t order)
      : rows_(order + 1, std::vector<double>(order + 1, 0.0)), moments_(order + 1, 0.0) {
    rows_[0][0] = 1.0;
    moments_[0] = 1.0;
  }

  // Fills table[s][n - s] for 1 <= s <= n; requires m_0..m_(n-1).
  void fill_antidiagonal(std::size_t n) {
    for (std::size_t s = 1; s <= n; ++s) {
      const std::size_t j = n - s;
      double acc = 0.0;
      for (std::size_t i = 0; i <= j; ++i) {
        acc += moments_[i] * rows_[s - 1][j - i];
      }
      rows_[s][j] = acc;
    }
  }

  double at(std::size_t s, std::size_t j) const { return rows_[s][j]; }
  void set_moment(std::size_t n, double value) { moments_[n] = value; }

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<double> moments_;
};

void require_order(std::size_t requested, std::size_t available) {
  if (requested > available) {
    throw ValidationError("requested order " + std::to_string(requested) +
                          " exceeds sequence order " + std::to_string(available));
  }
}

}  // namespace

MomentSequence moments_from_cumulants(const CumulantSequence& c, std::size_t order) {
  require_order(order, c.order());
  PowerTable table(order);
  std::vector<double> m(order, 0.0);
  for (std::size_t n = 1; n <= order; ++n) {
    table.fill_antidiagonal(n);
    double acc = 0.0;
    for (std::size_t s = 1; s <= n; ++s) {
      acc += c(s) * table.at(s, n - s);
    }
    m[n - 1] = acc;
    table.set_moment(n, acc);
  }
  return MomentSequence(std::move(m));
}

MomentSequence moments_from_cumulants(const CumulantSequence& c) {
  return moments_from_cumulants(c, c.order());
}

CumulantSequence cumulants_from_moments(const MomentSequence& m, std::size_t order) {
  require_order(order, m.order());
  PowerTable table(order);
  std::vector<double> c(order, 0.0);
  for (std::size_t n = 1; n <= order; ++n) {
    table.fill_antidiagonal(n);
    // The s = n term is c_n * [x^0] M^n = c_n.
    double acc = m(n);
    for (std::size_t s = 1; s < n; ++s) {
      acc -= c[s - 1] * table.at(s, n - s);
    }
    c[n - 1] = acc;
    table.set_moment(n, m(n));
  }
  return CumulantSequence(std::move(c));
}

CumulantSequence cumulants_from_moments(const MomentSequence& m) {
  return cumulants_from_moments(m, m.order());
}

NonCrossingPartition::NonCrossingPartition(std::vector<int> labels) : labels_(std::move(labels)) {
  // Labels must be a restricted growth string; then check a < b < c < d
  // with a, c in one block and b, d in another never occurs.
  int next = 0;
  for (int label : labels_) {
    if (label < 0 || label > next) {
      throw ValidationError("partition labels must number blocks by first element");
    }
    if (label == next) {
      ++next;
    }
  }
  const std::size_t n = labels_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (labels_[b] == labels_[a]) {
        continue;
      }
      for (std::size_t c = b + 1; c < n; ++c) {
        if (labels_[c] != labels_[a]) {
          continue;
        }
        for (std::size_t d = c + 1; d < n; ++d) {
          if (labels_[d] == labels_[b]) {
            throw ValidationError("partition blocks cross");
          }
        }
      }
    }
  }
}

std::vector<std::vector<int>> NonCrossingPartition::blocks() const {
  const int count = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

namespace {

// Each element either opens a new block or joins a block still on the
// stack of open blocks; joining block B closes every block opened after B,
// since a later element in any of them would cross B.
void extend(std::size_t i, std::vector<int>& labels, std::vector<int>& open, int block_count,
            const std::function<void(std::span<const int>)>& visit) {
  if (i == labels.size()) {
    visit(labels);
    return;
  }
  labels[i] = block_count;
  open.push_back(block_count);
  extend(i + 1, labels, open, block_count + 1, visit);
  open.pop_back();

  for (std::size_t depth = open.size(); depth-- > 0;) {
    std::vector<int> saved(open.begin() + static_cast<std::ptrdiff_t>(depth) + 1, open.end());
    open.resize(depth + 1);
    labels[i] = open[depth];
    extend(i + 1, labels, open, block_count, visit);
    open.insert(open.end(), saved.begin(), saved.end());
  }
}

}  // namespace

void for_each_nc_partition(std::size_t n, const std::function<void(std::span<const int>)>& visit) {
  if (n > kMaxEnumeration) {
    throw ValidationError("enumeration bound exceeded");
  }
  std::vector<int> labels(n, 0);
  std::vector<int> open;
  extend(0, labels, open, 0, visit);
}

std::vector<NonCrossingPartition> enumerate_nc_partitions(std::size_t n) {
  std::vector<NonCrossingPartition> out;
  for_each_nc_partition(n, [&](std::span<const int> labels) {
    out.emplace_back(std::vector<int>(labels.begin(), labels.end()));
  });
  return out;
}

double moments_via_nc_oracle(const CumulantSequence& c, std::size_t n) {
  require_order(n, c.order());
  std::vector<std::size_t> sizes(n + 1);
  double total = 0.0;
  for_each_nc_partition(n, [&](std::span<const int> labels) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int label : labels) {
      ++sizes[static_cast<std::size_t>(label)];
    }
    double term = 1.0;
    for (std::size_t size : sizes) {
      if (size > 0) {
        term *= c(size);
      }
    }
    total += term;
  });
  return total;
}

HankelResult hankel_determinants(std::span<const double> h, std::size_t size, double tolerance) {
  if (size == 0 || h.size() < 2 * size - 1) {
    throw ValidationError("not enough entries for a Hankel matrix of size " +
                          std::to_string(size));
  }
  const auto n = static_cast<Eigen::Index>(size);
  Eigen::MatrixXd matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      matrix(i, j) = h[static_cast<std::size_t>(i + j)];
    }
  }

  HankelResult result;
  result.passed = true;
  double scale = 1.0;
  for (std::size_t k = 1; k <= size; ++k) {
    scale = std::max({scale, std::abs(h[2 * k - 2]), k >= 2 ? std::abs(h[2 * k - 3]) : 0.0});
    const auto kk = static_cast<Eigen::Index>(k);
    const double det = matrix.topLeftCorner(kk, kk).determinant();
    result.determinants.push_back(det);
    if (!(det >= -tolerance * std::pow(scale, static_cast<double>(k)))) {
      result.passed = false;
    }
  }
  return result;
}

HankelResult hankel_psd(const MomentSequence& m, std::size_t size, double tolerance) {
  std::vector<double> h;
  h.reserve(m.order() + 1);
  h.push_back(1.0);
  h.insert(h.end(), m.values().begin(), m.values().end());
  return hankel_determinants(h, size, tolerance);
}

double support_bound(const CumulantSequence& c) {
  if (c.order() < 2) {
    throw ValidationError("support bound needs at least two cumulants");
  }
  double radius = 0.0;
  for (std::size_t k = 2; k <= c.order(); ++k) {
    radius = std::max(radius, std::pow(std::abs(c(k)), 1.0 / static_cast<double>(k)));
  }
  return 4.0 * radius + std::abs(c(1));
}

}  // namespace freefam

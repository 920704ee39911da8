#include "calib/binning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace calib {

std::string to_string(BinningScheme scheme) {
  return scheme == BinningScheme::EqualWidth ? "equal-width" : "equal-mass";
}

BinningScheme scheme_from_string(const std::string& name) {
  if (name == "equal-width") return BinningScheme::EqualWidth;
  if (name == "equal-mass") return BinningScheme::EqualMass;
  throw std::invalid_argument("unknown binning scheme '" + name +
                              "' (expected equal-width or equal-mass)");
}

namespace {

int equal_width_bin(double c, int m) {
  // (m/M, (m+1)/M] intervals: values exactly on a boundary belong to the
  // bin below, except 0 which stays in bin 0.
  int bin = static_cast<int>(c * m);
  if (bin > 0 && static_cast<double>(bin) == c * m) --bin;
  return std::min(bin, m - 1);
}

}  // namespace

std::vector<int> assign_bins(const std::vector<double>& confidences,
                             const BinningSpec& spec) {
  if (spec.num_bins < 1) {
    throw std::invalid_argument("num_bins must be >= 1");
  }
  for (double c : confidences) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::invalid_argument("confidence outside [0, 1]");
    }
  }

  const std::size_t n = confidences.size();
  std::vector<int> bins(n, 0);
  if (spec.num_bins == 1) return bins;

  if (spec.scheme == BinningScheme::EqualWidth) {
    for (std::size_t i = 0; i < n; ++i) {
      bins[i] = equal_width_bin(confidences[i], spec.num_bins);
    }
    return bins;
  }

  // equal-mass: stable argsort, then contiguous groups. The first n % M
  // groups take the extra item.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return confidences[a] < confidences[b];
                   });

  const std::size_t m = static_cast<std::size_t>(spec.num_bins);
  const std::size_t base = n / m;
  const std::size_t extra = n % m;
  std::size_t pos = 0;
  for (std::size_t g = 0; g < m; ++g) {
    const std::size_t group_size = base + (g < extra ? 1 : 0);
    for (std::size_t j = 0; j < group_size; ++j) {
      bins[order[pos++]] = static_cast<int>(g);
    }
  }
  return bins;
}

}  // namespace calib

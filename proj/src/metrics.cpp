#include "calib/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "calib/kernels.hpp"

namespace calib {
namespace {

void check_temperature(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("temperature must be a positive finite value");
  }
}

}  // namespace

double nll(const PredictionSet& set, double T) {
  validate(set);
  check_temperature(T);
  return mean_nll(set, T);
}

double accuracy(const PredictionSet& set, double T) {
  validate(set);
  check_temperature(T);
  return static_cast<double>(count_correct(set, T)) /
         static_cast<double>(set.size());
}

std::vector<BinStats> reliability(const PredictionSet& set,
                                  const BinningSpec& spec, double T) {
  validate(set);
  check_temperature(T);

  const ItemScores scores = score_items(set, T);
  const std::vector<int> bin_of = assign_bins(scores.confidence, spec);
  const std::size_t m = static_cast<std::size_t>(spec.num_bins);

  std::vector<std::size_t> count(m, 0);
  std::vector<double> conf_sum(m, 0.0);
  std::vector<std::size_t> hit_sum(m, 0);
  std::vector<double> lo(m, 0.0);
  std::vector<double> hi(m, 0.0);

  for (std::size_t i = 0; i < scores.confidence.size(); ++i) {
    const std::size_t b = static_cast<std::size_t>(bin_of[i]);
    const double c = scores.confidence[i];
    if (count[b] == 0) {
      lo[b] = c;
      hi[b] = c;
    } else {
      lo[b] = std::min(lo[b], c);
      hi[b] = std::max(hi[b], c);
    }
    ++count[b];
    conf_sum[b] += c;
    hit_sum[b] += scores.correct[i];
  }

  std::vector<BinStats> bins(m);
  for (std::size_t b = 0; b < m; ++b) {
    BinStats& s = bins[b];
    if (spec.scheme == BinningScheme::EqualWidth) {
      s.bin_lo = static_cast<double>(b) / static_cast<double>(m);
      s.bin_hi = static_cast<double>(b + 1) / static_cast<double>(m);
    } else {
      // equal-mass bins report the confidence range actually covered
      s.bin_lo = lo[b];
      s.bin_hi = hi[b];
    }
    s.count = count[b];
    if (count[b] > 0) {
      s.accuracy =
          static_cast<double>(hit_sum[b]) / static_cast<double>(count[b]);
      s.avg_confidence = conf_sum[b] / static_cast<double>(count[b]);
      s.gap = s.avg_confidence - s.accuracy;
    }
  }
  return bins;
}

double ece(const PredictionSet& set, const BinningSpec& spec, double T) {
  const std::vector<BinStats> bins = reliability(set, spec, T);
  const double n = static_cast<double>(set.size());
  double total = 0.0;
  for (const BinStats& b : bins) {
    total += (static_cast<double>(b.count) / n) * std::fabs(b.gap);
  }
  return total;
}

}  // namespace calib

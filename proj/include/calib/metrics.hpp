#pragma once

#include "calib/binning.hpp"
#include "calib/prediction.hpp"

namespace calib {

/// Mean negative log-likelihood of the gold labels at temperature T.
double nll(const PredictionSet& set, double T = 1.0);

/// Fraction of items whose argmax prediction matches the gold label.
/// Independent of T (argmax is invariant under positive logit scaling).
double accuracy(const PredictionSet& set, double T = 1.0);

/// Per-bin count, accuracy, average confidence and signed gap, in ascending
/// confidence order. Empty bins are present with zeroed statistics.
std::vector<BinStats> reliability(const PredictionSet& set,
                                  const BinningSpec& spec, double T = 1.0);

/// Expected calibration error: sum_m (|B_m|/n) * |acc(B_m) - conf(B_m)|.
double ece(const PredictionSet& set, const BinningSpec& spec, double T = 1.0);

}  // namespace calib

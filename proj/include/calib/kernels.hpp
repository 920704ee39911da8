#pragma once

#include <cstdint>

#include "calib/prediction.hpp"

namespace calib {

/// Per-item max-confidence scores of a prediction set at temperature T.
struct ItemScores {
  std::vector<double> confidence;
  std::vector<std::uint8_t> correct;
};

struct Prediction {
  int predicted_class = 0;
  double confidence = 0.0;
};

/// softmax(logits / T) with max-subtraction. Throws std::invalid_argument on
/// T <= 0, non-finite T, empty or non-finite logits.
ProbabilityVector softmax_with_temperature(const std::vector<double>& logits,
                                           double T);

/// argmax of the probability vector; ties break toward the lowest index.
Prediction predict(const ProbabilityVector& p);

// The per-set kernels below run the per-item loop OpenMP-parallel.
// Reductions accumulate fixed-size chunks whose partial sums are combined in
// index order, so the result is identical for any thread count. Inputs are
// assumed valid (see validate()); the public metrics wrappers check first.

ItemScores score_items(const PredictionSet& set, double T);

/// Mean of -ln(softmax(logits/T)[label]); probabilities are clamped at
/// 1e-300 before the log so pathological logits yield a finite value.
double mean_nll(const PredictionSet& set, double T);

/// d/dT of mean_nll: mean of (o_y - sum_k p_k(T) o_k) / T^2.
double nll_grad_T(const PredictionSet& set, double T);

std::size_t count_correct(const PredictionSet& set, double T);

/// Serial reference implementations of the kernels above, kept for the
/// consistency tests and the kernel benchmark.
namespace ref {
ItemScores score_items(const PredictionSet& set, double T);
double mean_nll(const PredictionSet& set, double T);
double nll_grad_T(const PredictionSet& set, double T);
std::size_t count_correct(const PredictionSet& set, double T);
}  // namespace ref

}  // namespace calib

#pragma once

#include <vector>

#include "calib/prediction.hpp"

namespace calib {

/// Label-smoothing strength. alpha = 0 reproduces hard labels exactly.
struct SmoothingSpec {
  double alpha = 0.1;
};

/// Soft target: 1 - alpha on the true class, alpha/(K-1) on each remaining
/// class. Throws std::invalid_argument on alpha outside [0, 1), K < 2 or an
/// out-of-range label.
ProbabilityVector smooth_labels(int label, int num_classes,
                                const SmoothingSpec& spec);

/// -sum_k y_smooth_k ln p_k with p = softmax(logits). Equals the standard
/// cross-entropy when alpha = 0; probabilities are clamped at 1e-300 before
/// the log.
double ls_cross_entropy(const std::vector<double>& logits, int label,
                        const SmoothingSpec& spec);

/// Gradient of ls_cross_entropy w.r.t. the logits: p - y_smooth.
std::vector<double> ls_gradient(const std::vector<double>& logits, int label,
                                const SmoothingSpec& spec);

}  // namespace calib

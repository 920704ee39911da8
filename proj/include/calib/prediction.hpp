#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace calib {

/// One exported classifier output: raw logits plus the gold label.
struct LabeledPrediction {
  std::vector<double> logits;
  int label = 0;
  std::optional<std::string> id;
};

/// Every prediction of one classifier on one language's evaluation data,
/// in file order. All items share num_classes.
struct PredictionSet {
  std::vector<LabeledPrediction> items;
  int num_classes = 0;
  std::string language;

  std::size_t size() const { return items.size(); }
};

/// Softmax output; entries nonnegative and summing to 1.
struct ProbabilityVector {
  std::vector<double> probs;
};

/// Throws std::invalid_argument when the set violates its invariants:
/// empty, K < 2, logit length mismatch, non-finite logit, or label out of
/// range.
void validate(const PredictionSet& set);

}  // namespace calib

#include "calib/prediction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace calib {

void validate(const PredictionSet& set) {
  if (set.items.empty()) {
    throw std::invalid_argument("empty prediction set");
  }
  if (set.num_classes < 2) {
    throw std::invalid_argument("prediction set needs at least 2 classes, got " +
                                std::to_string(set.num_classes));
  }
  const std::size_t k = static_cast<std::size_t>(set.num_classes);
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    const LabeledPrediction& item = set.items[i];
    if (item.logits.size() != k) {
      throw std::invalid_argument(
          "item " + std::to_string(i) + ": expected " + std::to_string(k) +
          " logits, found " + std::to_string(item.logits.size()));
    }
    for (double v : item.logits) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("item " + std::to_string(i) +
                                    ": non-finite logit");
      }
    }
    if (item.label < 0 || item.label >= set.num_classes) {
      throw std::invalid_argument("item " + std::to_string(i) + ": label " +
                                  std::to_string(item.label) +
                                  " out of range [0, " +
                                  std::to_string(set.num_classes) + ")");
    }
  }
}

}  // namespace calib

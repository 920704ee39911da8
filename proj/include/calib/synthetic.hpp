#pragma once

#include <cstdint>
#include <string>

#include "calib/prediction.hpp"
#include "calib/trainer.hpp"

namespace calib {

/// Seeded generator of a multilingual-shift stand-in: features from a
/// Gaussian (optionally translated by domain_shift), true logits z from a
/// generating linear map drawn once from the seed, labels sampled
/// y ~ softmax(z). The exposed prediction logits are logit_scale * z, so the
/// ground-truth temperature of the prediction set is exactly logit_scale.
struct SyntheticSpec {
  std::size_t n = 1000;
  int num_classes = 3;
  int dim = 8;
  double domain_shift = 0.0;
  double logit_scale = 1.0;
  std::uint64_t seed = 0;
  std::string language = "synth";
};

struct SyntheticData {
  FeatureDataset features;
  PredictionSet predictions;
};

SyntheticData generate_synthetic(const SyntheticSpec& spec);

}  // namespace calib

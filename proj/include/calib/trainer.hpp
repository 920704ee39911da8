#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "calib/prediction.hpp"
#include "calib/smoothing.hpp"

namespace calib {

/// Desk-scale multinomial classifier: logits(x) = W x + b.
struct LinearSoftmaxModel {
  int num_classes = 0;
  int dim = 0;
  std::vector<double> weights;  // row-major K x D
  std::vector<double> bias;     // K

  std::vector<double> logits(const std::vector<double>& x) const;
};

enum class Optimizer { PlainGd, Adam };

struct TrainConfig {
  double learning_rate = 0.05;
  int epochs = 20;
  int batch_size = 8;
  std::uint64_t seed = 0;
  Optimizer optimizer = Optimizer::Adam;
  SmoothingSpec smoothing{0.0};
};

struct FeatureDataset {
  struct Example {
    std::vector<double> features;
    int label = 0;
  };
  std::vector<Example> examples;
  int num_classes = 0;
  int dim = 0;
  std::string language;

  std::size_t size() const { return examples.size(); }
};

std::string to_string(Optimizer opt);
Optimizer optimizer_from_string(const std::string& name);

/// Mini-batch training of mean label-smoothed cross-entropy over W and b,
/// from zero initialization. Deterministic given config.seed (epoch shuffles
/// use the seeded generator). Adam runs with beta1 = 0.9, beta2 = 0.999,
/// eps = 1e-8. Throws std::runtime_error naming the epoch and batch when the
/// loss turns non-finite. Pass epoch_loss to record the mean loss per epoch.
LinearSoftmaxModel train(const FeatureDataset& data, const TrainConfig& config,
                         std::vector<double>* epoch_loss = nullptr);

/// Same loop as train() but starting from the given model's weights.
/// Throws std::invalid_argument on a K/D mismatch between model and data.
LinearSoftmaxModel continue_finetune(const LinearSoftmaxModel& model,
                                     const FeatureDataset& fewshot,
                                     const TrainConfig& config,
                                     std::vector<double>* epoch_loss = nullptr);

/// First `budget` examples in file order (the paper-style few-shot cap).
FeatureDataset apply_fewshot_budget(const FeatureDataset& data,
                                    std::size_t budget = 2500);

/// Model logits over the dataset as a PredictionSet (for the calibration
/// metrics and the CLI pipelines).
PredictionSet score_dataset(const LinearSoftmaxModel& model,
                            const FeatureDataset& data,
                            std::string language = "");

/// Mean label-smoothed cross-entropy of the model on the dataset.
double dataset_loss(const LinearSoftmaxModel& model, const FeatureDataset& data,
                    const SmoothingSpec& spec = SmoothingSpec{0.0});

}  // namespace calib

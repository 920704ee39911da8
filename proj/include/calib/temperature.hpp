#pragma once

#include <string>

#include "calib/prediction.hpp"

namespace calib {

/// A fitted scalar temperature with its fitting metadata.
struct TemperatureModel {
  double T = 1.0;
  double dev_nll = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string dev_language;
};

struct FitOptions {
  double init_T = 1.5;
  int max_iter = 100;
  double tol = 1e-8;  // on |d nll/dT|
  double T_min = 0.05;
  double T_max = 20.0;
};

/// Minimizes nll(dev, T) over [T_min, T_max] with safeguarded Newton steps on
/// ln T (curvature by finite differences), falling back to golden-section
/// search on the bracket when a step would leave it. The best temperature
/// seen anywhere -- including T = 1 and init_T -- is returned, so the fitted
/// dev NLL never exceeds the NLL at T = 1. A flat objective (all logits
/// equal) returns init_T with converged = true.
TemperatureModel fit_temperature(const PredictionSet& dev,
                                 const FitOptions& opts = {});

/// New set with every logit divided by T. Preserves argmax, hence accuracy.
PredictionSet apply_temperature(const PredictionSet& set, double T);
PredictionSet apply_temperature(const PredictionSet& set,
                                const TemperatureModel& model);

}  // namespace calib

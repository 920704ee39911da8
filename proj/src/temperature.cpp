#include "calib/temperature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "calib/kernels.hpp"

namespace calib {
namespace {

struct BestSeen {
  double T;
  double nll;
};

}  // namespace

TemperatureModel fit_temperature(const PredictionSet& dev,
                                 const FitOptions& opts) {
  validate(dev);
  if (!(opts.T_min > 0.0) || !(opts.T_max > opts.T_min)) {
    throw std::invalid_argument("invalid temperature bracket");
  }
  if (!(opts.init_T > 0.0) || !std::isfinite(opts.init_T)) {
    throw std::invalid_argument("init_T must be a positive finite value");
  }
  if (opts.max_iter < 1 || !(opts.tol > 0.0)) {
    throw std::invalid_argument("invalid fit options");
  }

  const double init_T = std::clamp(opts.init_T, opts.T_min, opts.T_max);
  BestSeen best{init_T, mean_nll(dev, init_T)};
  auto consider = [&](double T) {
    const double v = mean_nll(dev, T);
    if (v < best.nll) {
      best.nll = v;
      best.T = T;
    }
    return v;
  };
  // T = 1 is always a safeguard candidate: the fitted temperature must never
  // report a worse dev NLL than the uncalibrated model.
  consider(std::clamp(1.0, opts.T_min, opts.T_max));

  const double u_min = std::log(opts.T_min);
  const double u_max = std::log(opts.T_max);
  auto grad_u = [&](double u) {
    const double T = std::exp(u);
    return nll_grad_T(dev, T) * T;  // chain rule for u = ln T
  };

  double T = init_T;
  double u = std::log(T);
  int iterations = 0;
  bool converged = false;
  bool run_golden = false;
  const double h = 1e-5;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    ++iterations;
    const double g = nll_grad_T(dev, T);
    if (!std::isfinite(g)) {
      run_golden = true;
      break;
    }
    if (std::fabs(g) < opts.tol) {
      converged = true;
      break;
    }
    const double curvature = (grad_u(u + h) - grad_u(u - h)) / (2.0 * h);
    if (!std::isfinite(curvature) || curvature <= 0.0) {
      run_golden = true;
      break;
    }
    const double u_next = u - g * T / curvature;
    if (!std::isfinite(u_next) || u_next < u_min || u_next > u_max) {
      run_golden = true;
      break;
    }
    u = u_next;
    T = std::exp(u);
    consider(T);
  }

  if (run_golden) {
    // Golden-section on ln T over the full bracket.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = u_min;
    double b = u_max;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = consider(std::exp(c));
    double fd = consider(std::exp(d));
    for (int iter = 0; iter < 200 && (b - a) > 1e-10; ++iter) {
      ++iterations;
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = consider(std::exp(c));
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = consider(std::exp(d));
      }
    }
    T = std::exp((a + b) / 2.0);
    consider(T);
    converged = std::fabs(nll_grad_T(dev, T)) < opts.tol;
  }

  TemperatureModel model;
  model.T = best.T;
  model.dev_nll = best.nll;
  model.iterations = iterations;
  model.converged = converged;
  model.dev_language = dev.language;
  return model;
}

PredictionSet apply_temperature(const PredictionSet& set, double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("temperature must be a positive finite value");
  }
  PredictionSet scaled = set;
  for (LabeledPrediction& item : scaled.items) {
    for (double& v : item.logits) v /= T;
  }
  return scaled;
}

PredictionSet apply_temperature(const PredictionSet& set,
                                const TemperatureModel& model) {
  return apply_temperature(set, model.T);
}

}  // namespace calib

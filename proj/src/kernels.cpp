#include "calib/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace calib {
namespace {

constexpr double kProbFloor = 1e-300;

// Chunk size of the deterministic reductions. Partial sums are accumulated
// per chunk and combined in index order, so the result is independent of the
// thread count and identical between serial and parallel runs up to the
// chunked summation order.
constexpr std::size_t kChunk = 2048;

void softmax_scaled(const std::vector<double>& logits, double T,
                    std::vector<double>& out) {
  const std::size_t k = logits.size();
  out.resize(k);
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) m = std::max(m, logits[i] / T);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = std::exp(logits[i] / T - m);
    sum += out[i];
  }
  for (std::size_t i = 0; i < k; ++i) out[i] /= sum;
}

void item_score(const LabeledPrediction& item, double T,
                std::vector<double>& scratch, double& confidence,
                std::uint8_t& correct) {
  softmax_scaled(item.logits, T, scratch);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < scratch.size(); ++i) {
    if (scratch[i] > scratch[arg]) arg = i;
  }
  confidence = scratch[arg];
  correct = static_cast<std::uint8_t>(static_cast<int>(arg) == item.label);
}

double item_nll(const LabeledPrediction& item, double T,
                std::vector<double>& scratch) {
  softmax_scaled(item.logits, T, scratch);
  const double p =
      std::max(scratch[static_cast<std::size_t>(item.label)], kProbFloor);
  return -std::log(p);
}

double item_grad(const LabeledPrediction& item, double T,
                 std::vector<double>& scratch) {
  softmax_scaled(item.logits, T, scratch);
  double expected_logit = 0.0;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    expected_logit += scratch[i] * item.logits[i];
  }
  const double o_y = item.logits[static_cast<std::size_t>(item.label)];
  return (o_y - expected_logit) / (T * T);
}

std::size_t num_chunks(std::size_t n) {
  return n == 0 ? 0 : (n - 1) / kChunk + 1;
}

// term(i, scratch) summed per chunk in parallel, chunk partials combined in
// index order.
template <typename TermFn>
double chunked_sum(std::size_t n, const TermFn& term) {
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(num_chunks(n));
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    std::vector<double> scratch;
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i, scratch);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

ProbabilityVector softmax_with_temperature(const std::vector<double>& logits,
                                           double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("temperature must be a positive finite value");
  }
  if (logits.empty()) {
    throw std::invalid_argument("softmax of empty logit vector");
  }
  for (double v : logits) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("non-finite logit");
    }
  }
  ProbabilityVector out;
  softmax_scaled(logits, T, out.probs);
  return out;
}

Prediction predict(const ProbabilityVector& p) {
  if (p.probs.empty()) {
    throw std::invalid_argument("predict on empty probability vector");
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < p.probs.size(); ++i) {
    if (p.probs[i] > p.probs[arg]) arg = i;
  }
  return {static_cast<int>(arg), p.probs[arg]};
}

ItemScores score_items(const PredictionSet& set, double T) {
  const std::size_t n = set.items.size();
  ItemScores out;
  out.confidence.resize(n);
  out.correct.resize(n);
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(num_chunks(n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    std::vector<double> scratch;
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    for (std::size_t i = lo; i < hi; ++i) {
      item_score(set.items[i], T, scratch, out.confidence[i], out.correct[i]);
    }
  }
  return out;
}

double mean_nll(const PredictionSet& set, double T) {
  const std::size_t n = set.items.size();
  const double total = chunked_sum(n, [&](std::size_t i, std::vector<double>& s) {
    return item_nll(set.items[i], T, s);
  });
  return total / static_cast<double>(n);
}

double nll_grad_T(const PredictionSet& set, double T) {
  const std::size_t n = set.items.size();
  const double total = chunked_sum(n, [&](std::size_t i, std::vector<double>& s) {
    return item_grad(set.items[i], T, s);
  });
  return total / static_cast<double>(n);
}

std::size_t count_correct(const PredictionSet& set, double T) {
  const std::size_t n = set.items.size();
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(num_chunks(n));
  std::vector<std::size_t> partial(static_cast<std::size_t>(chunks), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    std::vector<double> scratch;
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    std::size_t hits = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      double conf;
      std::uint8_t ok;
      item_score(set.items[i], T, scratch, conf, ok);
      hits += ok;
    }
    partial[static_cast<std::size_t>(c)] = hits;
  }
  std::size_t total = 0;
  for (std::size_t p : partial) total += p;
  return total;
}

namespace ref {

ItemScores score_items(const PredictionSet& set, double T) {
  const std::size_t n = set.items.size();
  ItemScores out;
  out.confidence.resize(n);
  out.correct.resize(n);
  std::vector<double> scratch;
  for (std::size_t i = 0; i < n; ++i) {
    item_score(set.items[i], T, scratch, out.confidence[i], out.correct[i]);
  }
  return out;
}

double mean_nll(const PredictionSet& set, double T) {
  std::vector<double> scratch;
  double total = 0.0;
  for (const LabeledPrediction& item : set.items) {
    total += item_nll(item, T, scratch);
  }
  return total / static_cast<double>(set.items.size());
}

double nll_grad_T(const PredictionSet& set, double T) {
  std::vector<double> scratch;
  double total = 0.0;
  for (const LabeledPrediction& item : set.items) {
    total += item_grad(item, T, scratch);
  }
  return total / static_cast<double>(set.items.size());
}

std::size_t count_correct(const PredictionSet& set, double T) {
  std::vector<double> scratch;
  std::size_t hits = 0;
  for (const LabeledPrediction& item : set.items) {
    double conf;
    std::uint8_t ok;
    item_score(item, T, scratch, conf, ok);
    hits += ok;
  }
  return hits;
}

}  // namespace ref
}  // namespace calib

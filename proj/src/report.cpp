#include "calib/report.hpp"

#include <cmath>
#include <stdexcept>

#include "calib/kernels.hpp"
#include "calib/metrics.hpp"

namespace calib {

CalibrationReport build_report(const PredictionSet& set,
                               const BinningSpec& spec, double T) {
  CalibrationReport report;
  report.language = set.language;
  report.n = set.size();
  report.temperature = T;
  report.binning = spec;
  report.bins = reliability(set, spec, T);

  const double n = static_cast<double>(report.n);
  double total = 0.0;
  for (const BinStats& b : report.bins) {
    total += (static_cast<double>(b.count) / n) * std::fabs(b.gap);
  }
  report.ece = total;
  report.accuracy =
      static_cast<double>(count_correct(set, T)) / n;
  report.nll = mean_nll(set, T);
  return report;
}

AggregateReport aggregate(const std::map<std::string, double>& ece_by_language,
                          const std::string& pivot) {
  const auto pivot_it = ece_by_language.find(pivot);
  if (pivot_it == ece_by_language.end()) {
    throw std::invalid_argument("pivot language '" + pivot +
                                "' not among the reports");
  }
  if (ece_by_language.size() < 2) {
    throw std::invalid_argument("no non-pivot language to aggregate");
  }

  AggregateReport agg;
  agg.pivot = pivot;
  agg.pivot_ece = pivot_it->second;
  agg.ece_by_language = ece_by_language;

  double sum = 0.0;
  std::size_t count = 0;
  // map order is ascending by tag, so a strict > keeps the lexicographically
  // smallest tag on ties.
  for (const auto& [language, value] : ece_by_language) {
    if (language == pivot) continue;
    sum += value;
    ++count;
    if (agg.max_language.empty() || value > agg.max_ece) {
      agg.max_ece = value;
      agg.max_language = language;
    }
  }
  agg.mean_ece = sum / static_cast<double>(count);
  return agg;
}

AggregateReport aggregate(const std::vector<CalibrationReport>& reports,
                          const std::string& pivot) {
  std::map<std::string, double> by_language;
  for (const CalibrationReport& r : reports) {
    if (!by_language.emplace(r.language, r.ece).second) {
      throw std::invalid_argument("duplicate language '" + r.language +
                                  "' among the reports");
    }
  }
  return aggregate(by_language, pivot);
}

}  // namespace calib

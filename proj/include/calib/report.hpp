#pragma once

#include <map>
#include <string>
#include <vector>

#include "calib/binning.hpp"
#include "calib/prediction.hpp"

namespace calib {

/// Everything the toolkit reports about one language's predictions.
struct CalibrationReport {
  std::string language;
  std::size_t n = 0;
  double ece = 0.0;
  double accuracy = 0.0;
  double nll = 0.0;
  double temperature = 1.0;
  BinningSpec binning;
  std::vector<BinStats> bins;
};

CalibrationReport build_report(const PredictionSet& set, const BinningSpec& spec,
                               double T = 1.0);

/// Cross-language summary around a pivot: the pivot's own ECE plus the mean
/// and maximum ECE over every other language.
struct AggregateReport {
  std::string pivot;
  double pivot_ece = 0.0;
  double mean_ece = 0.0;
  double max_ece = 0.0;
  std::string max_language;
  std::map<std::string, double> ece_by_language;  // all inputs, pivot included
};

/// Throws std::invalid_argument when the pivot is missing or no non-pivot
/// language is present. A tie on the maximum resolves to the
/// lexicographically smaller language tag.
AggregateReport aggregate(const std::map<std::string, double>& ece_by_language,
                          const std::string& pivot);

AggregateReport aggregate(const std::vector<CalibrationReport>& reports,
                          const std::string& pivot);

}  // namespace calib

#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "calib/lang_features.hpp"
#include "calib/prediction.hpp"
#include "calib/report.hpp"
#include "calib/temperature.hpp"
#include "calib/trainer.hpp"

namespace calib {

inline constexpr const char* kToolVersion = "0.1.0";

/// Shortest %.17g rendering; parses back to the identical double.
std::string format_full(double v);

/// JSONL predictions: one {"logits": [...], "label": int, "id"?: string}
/// object per line. K is inferred from the first record and enforced after;
/// errors carry the 1-based line number. The language tag resolves as
/// explicit argument > "language" field of the first record > filename stem.
PredictionSet load_predictions(const std::string& path,
                               std::string language = "");

/// Inverse of load_predictions; logits are written with 17 significant
/// digits so load(save(set)) reproduces the set exactly.
void save_predictions(const PredictionSet& set, const std::string& path);

nlohmann::json report_to_json(const CalibrationReport& report);
CalibrationReport report_from_json(const nlohmann::json& j);
void write_report(const CalibrationReport& report, const std::string& path);
CalibrationReport read_report(const std::string& path);

nlohmann::json aggregate_to_json(const AggregateReport& agg);

/// CSV `bin_lo,bin_hi,count,accuracy,confidence,gap`, one row per bin.
void export_reliability_csv(const CalibrationReport& report,
                            const std::string& csv_path);

/// Bar chart with accuracy bars, gap bars and the y = x reference line.
void export_reliability_svg(const CalibrationReport& report,
                            const std::string& svg_path);

void write_temperature_model(const TemperatureModel& model,
                             const std::string& path);
TemperatureModel read_temperature_model(const std::string& path);

void write_linear_model(const LinearSoftmaxModel& model,
                        const std::string& path);
LinearSoftmaxModel read_linear_model(const std::string& path);

/// CSV with header `label,f0,f1,...,fD-1`. K defaults to max label + 1.
FeatureDataset load_feature_csv(const std::string& path,
                                std::string language = "",
                                int num_classes = 0);
void save_feature_csv(const FeatureDataset& data, const std::string& path);

/// All *.json calibration reports in a directory, keyed by language tag.
std::map<std::string, CalibrationReport> load_reports_dir(
    const std::string& dir);

/// CSV `language,size_tokens`.
std::map<std::string, double> load_size_csv(const std::string& path);

/// CSV `language,f0,f1,...` with empty cells for missing features.
std::map<std::string, std::vector<std::optional<double>>> load_syn_csv(
    const std::string& path);

/// Profile directory convention: size.csv, syn.csv and corpora/<lang>.txt,
/// each optional; absent inputs leave the matching factor unavailable.
std::map<std::string, LanguageProfile> load_profiles_dir(
    const std::string& dir, int min_count = 10);

}  // namespace calib

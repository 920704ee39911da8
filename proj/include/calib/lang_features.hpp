#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace calib {

/// Frequency-thresholded token vocabulary of one corpus.
struct Vocabulary {
  std::set<std::string> tokens;
  int min_count = 10;
  std::string source;
};

/// Tokens occurring at least min_count times. The stream overload tokenizes
/// on whitespace; callers with their own tokenizer pass tokens directly.
Vocabulary build_vocab(std::istream& corpus, int min_count = 10,
                       std::string source = "");
Vocabulary build_vocab(const std::vector<std::string>& tokens,
                       int min_count = 10, std::string source = "");

/// Jaccard index |A ∩ B| / |A ∪ B|. Throws std::invalid_argument when both
/// vocabularies are empty (0/0).
double subword_overlap(const Vocabulary& a, const Vocabulary& b);

struct MaskedSimilarity {
  double value = 0.0;
  std::vector<std::size_t> used_dims;  // dimensions present in both vectors
};

/// Cosine similarity over the dimensions present in both vectors. Throws
/// std::invalid_argument on a length mismatch, no common present dimension,
/// or a zero vector on the common support.
MaskedSimilarity syntactic_similarity(
    const std::vector<std::optional<double>>& a,
    const std::vector<std::optional<double>>& b);

/// Sample Pearson correlation. Throws std::invalid_argument on length
/// mismatch, fewer than 2 points, or zero variance ("undefined correlation").
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Per-language factor inputs for the correlation analysis.
struct LanguageProfile {
  std::string language;
  std::optional<double> size_tokens;  // pre-training token count, >= 1
  std::optional<std::vector<std::optional<double>>> syn_features;
  std::optional<Vocabulary> vocabulary;
};

struct FactorCorrelation {
  std::optional<double> r;  // empty when the factor is unavailable
  int used_languages = 0;
  int dropped_languages = 0;  // non-pivot languages lacking the factor
  std::string note;           // reason when unavailable
};

struct FactorCorrelations {
  FactorCorrelation size;
  FactorCorrelation syn;
  FactorCorrelation swo;
};

/// Pearson r of per-language ECE against ln(SIZE), SYN (masked cosine vs the
/// pivot) and SWO (Jaccard vs the pivot), over non-pivot languages only.
/// Languages missing a factor are dropped per factor; a factor with fewer
/// than 2 usable languages or zero variance is reported unavailable rather
/// than failing the call. Throws std::invalid_argument when the pivot
/// profile is missing.
FactorCorrelations correlate_factors(
    const std::map<std::string, double>& ece_by_language,
    const std::map<std::string, LanguageProfile>& profiles,
    const std::string& pivot);

}  // namespace calib

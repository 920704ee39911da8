#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace calib {

enum class BinningScheme { EqualWidth, EqualMass };

struct BinningSpec {
  int num_bins = 10;
  BinningScheme scheme = BinningScheme::EqualWidth;
};

/// Per-bin reliability statistics. Empty bins report zeroed accuracy,
/// confidence and gap; their count is 0.
struct BinStats {
  double bin_lo = 0.0;
  double bin_hi = 0.0;
  std::size_t count = 0;
  double accuracy = 0.0;
  double avg_confidence = 0.0;
  double gap = 0.0;  // avg_confidence - accuracy, signed
};

std::string to_string(BinningScheme scheme);
BinningScheme scheme_from_string(const std::string& name);

/// Bin index per confidence value.
///
/// equal-width: bin m covers (m/M, (m+1)/M], with bin 0 closed at 0 so that
/// confidence 0 lands in the first bin and confidence 1 in the last.
/// equal-mass: values are sorted by confidence (stable in input order) and
/// split into M contiguous groups whose sizes differ by at most one; when n
/// is not divisible by M the larger groups sit on the low-confidence side.
///
/// Throws std::invalid_argument on M < 1 or a confidence outside [0, 1].
std::vector<int> assign_bins(const std::vector<double>& confidences,
                             const BinningSpec& spec);

}  // namespace calib

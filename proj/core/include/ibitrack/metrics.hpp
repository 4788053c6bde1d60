#ifndef IBITRACK_METRICS_HPP_
#define IBITRACK_METRICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ibitrack/synth.hpp"

namespace ibitrack {

// Sampled curve: times monotone non-decreasing, one value per time. Windows
// that yield no value are simply absent, so the two vectors always have
// equal length.
struct Curve {
  std::vector<double> times;
  std::vector<double> values;
};

struct RocPoint {
  double threshold;
  double false_alarm_rate;
  double detection_rate;
};

struct RocResult {
  std::vector<RocPoint> points;  // threshold descending, rates non-decreasing
  double auc;
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 monotone edges
  std::vector<std::size_t> counts;
};

// Population standard deviation of the intervals whose ending beat falls in
// [t - window/2, t + window/2], for each evaluation time t. Default
// evaluation times are the beat times themselves. Windows holding fewer than
// two intervals produce a gap. Throws EmptyInput when no window produces a
// value.
Curve sliding_sdnn(const BeatSeries& beats, double window = 300.0,
                   std::span<const double> at = {});

// Root mean square of successive interval differences within the window;
// same windowing conventions as sliding_sdnn.
Curve sliding_rmssd(const BeatSeries& beats, double window = 300.0,
                    std::span<const double> at = {});

// Median absolute deviation between two curves, aligned point-by-point by
// mutual nearest time within half the evaluation step; unmatched points are
// dropped. Symmetric in its arguments. Throws NoOverlap when no points
// align.
double mad(const Curve& x, const Curve& y);

// Threshold sweep over all distinct scores plus {0, 1}, flagging score >=
// threshold; ties on a threshold are flagged together. detection_rate is the
// flagged fraction of true anomalous, false_alarm_rate the flagged fraction
// of true normal. AUC by trapezoidal integration. Throws LengthMismatch on
// unequal inputs and SingleClass unless both classes are present.
RocResult roc(std::span<const double> scores, std::span<const IbiLabel> labels);

// Fixed-width counts over [lo, hi]; values outside the range are dropped,
// values equal to hi land in the last bin.
Histogram histogram(std::span<const double> values, std::size_t bins,
                    double lo, double hi);

}  // namespace ibitrack

#endif  // IBITRACK_METRICS_HPP_

#include "ibitrack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ibitrack/errors.hpp"

namespace ibitrack {

namespace {

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  const std::size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double hi = v[mid];
  if (n % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lo + hi);
}

// Median spacing of a curve's time grid; +inf when the grid has no spacing.
double grid_step(const std::vector<double>& times) {
  if (times.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<double> diffs;
  diffs.reserve(times.size() - 1);
  for (std::size_t i = 1; i < times.size(); ++i) {
    diffs.push_back(times[i] - times[i - 1]);
  }
  return median_of(std::move(diffs));
}

std::size_t nearest_index(const std::vector<double>& times, double t) {
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 0;
  if (it == times.end()) return times.size() - 1;
  const std::size_t right = static_cast<std::size_t>(it - times.begin());
  const std::size_t left = right - 1;
  return (t - times[left] <= times[right] - t) ? left : right;
}

// Shared windowing harness for the sliding statistics: calls stat on each
// in-window interval range [lo, hi) and records the value unless the stat
// declines (NaN = gap).
template <typename Stat>
Curve sliding_stat(const BeatSeries& beats, double window,
                   std::span<const double> at, Stat stat) {
  if (!(window > 0.0)) {
    throw std::invalid_argument("sliding window must be positive");
  }
  const std::vector<double> ibis = intervals(beats);
  if (ibis.empty()) {
    throw EmptyInput("beat series yields no intervals");
  }
  // Interval i ends at beat i + 1.
  const std::vector<double> ends(beats.times.begin() + 1, beats.times.end());
  std::vector<double> eval_times(at.begin(), at.end());
  if (eval_times.empty()) eval_times = beats.times;

  Curve curve;
  for (const double t : eval_times) {
    const auto first =
        std::lower_bound(ends.begin(), ends.end(), t - 0.5 * window);
    const auto last =
        std::upper_bound(ends.begin(), ends.end(), t + 0.5 * window);
    const std::size_t lo = static_cast<std::size_t>(first - ends.begin());
    const std::size_t hi = static_cast<std::size_t>(last - ends.begin());
    const double value = stat(ibis, lo, hi);
    if (!std::isnan(value)) {
      curve.times.push_back(t);
      curve.values.push_back(value);
    }
  }
  return curve;
}

constexpr double kGap = std::numeric_limits<double>::quiet_NaN();

}  // namespace

Curve sliding_sdnn(const BeatSeries& beats, double window,
                   std::span<const double> at) {
  return sliding_stat(beats, window, at,
                      [](const std::vector<double>& ibis, std::size_t lo,
                         std::size_t hi) {
                        if (hi - lo < 2) return kGap;
                        double mean = 0.0;
                        for (std::size_t i = lo; i < hi; ++i) mean += ibis[i];
                        mean /= static_cast<double>(hi - lo);
                        double ss = 0.0;
                        for (std::size_t i = lo; i < hi; ++i) {
                          const double dev = ibis[i] - mean;
                          ss += dev * dev;
                        }
                        return std::sqrt(ss / static_cast<double>(hi - lo));
                      });
}

Curve sliding_rmssd(const BeatSeries& beats, double window,
                    std::span<const double> at) {
  return sliding_stat(beats, window, at,
                      [](const std::vector<double>& ibis, std::size_t lo,
                         std::size_t hi) {
                        if (hi - lo < 2) return kGap;
                        double ss = 0.0;
                        for (std::size_t i = lo; i + 1 < hi; ++i) {
                          const double diff = ibis[i + 1] - ibis[i];
                          ss += diff * diff;
                        }
                        return std::sqrt(ss / static_cast<double>(hi - lo - 1));
                      });
}

double mad(const Curve& x, const Curve& y) {
  if (x.times.size() != x.values.size() || y.times.size() != y.values.size()) {
    throw LengthMismatch("curve times and values differ in length");
  }
  if (x.times.empty() || y.times.empty()) {
    throw NoOverlap("mad: a curve is empty");
  }
  const double tol = 0.5 * std::min(grid_step(x.times), grid_step(y.times));

  std::vector<double> deviations;
  for (std::size_t i = 0; i < x.times.size(); ++i) {
    const std::size_t j = nearest_index(y.times, x.times[i]);
    if (std::abs(x.times[i] - y.times[j]) > tol) continue;
    // Mutual nearest keeps the pairing symmetric in x and y.
    if (nearest_index(x.times, y.times[j]) != i) continue;
    deviations.push_back(std::abs(x.values[i] - y.values[j]));
  }
  if (deviations.empty()) {
    throw NoOverlap("mad: no curve points align");
  }
  return median_of(std::move(deviations));
}

RocResult roc(std::span<const double> scores,
              std::span<const IbiLabel> labels) {
  if (scores.size() != labels.size()) {
    throw LengthMismatch("roc: scores and labels differ in length");
  }
  std::size_t n_anomalous = 0;
  for (const IbiLabel label : labels) {
    if (label == IbiLabel::Anomalous) ++n_anomalous;
  }
  const std::size_t n_normal = labels.size() - n_anomalous;
  if (n_anomalous == 0 || n_normal == 0) {
    throw SingleClass("roc: both classes must be present");
  }

  std::vector<std::pair<double, IbiLabel>> ranked;
  ranked.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    ranked.emplace_back(scores[i], labels[i]);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<double> thresholds(scores.begin(), scores.end());
  thresholds.push_back(0.0);
  thresholds.push_back(1.0);
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  RocResult result;
  result.points.reserve(thresholds.size());
  std::size_t flagged_anomalous = 0;
  std::size_t flagged_normal = 0;
  std::size_t next = 0;
  for (const double tau : thresholds) {
    while (next < ranked.size() && ranked[next].first >= tau) {
      if (ranked[next].second == IbiLabel::Anomalous) {
        ++flagged_anomalous;
      } else {
        ++flagged_normal;
      }
      ++next;
    }
    result.points.push_back(
        {tau,
         static_cast<double>(flagged_normal) / static_cast<double>(n_normal),
         static_cast<double>(flagged_anomalous) /
             static_cast<double>(n_anomalous)});
  }

  // Trapezoid from the all-negative corner through the sweep; the tau = 0
  // point always reaches (1, 1).
  double auc = 0.0;
  double prev_far = 0.0;
  double prev_dr = 0.0;
  for (const RocPoint& p : result.points) {
    auc += (p.false_alarm_rate - prev_far) * (p.detection_rate + prev_dr) * 0.5;
    prev_far = p.false_alarm_rate;
    prev_dr = p.detection_rate;
  }
  result.auc = auc;
  return result;
}

Histogram histogram(std::span<const double> values, std::size_t bins,
                    double lo, double hi) {
  if (bins < 1) {
    throw std::invalid_argument("histogram: bins must be at least 1");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("histogram: range must satisfy lo < hi");
  }
  Histogram h;
  h.edges.reserve(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges.push_back(lo + width * static_cast<double>(i));
  }
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (const double v : values) {
    if (v < lo || v > hi) continue;
    const auto idx = std::min(
        bins - 1, static_cast<std::size_t>((v - lo) / width));
    ++h.counts[idx];
  }
  return h;
}

}  // namespace ibitrack

#ifndef IBITRACK_SYNTH_HPP_
#define IBITRACK_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ibitrack/ig_math.hpp"

namespace ibitrack {

// Strictly increasing beat timestamps, seconds, first element >= 0.
struct BeatSeries {
  std::vector<double> times;
};

// Consecutive differences of the beat times. Interval i ends at beat i + 1.
std::vector<double> intervals(const BeatSeries& beats);

enum class IbiLabel : std::uint8_t {
  Normal = 0,
  Anomalous = 1,
};

// Per-interval ground truth emitted by the corruption step. truth_params is
// optional per-interval generation parameters; empty unless a caller fills
// it.
struct LabeledIbis {
  std::vector<double> ibis;
  std::vector<IbiLabel> labels;
  std::vector<IGParams> truth_params;
};

struct CorruptionResult {
  BeatSeries beats;
  LabeledIbis ibis;
  // Bookkeeping for output metadata.
  std::size_t deleted = 0;
  std::size_t inserted = 0;
};

// n beats at the cumulative sums of n independent draws from IG(p).
BeatSeries gen_stationary(const IGParams& p, std::size_t n, Rng& rng);

// i-th interval drawn from IG(mu_path[i], lambda_path[i]); beats are the
// cumulative sums. Throws LengthMismatch if the paths differ in length.
BeatSeries gen_drifting(std::span<const double> mu_path,
                        std::span<const double> lambda_path, Rng& rng);

// Perturbs beat locations with the two error types: missed detections
// (each interior beat deleted independently with probability p_m; the first
// and last beats are never deleted) and false detections (floor(p_f * N)
// beats inserted uniformly over [t_first, t_last], re-drawn until strictly
// increasing). An interval is labeled anomalous when it merges across a
// deletion or borders an inserted beat; intervals touched by both stay
// anomalous.
CorruptionResult corrupt(const BeatSeries& beats, double p_m, double p_f,
                         Rng& rng);

}  // namespace ibitrack

#endif  // IBITRACK_SYNTH_HPP_

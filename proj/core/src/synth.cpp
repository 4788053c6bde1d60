#include "ibitrack/synth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ibitrack/errors.hpp"

namespace ibitrack {

std::vector<double> intervals(const BeatSeries& beats) {
  std::vector<double> out;
  if (beats.times.size() < 2) return out;
  out.reserve(beats.times.size() - 1);
  for (std::size_t i = 1; i < beats.times.size(); ++i) {
    out.push_back(beats.times[i] - beats.times[i - 1]);
  }
  return out;
}

BeatSeries gen_stationary(const IGParams& p, std::size_t n, Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("gen_stationary: n must be at least 1");
  }
  BeatSeries beats;
  beats.times.reserve(n);
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t += ig_sample(p, rng);
    beats.times.push_back(t);
  }
  return beats;
}

BeatSeries gen_drifting(std::span<const double> mu_path,
                        std::span<const double> lambda_path, Rng& rng) {
  if (mu_path.size() != lambda_path.size()) {
    throw LengthMismatch("gen_drifting: parameter paths differ in length");
  }
  if (mu_path.empty()) {
    throw std::invalid_argument("gen_drifting: paths must be non-empty");
  }
  BeatSeries beats;
  beats.times.reserve(mu_path.size());
  double t = 0.0;
  for (std::size_t i = 0; i < mu_path.size(); ++i) {
    t += ig_sample(IGParams(mu_path[i], lambda_path[i]), rng);
    beats.times.push_back(t);
  }
  return beats;
}

CorruptionResult corrupt(const BeatSeries& beats, double p_m, double p_f,
                         Rng& rng) {
  if (!(p_m >= 0.0) || !(p_m < 1.0) || !(p_f >= 0.0) || !(p_f < 1.0)) {
    throw std::invalid_argument("corrupt: probabilities must lie in [0, 1)");
  }
  const std::vector<double>& times = beats.times;
  const std::size_t n = times.size();
  if (n < 2) {
    throw std::invalid_argument("corrupt: need at least two beats");
  }

  // Beats paired with their original index; -1 marks an insertion.
  std::vector<std::pair<double, std::ptrdiff_t>> kept;
  kept.reserve(n);

  // Missed detections: interior beats dropped independently. The first and
  // last beats survive so the record duration is preserved.
  std::size_t deleted = 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  kept.emplace_back(times.front(), 0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (p_m > 0.0 && unit(rng) < p_m) {
      ++deleted;
    } else {
      kept.emplace_back(times[i], static_cast<std::ptrdiff_t>(i));
    }
  }
  kept.emplace_back(times.back(), static_cast<std::ptrdiff_t>(n - 1));

  // False detections: floor(p_f * N) beats uniform over the record, re-drawn
  // on any coincidence so the output stays strictly increasing.
  const auto n_insert = static_cast<std::size_t>(p_f * static_cast<double>(n));
  std::set<double> seen;
  for (const auto& [t, idx] : kept) seen.insert(t);
  std::uniform_real_distribution<double> place(times.front(), times.back());
  for (std::size_t k = 0; k < n_insert; ++k) {
    double t = place(rng);
    while (seen.count(t) > 0) t = place(rng);
    seen.insert(t);
    kept.emplace_back(t, -1);
  }
  std::sort(kept.begin(), kept.end());

  CorruptionResult result;
  result.deleted = deleted;
  result.inserted = n_insert;
  result.beats.times.reserve(kept.size());
  for (const auto& [t, idx] : kept) result.beats.times.push_back(t);

  // An output interval is anomalous when it merges across a deletion (its
  // endpoints were not adjacent originally) or borders an inserted beat.
  result.ibis.ibis.reserve(kept.size() - 1);
  result.ibis.labels.reserve(kept.size() - 1);
  for (std::size_t i = 1; i < kept.size(); ++i) {
    const auto& [t_prev, idx_prev] = kept[i - 1];
    const auto& [t_cur, idx_cur] = kept[i];
    result.ibis.ibis.push_back(t_cur - t_prev);
    const bool split = idx_prev < 0 || idx_cur < 0;
    const bool merged = !split && idx_cur - idx_prev > 1;
    result.ibis.labels.push_back(split || merged ? IbiLabel::Anomalous
                                                 : IbiLabel::Normal);
  }
  return result;
}

}  // namespace ibitrack

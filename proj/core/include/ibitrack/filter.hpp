#ifndef IBITRACK_FILTER_HPP_
#define IBITRACK_FILTER_HPP_

#include <cstdint>
#include <optional>

#include "ibitrack/ig_math.hpp"

namespace ibitrack {

struct FilterConfig {
  // Per-step exponential discount of the conjugate state; strictly inside
  // (0, 1). The default gives an effective memory of 1/(1-gamma) ~ 375
  // beats, about five minutes at a 0.8 s mean interval, so the filter's std
  // is comparable to a 5-minute windowed SDNN.
  double gamma = 0.9973;
  // Prior probability that an interval is anomalous, in [0, 1).
  double p_e = 0.09;
  // Rate of the exponential anomaly model, 1/seconds. A mean of 1 s spreads
  // mass over both short split intervals and long merged intervals.
  double lambda_e = 1.0;
  ModeVariant mode_variant = ModeVariant::Analytic;
  // Number of initial intervals absorbed at full weight while the state
  // accumulates enough spread for the mode to be reliable.
  std::int64_t warmup_beats = 10;
  // Clamp interval for lambda* when the mode is degenerate.
  double lambda_min = 1.0;
  double lambda_max = 1e6;
  // Admissible interval range, seconds. Intervals outside are hard-rejected:
  // they never enter the soft update.
  double r_min = 0.2;
  double r_max = 5.0;

  // Throws InvalidConfig on any violated invariant.
  void validate() const;
};

// The filter's entire memory: the conjugate statistics plus step bookkeeping.
struct FilterState {
  ConjugateParams theta;
  std::int64_t steps = 0;
  bool warmed_up = false;
};

// Per-interval record. beta0/beta1 are the hypothesis probabilities as
// computed, before any warm-up or gating override of the update weight, so
// the reported stream stays informative for downstream ROC evaluation.
struct StepOutput {
  double beta0;        // P(interval is anomalous)
  double beta1;        // 1 - beta0
  double mu_star;      // mode of the tracked distribution, seconds
  double lambda_star;  // shape at the mode, after clamping
  double mean_ibi;     // = mu_star
  double std_ibi;      // sqrt(mu_star^3 / lambda_star)
};

struct Estimate {
  double mean_ibi;
  double var_ibi;
  double mu_star;
  double lambda_star;
};

// Streaming interval filter: evaluates the anomalous/valid hypothesis pair
// for each interval and folds the mixture back into a single conjugate state
// by a convex combination, so one update costs a handful of flops.
//
// A filter instance is single-stream sequential; instances are plain values
// and distinct streams may run concurrently with no shared state.
class IbiFilter {
 public:
  // Seeds the state with warmup_beats pseudo-observations of seed_ibi
  // (default 0.8 s). Throws InvalidConfig if the config is invalid or the
  // seed lies outside (r_min, r_max).
  explicit IbiFilter(const FilterConfig& config,
                     std::optional<double> seed_ibi = std::nullopt);

  // Resumes from a previously captured state.
  IbiFilter(const FilterConfig& config, FilterState state);

  // Absorbs one interval, returns the per-interval record. Throws
  // NonPositiveInterval for r <= 0. Intervals outside [r_min, r_max] are
  // admitted but contribute nothing to the state; during warm-up, in-range
  // intervals are absorbed at full weight.
  StepOutput step(double r);

  // Current distribution summary: mean 2a/b and variance mu*^3 / lambda*
  // under the configured variant. Meaningful once warmed up. With strict set,
  // throws DegenerateState instead of clamping lambda*.
  Estimate estimate(bool strict = false) const;

  const FilterState& state() const { return state_; }
  const FilterConfig& config() const { return config_; }

 private:
  FilterConfig config_;
  FilterState state_;
};

}  // namespace ibitrack

#endif  // IBITRACK_FILTER_HPP_

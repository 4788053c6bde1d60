#include "ibitrack/filter.hpp"

#include <cmath>
#include <limits>

#include "ibitrack/errors.hpp"

namespace ibitrack {

namespace {

constexpr double kDefaultSeedIbi = 0.8;

struct ClampedMode {
  double mu;
  double lambda;
  bool clamped;
};

// Mode of f_c with lambda* forced into [lambda_min, lambda_max]. A collapsed
// state (identical absorbed intervals) drives the analytic lambda* to
// infinity and the verbatim form non-positive; both mean vanishing spread,
// so they clamp to lambda_max.
ClampedMode clamped_mode(const ConjugateParams& theta,
                         const FilterConfig& config) {
  double mu = 2.0 * theta.a / theta.b;
  double lambda;
  bool clamped = false;
  try {
    const IGParams mode = fc_mode(theta, config.mode_variant);
    mu = mode.mu;
    lambda = mode.lambda;
    if (!std::isfinite(lambda) || lambda > config.lambda_max) {
      lambda = config.lambda_max;
      clamped = true;
    } else if (lambda < config.lambda_min) {
      lambda = config.lambda_min;
      clamped = true;
    }
  } catch (const DegenerateState&) {
    lambda = config.lambda_max;
    clamped = true;
  }
  return {mu, lambda, clamped};
}

}  // namespace

void FilterConfig::validate() const {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw InvalidConfig("gamma must lie strictly inside (0, 1)");
  }
  if (!(p_e >= 0.0) || !(p_e < 1.0)) {
    throw InvalidConfig("p_e must lie in [0, 1)");
  }
  if (!(lambda_e > 0.0)) {
    throw InvalidConfig("lambda_e must be positive");
  }
  if (warmup_beats < 1) {
    throw InvalidConfig("warmup_beats must be at least 1");
  }
  if (!(lambda_min > 0.0) || !(lambda_min <= lambda_max)) {
    throw InvalidConfig("lambda bounds must satisfy 0 < lambda_min <= lambda_max");
  }
  if (!(r_min > 0.0) || !(r_min <= r_max)) {
    throw InvalidConfig("interval bounds must satisfy 0 < r_min <= r_max");
  }
}

IbiFilter::IbiFilter(const FilterConfig& config, std::optional<double> seed_ibi)
    : config_(config) {
  config_.validate();
  const double seed = seed_ibi.value_or(kDefaultSeedIbi);
  if (!(seed > config_.r_min) || !(seed < config_.r_max)) {
    throw InvalidConfig("seed_ibi must lie inside (r_min, r_max)");
  }
  state_.theta = static_cast<double>(config_.warmup_beats) * observation_stats(seed);
  state_.steps = 0;
  state_.warmed_up = false;
}

IbiFilter::IbiFilter(const FilterConfig& config, FilterState state)
    : config_(config), state_(state) {
  config_.validate();
}

StepOutput IbiFilter::step(double r) {
  if (!(r > 0.0)) {
    throw NonPositiveInterval("interval must be positive");
  }

  const ClampedMode mode = clamped_mode(state_.theta, config_);
  const IGParams tracked(mode.mu, mode.lambda);

  // Hypothesis likelihoods in log domain; f_IG underflows quickly away from
  // the mode.
  const double log_h0 =
      config_.p_e > 0.0
          ? std::log(config_.p_e) + exp_logpdf(r, config_.lambda_e)
          : -std::numeric_limits<double>::infinity();
  const double log_h1 = std::log1p(-config_.p_e) + ig_logpdf(r, tracked);

  double beta1;
  if (std::isinf(log_h0) && log_h0 < 0.0) {
    beta1 = 1.0;
  } else {
    beta1 = 1.0 / (1.0 + std::exp(log_h0 - log_h1));
  }
  const double beta0 = 1.0 - beta1;

  // Update weight: hard gate outside the admissible range wins over the
  // warm-up forcing; the reported betas stay as computed.
  double weight = beta1;
  if (r < config_.r_min || r > config_.r_max) {
    weight = 0.0;
  } else if (state_.steps < config_.warmup_beats) {
    weight = 1.0;
  }

  state_.theta = config_.gamma * state_.theta;
  if (weight > 0.0) {
    state_.theta = state_.theta + weight * observation_stats(r);
  }
  state_.steps += 1;
  state_.warmed_up = state_.steps >= config_.warmup_beats;

  StepOutput out;
  out.beta0 = beta0;
  out.beta1 = beta1;
  out.mu_star = mode.mu;
  out.lambda_star = mode.lambda;
  out.mean_ibi = mode.mu;
  out.std_ibi = std::sqrt(mode.mu * mode.mu * mode.mu / mode.lambda);
  return out;
}

Estimate IbiFilter::estimate(bool strict) const {
  const ClampedMode mode = clamped_mode(state_.theta, config_);
  if (strict && mode.clamped) {
    throw DegenerateState("estimate: lambda* required clamping");
  }
  Estimate est;
  est.mean_ibi = 2.0 * state_.theta.a / state_.theta.b;
  est.mu_star = mode.mu;
  est.lambda_star = mode.lambda;
  est.var_ibi = mode.mu * mode.mu * mode.mu / mode.lambda;
  return est;
}

}  // namespace ibitrack

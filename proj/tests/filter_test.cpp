#include "ibitrack/filter.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "ibitrack/errors.hpp"
#include "oracles.hpp"

using namespace ibitrack;

namespace {

FilterConfig test_config() {
  FilterConfig config;
  config.gamma = 0.99;
  config.p_e = 0.09;
  config.lambda_e = 1.0;
  config.warmup_beats = 10;
  return config;
}

oracles::StepOracle oracle_for(const IbiFilter& filter) {
  const FilterConfig& c = filter.config();
  const FilterState& s = filter.state();
  oracles::StepOracle o;
  o.a = s.theta.a;
  o.b = s.theta.b;
  o.c = s.theta.c;
  o.d = s.theta.d;
  o.gamma = c.gamma;
  o.p_e = c.p_e;
  o.lambda_e = c.lambda_e;
  o.lambda_min = c.lambda_min;
  o.lambda_max = c.lambda_max;
  o.r_min = c.r_min;
  o.r_max = c.r_max;
  o.warmup = c.warmup_beats;
  o.steps = s.steps;
  o.analytic = c.mode_variant == ModeVariant::Analytic;
  return o;
}

}  // namespace

TEST_CASE("config validation") {
  FilterConfig config;
  CHECK_NOTHROW(config.validate());

  auto broken = config;
  broken.gamma = 1.0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
  broken = config;
  broken.gamma = 0.0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
  broken = config;
  broken.p_e = 1.0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
  broken = config;
  broken.lambda_e = 0.0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
  broken = config;
  broken.warmup_beats = 0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
  broken = config;
  broken.lambda_min = 10.0;
  broken.lambda_max = 1.0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
  broken = config;
  broken.r_min = 0.0;
  CHECK_THROWS_AS(broken.validate(), InvalidConfig);
}

TEST_CASE("init seeds pseudo-observations") {
  IbiFilter filter(test_config(), 0.8);
  const FilterState& s = filter.state();
  CHECK(s.theta.a == doctest::Approx(4.0));
  CHECK(s.theta.b == doctest::Approx(10.0));
  CHECK(s.theta.c == doctest::Approx(6.25));
  CHECK(s.theta.d == doctest::Approx(5.0));
  CHECK(s.steps == 0);
  CHECK_FALSE(s.warmed_up);
  CHECK(filter.estimate().mu_star == doctest::Approx(0.8));
}

TEST_CASE("init rejects bad seeds") {
  CHECK_THROWS_AS(IbiFilter(test_config(), -1.0), InvalidConfig);
  CHECK_THROWS_AS(IbiFilter(test_config(), 0.0), InvalidConfig);
  CHECK_THROWS_AS(IbiFilter(test_config(), 7.0), InvalidConfig);
}

TEST_CASE("step rejects non-positive intervals") {
  IbiFilter filter(test_config());
  CHECK_THROWS_AS(filter.step(0.0), NonPositiveInterval);
  CHECK_THROWS_AS(filter.step(-0.4), NonPositiveInterval);
}

TEST_CASE("first step from the seeded state, pinned") {
  // Independently evaluated trace for theta = (4, 10, 6.25, 5), gamma = 0.99,
  // p_e = 0.09, lambda_e = 1, r = 0.8: the seed state is exactly degenerate
  // (4ac = b^2), so lambda* clamps to lambda_max.
  IbiFilter filter(test_config(), 0.8);
  const StepOutput out = filter.step(0.8);
  CHECK(out.mu_star == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(out.lambda_star == doctest::Approx(1e6));
  CHECK(out.beta1 == doctest::Approx(0.99992030045687741).epsilon(1e-12));
  CHECK(out.beta0 == doctest::Approx(7.9699543122591088e-05).epsilon(1e-9));
  CHECK(out.std_ibi ==
        doctest::Approx(0.00071554175279993284).epsilon(1e-12));
  CHECK(out.mean_ibi == out.mu_star);
  // Warm-up absorbs at full weight regardless of beta.
  const ConjugateParams& theta = filter.state().theta;
  CHECK(theta.a == doctest::Approx(0.99 * 4.0 + 0.4).epsilon(1e-15));
  CHECK(theta.b == doctest::Approx(0.99 * 10.0 + 1.0).epsilon(1e-15));
  CHECK(theta.c == doctest::Approx(0.99 * 6.25 + 0.625).epsilon(1e-15));
  CHECK(theta.d == doctest::Approx(0.99 * 5.0 + 0.5).epsilon(1e-15));
  CHECK(filter.state().steps == 1);
}

TEST_CASE("p_e = 0 reduces to the plain recursion") {
  FilterConfig config = test_config();
  config.p_e = 0.0;
  config.warmup_beats = 1;
  IbiFilter filter(config, 0.8);
  filter.step(0.75);  // past warm-up
  CHECK(filter.state().warmed_up);

  const ConjugateParams before = filter.state().theta;
  const StepOutput out = filter.step(0.9);
  CHECK(out.beta1 == 1.0);
  CHECK(out.beta0 == 0.0);
  const ConjugateParams& after = filter.state().theta;
  CHECK(after.a == doctest::Approx(0.99 * before.a + 0.45).epsilon(1e-15));
  CHECK(after.b == doctest::Approx(0.99 * before.b + 1.0).epsilon(1e-15));
  CHECK(after.c ==
        doctest::Approx(0.99 * before.c + 0.5 / 0.9).epsilon(1e-15));
  CHECK(after.d == doctest::Approx(0.99 * before.d + 0.5).epsilon(1e-15));
}

TEST_CASE("equal hypothesis likelihoods give beta = 1/2") {
  FilterConfig config = test_config();
  config.warmup_beats = 1;
  IbiFilter filter(config, 0.8);
  Rng rng(11);
  std::normal_distribution<double> jitter(0.8, 0.03);
  for (int i = 0; i < 200; ++i) filter.step(jitter(rng));

  // Solve log h1(r) = log h0(r) on the long side of the mode by bisection.
  const Estimate est = filter.estimate();
  const IGParams tracked(est.mu_star, est.lambda_star);
  auto log_ratio = [&](double r) {
    return std::log1p(-config.p_e) + ig_logpdf(r, tracked) -
           (std::log(config.p_e) + exp_logpdf(r, config.lambda_e));
  };
  double lo = est.mu_star;
  double hi = 5.0;
  REQUIRE(log_ratio(lo) > 0.0);
  REQUIRE(log_ratio(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_ratio(mid) > 0.0 ? lo : hi) = mid;
  }
  const double r_even = 0.5 * (lo + hi);

  const ConjugateParams before = filter.state().theta;
  const StepOutput out = filter.step(r_even);
  CHECK(out.beta1 == doctest::Approx(0.5).epsilon(1e-9));
  const ConjugateParams& after = filter.state().theta;
  CHECK(after.a == doctest::Approx(config.gamma * before.a +
                                   out.beta1 * 0.5 * r_even).epsilon(1e-12));
  CHECK(after.b ==
        doctest::Approx(config.gamma * before.b + out.beta1).epsilon(1e-12));
}

TEST_CASE("vanishing intervals are flagged as anomalous") {
  FilterConfig config = test_config();
  config.warmup_beats = 1;
  IbiFilter filter(config, 0.8);
  Rng rng(12);
  std::normal_distribution<double> jitter(0.8, 0.03);
  for (int i = 0; i < 100; ++i) filter.step(jitter(rng));

  const StepOutput out = filter.step(1e-6);
  CHECK(out.beta0 > 0.999999);
  CHECK(out.beta1 < 1e-6);
}

TEST_CASE("random stream agrees with the step oracle") {
  FilterConfig config = test_config();
  config.gamma = 0.9973;
  IbiFilter filter(config, 0.8);
  oracles::StepOracle oracle = oracle_for(filter);

  Rng rng(2024);
  std::uniform_real_distribution<double> draw(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    // Mix of plausible beats, short splits, long merges, and gated extremes.
    const double u = draw(rng);
    double r;
    if (u < 0.80) {
      r = 0.7 + 0.2 * draw(rng);
    } else if (u < 0.90) {
      r = 0.05 + 0.3 * draw(rng);
    } else if (u < 0.98) {
      r = 1.2 + 2.0 * draw(rng);
    } else {
      r = 5.5 + 10.0 * draw(rng);  // outside r_bounds, hard-gated
    }
    const StepOutput got = filter.step(r);
    const oracles::StepOracle::Out want = oracle.step(r);

    REQUIRE(got.beta1 == doctest::Approx(want.beta1).epsilon(1e-12));
    REQUIRE(got.mu_star == doctest::Approx(want.mu_star).epsilon(1e-12));
    REQUIRE(got.lambda_star ==
            doctest::Approx(want.lambda_star).epsilon(1e-12));
    REQUIRE(got.std_ibi == doctest::Approx(want.std_ibi).epsilon(1e-12));
    REQUIRE(filter.state().theta.a == doctest::Approx(oracle.a).epsilon(1e-12));
    REQUIRE(filter.state().theta.b == doctest::Approx(oracle.b).epsilon(1e-12));
    REQUIRE(filter.state().theta.c == doctest::Approx(oracle.c).epsilon(1e-12));
    REQUIRE(filter.state().theta.d == doctest::Approx(oracle.d).epsilon(1e-12));

    // Probability sanity on every step.
    REQUIRE(got.beta0 >= 0.0);
    REQUIRE(got.beta0 <= 1.0);
    REQUIRE(got.beta0 + got.beta1 == 1.0);
    REQUIRE(std::isfinite(got.mu_star));
    REQUIRE(std::isfinite(got.lambda_star));
    REQUIRE(std::isfinite(got.std_ibi));
  }
}

TEST_CASE("constant clean stream converges to the fixed point") {
  FilterConfig config = test_config();
  config.p_e = 0.0;
  config.gamma = 0.99;
  IbiFilter filter(config, 1.0);  // seed away from the stream value
  for (int i = 0; i < 3000; ++i) filter.step(0.8);
  CHECK(std::abs(filter.estimate().mu_star - 0.8) < 1e-6);
  CHECK(std::abs(filter.estimate().mean_ibi - 0.8) < 1e-6);
}

TEST_CASE("b stays bounded on adversarial streams") {
  for (double gamma : {0.5, 0.99}) {
    for (std::int64_t warmup : {std::int64_t{1}, std::int64_t{500}}) {
      FilterConfig config = test_config();
      config.gamma = gamma;
      config.warmup_beats = warmup;
      IbiFilter filter(config, 0.8);
      const double b0 = filter.state().theta.b;
      const double bound = std::max(b0, 1.0 / (1.0 - gamma)) + 1e-9;

      Rng rng(77);
      std::uniform_real_distribution<double> draw(0.0, 1.0);
      for (int i = 0; i < 3000; ++i) {
        const double u = draw(rng);
        const double r = u < 0.3   ? 0.2001
                         : u < 0.6 ? 4.999
                         : u < 0.8 ? 0.8
                                   : 42.0;  // gated
        filter.step(r);
        CHECK(filter.state().theta.b <= bound);
      }
    }
  }
}

TEST_CASE("full-filter scale equivariance in the analytic mode") {
  // Scaling intervals by s, lambda_e by 1/s, and the seed, gate, and clamp
  // intervals by s leaves the beta sequence unchanged and scales the tracked
  // mode by s.
  Rng rng(31415);
  std::uniform_real_distribution<double> draw(0.0, 1.0);
  std::vector<double> stream;
  for (int i = 0; i < 2000; ++i) {
    const double u = draw(rng);
    stream.push_back(u < 0.85 ? 0.65 + 0.3 * draw(rng)
                              : 0.05 + 2.5 * draw(rng));
  }

  for (double s : {0.5, 2.0, 10.0}) {
    FilterConfig base;
    IbiFilter reference(base, 0.8);

    FilterConfig scaled = base;
    scaled.lambda_e = base.lambda_e / s;
    scaled.r_min = base.r_min * s;
    scaled.r_max = base.r_max * s;
    scaled.lambda_min = base.lambda_min * s;
    scaled.lambda_max = base.lambda_max * s;
    IbiFilter rescaled(scaled, 0.8 * s);

    for (const double r : stream) {
      const StepOutput a = reference.step(r);
      const StepOutput b = rescaled.step(s * r);
      REQUIRE(b.beta1 == doctest::Approx(a.beta1).epsilon(1e-9));
      REQUIRE(b.mu_star == doctest::Approx(s * a.mu_star).epsilon(1e-9));
      REQUIRE(b.lambda_star ==
              doctest::Approx(s * a.lambda_star).epsilon(1e-9));
    }
  }
}

TEST_CASE("suspicion rises toward both extremes") {
  FilterConfig config = test_config();
  config.warmup_beats = 1;
  IbiFilter filter(config, 0.8);
  Rng rng(5150);
  std::normal_distribution<double> jitter(0.8, 0.035);
  for (int i = 0; i < 500; ++i) filter.step(std::max(0.3, jitter(rng)));

  const Estimate est = filter.estimate();
  // The exponential tail must dominate the IG tail for the long-side limit.
  REQUIRE(config.lambda_e <
          est.lambda_star / (2 * est.mu_star * est.mu_star));

  auto beta0_at = [&](double r) {
    IbiFilter probe(config, filter.state());
    return probe.step(r).beta0;
  };
  // Short side: beta0 increases monotonically toward 1 as r -> 0+.
  double prev = beta0_at(0.5);
  for (double r : {0.3, 0.2, 0.1, 0.05, 0.01}) {
    const double cur = beta0_at(r);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(prev > 0.9999);
  // Long side likewise.
  prev = beta0_at(1.5);
  for (double r : {2.0, 3.0, 5.0, 10.0, 30.0}) {
    const double cur = beta0_at(r);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(prev > 0.9999);
}

TEST_CASE("estimate mirrors the printed variance forms") {
  FilterConfig config = test_config();
  config.lambda_min = 1e-3;  // keep the hand-computed lambda* unclamped
  FilterState state;
  state.theta = {1.0, 2.0, 3.0, 0.5};
  state.steps = 100;
  state.warmed_up = true;

  config.mode_variant = ModeVariant::PaperVerbatim;
  {
    IbiFilter filter(config, state);
    const Estimate est = filter.estimate();
    CHECK(est.mean_ibi == doctest::Approx(1.0));
    CHECK(est.var_ibi == doctest::Approx(0.5).epsilon(1e-12));
    // 16 a^4 d / (b^3 (2ac - b^2)) written out.
    const double printed = 16.0 * 1.0 * 0.5 / (8.0 * (6.0 - 4.0));
    CHECK(est.var_ibi == doctest::Approx(printed).epsilon(1e-12));
  }

  config.mode_variant = ModeVariant::Analytic;
  {
    IbiFilter filter(config, state);
    const Estimate est = filter.estimate();
    CHECK(est.mean_ibi == doctest::Approx(1.0));
    CHECK(est.var_ibi == doctest::Approx(4.0).epsilon(1e-12));
    // 2 a^2 (4ac - b^2) / (b^3 d) written out.
    const double closed = 2.0 * 1.0 * (12.0 - 4.0) / (8.0 * 0.5);
    CHECK(est.var_ibi == doctest::Approx(closed).epsilon(1e-12));
  }

  // Mean scales linearly in a under (a, b, c, d) -> (sa, b, c/s, d).
  for (double s : {0.5, 3.0}) {
    FilterState scaled = state;
    scaled.theta = {s * 1.0, 2.0, 3.0 / s, 0.5};
    IbiFilter filter(config, scaled);
    CHECK(filter.estimate().mean_ibi == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("strict estimate refuses a collapsed state") {
  IbiFilter filter(test_config(), 0.8);  // seed state is exactly degenerate
  CHECK_THROWS_AS(filter.estimate(true), DegenerateState);
  CHECK_NOTHROW(filter.estimate());
  CHECK(filter.estimate().lambda_star == doctest::Approx(1e6));
}

TEST_CASE("degenerate identical streams stay finite after clamping") {
  for (ModeVariant variant :
       {ModeVariant::Analytic, ModeVariant::PaperVerbatim}) {
    FilterConfig config = test_config();
    config.mode_variant = variant;
    IbiFilter filter(config, 0.8);
    for (int i = 0; i < 200; ++i) {
      const StepOutput out = filter.step(0.8);
      REQUIRE(std::isfinite(out.lambda_star));
      REQUIRE(out.lambda_star > 0.0);
      REQUIRE(out.lambda_star <= config.lambda_max);
      REQUIRE(std::isfinite(out.std_ibi));
    }
  }
}

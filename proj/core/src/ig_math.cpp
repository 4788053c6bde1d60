#include "ibitrack/ig_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ibitrack/errors.hpp"

namespace ibitrack {

namespace {
constexpr double kLogTwoPi = 1.8378770664093454836;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

IGParams::IGParams(double mu_arg, double lambda_arg)
    : mu(mu_arg), lambda(lambda_arg) {
  if (!(mu > 0.0) || !(lambda > 0.0)) {
    throw std::invalid_argument("IGParams: mu and lambda must be positive");
  }
}

ConjugateParams operator*(double s, const ConjugateParams& t) {
  return {s * t.a, s * t.b, s * t.c, s * t.d};
}

ConjugateParams operator+(const ConjugateParams& x, const ConjugateParams& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

ConjugateParams observation_stats(double r) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("observation_stats: interval must be positive");
  }
  return {0.5 * r, 1.0, 0.5 / r, 0.5};
}

double ig_logpdf(double t, const IGParams& p) {
  if (t <= 0.0) return kNegInf;
  const double dev = t - p.mu;
  return 0.5 * (std::log(p.lambda) - kLogTwoPi - 3.0 * std::log(t)) -
         p.lambda * dev * dev / (2.0 * p.mu * p.mu * t);
}

MeanVar ig_mean_var(const IGParams& p) {
  return {p.mu, p.mu * p.mu * p.mu / p.lambda};
}

double ig_sample(const IGParams& p, Rng& rng) {
  // Michael/Schucany/Haas two-root transformation. The smaller root is
  // formed with the cancellation-free expression mu / (1 + z/2 + sqrt(z +
  // z^2/4)); the two roots multiply to mu^2.
  const double nu = std::normal_distribution<double>{}(rng);
  const double z = p.mu * nu * nu / p.lambda;
  const double small_root =
      p.mu / (1.0 + 0.5 * z + std::sqrt(z + 0.25 * z * z));
  const double u = std::uniform_real_distribution<double>{}(rng);
  if (u <= p.mu / (p.mu + small_root)) return small_root;
  return p.mu * p.mu / small_root;
}

double exp_logpdf(double t, double lambda_e) {
  if (!(lambda_e > 0.0)) {
    throw std::invalid_argument("exp_logpdf: lambda_e must be positive");
  }
  if (t < 0.0) return kNegInf;
  return std::log(lambda_e) - lambda_e * t;
}

double fc_logeval(const ConjugateParams& theta, double mu, double lambda) {
  if (!(mu > 0.0) || !(lambda > 0.0)) {
    throw std::invalid_argument("fc_logeval: mu and lambda must be positive");
  }
  const double quad = theta.a / (mu * mu) - theta.b / mu + theta.c;
  return theta.d * std::log(lambda) - lambda * quad;
}

IGParams fc_mode(const ConjugateParams& theta, ModeVariant variant,
                 double eps) {
  if (!(theta.a > 0.0) || !(theta.b > 0.0) || !(theta.d > 0.0)) {
    throw DegenerateState("fc_mode: requires a > 0, b > 0, d > 0");
  }
  const double mu_star = 2.0 * theta.a / theta.b;
  const double spread = 4.0 * theta.a * theta.c - theta.b * theta.b;
  if (variant == ModeVariant::Analytic) {
    if (spread <= eps) {
      throw DegenerateState("fc_mode: 4ac - b^2 <= eps, all-identical state");
    }
    return {mu_star, 4.0 * theta.a * theta.d / spread};
  }
  const double num = 2.0 * theta.a * theta.c - theta.b * theta.b;
  if (num <= eps) {
    throw DegenerateState("fc_mode: 2ac - b^2 <= eps in verbatim form");
  }
  return {mu_star, num / (2.0 * theta.a * theta.d)};
}

}  // namespace ibitrack

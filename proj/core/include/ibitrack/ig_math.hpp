#ifndef IBITRACK_IG_MATH_HPP_
#define IBITRACK_IG_MATH_HPP_

#include <random>

namespace ibitrack {

// All randomness in the library flows through a caller-owned engine.
using Rng = std::mt19937_64;

// Degeneracy guard for the conjugate mode, in natural units. Far below any
// physiological variance scale.
inline constexpr double kDegeneracyEps = 1e-12;

// Parameters of an inverse Gaussian interval distribution, both in seconds.
// mu is the mean interval and lambda the shape: var = mu^3 / lambda.
struct IGParams {
  double mu;
  double lambda;
  IGParams(double mu, double lambda);
};

// Sufficient statistics (a, b, c, d) of the natural conjugate prior
//
//   f_c(lambda, mu | a, b, c, d) ~ lambda^d * exp(-lambda (a/mu^2 - b/mu + c))
//
// over mu > 0, lambda > 0. 2a is a (discounted) sum of intervals, b an
// effective count, 2c a sum of inverse intervals, 2d an effective count.
// Components are non-negative; any state accumulated from positive intervals
// additionally satisfies 4ac >= b^2, with equality only when every absorbed
// interval was identical.
struct ConjugateParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

ConjugateParams operator*(double s, const ConjugateParams& t);
ConjugateParams operator+(const ConjugateParams& x, const ConjugateParams& y);

// Sufficient statistics contributed by a single interval r:
// (r/2, 1, 1/(2r), 1/2).
ConjugateParams observation_stats(double r);

// Which closed form to use for the maximizer of f_c. Analytic is the actual
// maximizer (gradient of f_c set to zero) and scales correctly with the time
// unit; PaperVerbatim keeps the published alternative form
// (2ac - b^2) / (2ad), which disagrees with the gradient solution and is
// retained for faithful reproduction.
enum class ModeVariant {
  Analytic,
  PaperVerbatim,
};

struct MeanVar {
  double mean;
  double variance;
};

// Log-density of the inverse Gaussian at t; -inf for t <= 0.
double ig_logpdf(double t, const IGParams& p);

// mean = mu, variance = mu^3 / lambda.
MeanVar ig_mean_var(const IGParams& p);

// Exact draw via the two-root transformation (one squared standard normal,
// one uniform for root selection).
double ig_sample(const IGParams& p, Rng& rng);

// Log-density of the anomalous-interval model lambda_e * exp(-lambda_e t)
// for t >= 0; -inf for t < 0.
double exp_logpdf(double t, double lambda_e);

// Unnormalized log of f_c at (mu, lambda): d*log(lambda) - lambda*(a/mu^2 -
// b/mu + c).
double fc_logeval(const ConjugateParams& theta, double mu, double lambda);

// Maximizer of f_c under the chosen variant. mu* = 2a/b for both;
// lambda* = 4ad / (4ac - b^2) for Analytic, (2ac - b^2) / (2ad) for
// PaperVerbatim. Throws DegenerateState when the variant's formula has no
// positive solution (denominator or numerator <= eps); clamping policy is
// the caller's.
IGParams fc_mode(const ConjugateParams& theta, ModeVariant variant,
                 double eps = kDegeneracyEps);

}  // namespace ibitrack

#endif  // IBITRACK_IG_MATH_HPP_

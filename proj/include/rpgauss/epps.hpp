#pragma once

#include <string_view>
#include <vector>

#include "rpgauss/linalg.hpp"
#include "rpgauss/rng.hpp"
#include "rpgauss/series.hpp"

namespace rpgauss {

// Fixed uses xi = (1, 2); Random draws xi_1 ~ |N(0,1)|, xi_2 ~ |N(0,4)|.
enum class LambdaMode { Fixed, Random };

std::string_view lambda_mode_name(LambdaMode mode);

// Evaluation frequencies lambda_1, ..., lambda_N: distinct and positive.
struct Lambda {
  std::vector<double> values;
  LambdaMode mode = LambdaMode::Fixed;

  std::size_t size() const { return values.size(); }
};

// Interleaved (Re, Im) pairs of a characteristic function at each lambda_j.
using CfVector = std::vector<double>;

struct EppsResult {
  double statistic = 0.0;  // n Q_n at the minimizer
  unsigned df = 0;         // 2N - 2
  double p_value = 1.0;
  double mu_n = 0.0;
  double gamma_n = 0.0;
  Lambda lambda;
};

struct QMinimum {
  double mu_n = 0.0;
  double gamma_n = 0.0;
  double q_min = 0.0;
};

// lambda_j = xi_j / sqrt(gamma_hat). Random mode redraws while any xi_j is
// below 1e-6 or the two draws are within 1e-6 of each other.
// Throws DegenerateSeriesError when gamma_hat <= 0.
Lambda draw_lambda(double gamma_hat, LambdaMode mode, RngStream& rng);

CfVector empirical_cf_vector(const Series& y, const Lambda& lam);
// (e^{-rho l^2/2} cos(nu l), e^{-rho l^2/2} sin(nu l)) per lambda. rho > 0.
CfVector gaussian_cf_vector(double nu, double rho, const Lambda& lam);

// Largest L with L^5 <= n^2, i.e. floor(n^{2/5}) computed exactly.
std::size_t epps_lag_window(std::size_t n);

// Bartlett-weighted estimate of the spectral density matrix of
// (cos(lambda_j Y_t), sin(lambda_j Y_t))_j at frequency zero, scaled by
// (2 pi n)^-1 and symmetrized.
Matrix spectral_density_at_zero(const Series& y, const Lambda& lam);

// (g_hat - g)^T G+ (g_hat - g). Values in [-1e-12, 0) are clamped to zero;
// anything more negative throws NumericalFailure.
double q_form(const CfVector& g_hat, const CfVector& g_model, const Matrix& g_plus);

// Admissible parameter box around (mean, variance) of y.
struct Theta {
  double mu_lo, mu_hi, rho_lo, rho_hi;
};
Theta epps_theta(double mean, double variance);

// Minimize Q_n(nu, rho) from (mean, variance) of y by the downhill simplex
// with a penalty outside Theta. Q_n can have several local minima for
// skewed data; the simplex settles in the one reached from the start. g_hat / g_plus are supplied by the caller so
// the same routine serves tests that substitute synthetic inputs.
QMinimum minimize_q(const CfVector& g_hat, const Matrix& g_plus, const Lambda& lam, double mean,
                    double variance);
QMinimum minimize_q(const Series& y, const Lambda& lam);

// Full test on a given lambda.
EppsResult epps_test_with_lambda(const Series& y, const Lambda& lam);
// Draws lambda per mode, then runs the test. Requires n >= 8, gamma_hat > 0.
EppsResult epps_test(const Series& y, LambdaMode mode, RngStream& rng);

}  // namespace rpgauss

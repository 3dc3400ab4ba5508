#include "rpgauss/epps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rpgauss/distributions.hpp"
#include "rpgauss/errors.hpp"
#include "rpgauss/nelder_mead.hpp"
#include "rpgauss/special.hpp"

namespace rpgauss {

namespace {

constexpr double kXiFloor = 1e-6;
constexpr double kPenalty = 1e6;
constexpr double kThetaMuWidth = 10.0;
constexpr double kThetaRhoFactor = 100.0;

void check_lambda(const Lambda& lam) {
  if (lam.values.empty()) throw DomainError("lambda: need at least one frequency");
  for (double l : lam.values)
    if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("lambda: frequencies must be positive");
}

// g(Y_t) for all t, stored row-major as n x 2N.
std::vector<double> cf_rows(const Series& y, const Lambda& lam) {
  const std::size_t n = y.size();
  const std::size_t dim = 2 * lam.size();
  std::vector<double> rows(n * dim);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < lam.size(); ++j) {
      const double arg = lam.values[j] * y[t];
      rows[t * dim + 2 * j] = std::cos(arg);
      rows[t * dim + 2 * j + 1] = std::sin(arg);
    }
  return rows;
}

}  // namespace

std::string_view lambda_mode_name(LambdaMode mode) {
  return mode == LambdaMode::Fixed ? "fixed" : "random";
}

Lambda draw_lambda(double gamma_hat, LambdaMode mode, RngStream& rng) {
  if (!(gamma_hat > 0.0)) throw DegenerateSeriesError("draw_lambda: sample variance must be positive");
  double xi1 = 1.0;
  double xi2 = 2.0;
  if (mode == LambdaMode::Random) {
    do {
      xi1 = sample_abs_normal(1.0, rng);
      xi2 = sample_abs_normal(2.0, rng);
    } while (xi1 < kXiFloor || xi2 < kXiFloor || std::fabs(xi1 - xi2) < kXiFloor);
  }
  const double scale = 1.0 / std::sqrt(gamma_hat);
  return Lambda{{xi1 * scale, xi2 * scale}, mode};
}

CfVector empirical_cf_vector(const Series& y, const Lambda& lam) {
  check_lambda(lam);
  if (y.empty()) throw DomainError("empirical_cf_vector: empty series");
  CfVector g(2 * lam.size(), 0.0);
  for (std::size_t j = 0; j < lam.size(); ++j) {
    double re = 0.0, im = 0.0;
    for (double v : y.values()) {
      re += std::cos(lam.values[j] * v);
      im += std::sin(lam.values[j] * v);
    }
    g[2 * j] = re / static_cast<double>(y.size());
    g[2 * j + 1] = im / static_cast<double>(y.size());
  }
  return g;
}

CfVector gaussian_cf_vector(double nu, double rho, const Lambda& lam) {
  check_lambda(lam);
  if (!(rho > 0.0)) throw DomainError("gaussian_cf_vector: rho must be positive");
  CfVector g(2 * lam.size());
  for (std::size_t j = 0; j < lam.size(); ++j) {
    const double l = lam.values[j];
    const double damp = std::exp(-0.5 * rho * l * l);
    g[2 * j] = damp * std::cos(nu * l);
    g[2 * j + 1] = damp * std::sin(nu * l);
  }
  return g;
}

std::size_t epps_lag_window(std::size_t n) {
  const auto n2 = static_cast<unsigned long long>(n) * n;
  std::size_t lag = 0;
  auto pow5 = [](unsigned long long v) { return v * v * v * v * v; };
  while (pow5(lag + 1) <= n2) ++lag;
  return lag;
}

Matrix spectral_density_at_zero(const Series& y, const Lambda& lam) {
  check_lambda(lam);
  const std::size_t n = y.size();
  if (n == 0) throw DomainError("spectral_density_at_zero: empty series");
  const std::size_t dim = 2 * lam.size();

  std::vector<double> dev = cf_rows(y, lam);
  const CfVector g_hat = empirical_cf_vector(y, lam);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t a = 0; a < dim; ++a) dev[t * dim + a] -= g_hat[a];

  const std::size_t window = epps_lag_window(n);
  Matrix acc(dim, dim);
  for (std::size_t lag = 0; lag <= window && lag < n; ++lag) {
    const double w = lag == 0 ? 1.0 : 2.0 * (1.0 - static_cast<double>(lag) / static_cast<double>(window));
    if (w == 0.0) continue;
    for (std::size_t t = 0; t + lag < n; ++t) {
      const double* u = &dev[t * dim];
      const double* v = &dev[(t + lag) * dim];
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) acc(a, b) += w * u[a] * v[b];
    }
  }

  const double scale = 1.0 / (2.0 * std::numbers::pi * static_cast<double>(n));
  Matrix f(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) f(a, b) = 0.5 * scale * (acc(a, b) + acc(b, a));
  return f;
}

double q_form(const CfVector& g_hat, const CfVector& g_model, const Matrix& g_plus) {
  const std::size_t dim = g_hat.size();
  if (g_model.size() != dim || g_plus.rows() != dim || g_plus.cols() != dim)
    throw DomainError("q_form: dimension mismatch");
  std::vector<double> d(dim);
  for (std::size_t i = 0; i < dim; ++i) d[i] = g_hat[i] - g_model[i];
  double q = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) q += d[i] * g_plus(i, j) * d[j];
  if (q < 0.0) {
    if (q < -1e-12) throw NumericalFailure("q_form: quadratic form is negative; pseudo-inverse is broken");
    q = 0.0;
  }
  return q;
}

Theta epps_theta(double mean, double variance) {
  const double sd = std::sqrt(variance);
  return {mean - kThetaMuWidth * sd, mean + kThetaMuWidth * sd, variance / kThetaRhoFactor,
          variance * kThetaRhoFactor};
}

QMinimum minimize_q(const CfVector& g_hat, const Matrix& g_plus, const Lambda& lam, double mean,
                    double variance) {
  if (!(variance > 0.0)) throw DegenerateSeriesError("minimize_q: sample variance must be positive");
  const Theta box = epps_theta(mean, variance);

  auto objective = [&](double nu, double rho) {
    const double nu_c = std::clamp(nu, box.mu_lo, box.mu_hi);
    const double rho_c = std::clamp(rho, box.rho_lo, box.rho_hi);
    const double violation = std::fabs(nu - nu_c) + std::fabs(rho - rho_c);
    return q_form(g_hat, gaussian_cf_vector(nu_c, rho_c, lam), g_plus) + kPenalty * violation;
  };

  const NelderMeadResult r =
      nelder_mead_2d(objective, {mean, variance}, {0.1 * std::sqrt(variance), 0.1 * variance});
  return {r.x[0], r.x[1], r.fx};
}

QMinimum minimize_q(const Series& y, const Lambda& lam) {
  const Matrix g_plus = pseudo_inverse(2.0 * std::numbers::pi * spectral_density_at_zero(y, lam));
  return minimize_q(empirical_cf_vector(y, lam), g_plus, lam, y.mean(), y.variance());
}

EppsResult epps_test_with_lambda(const Series& y, const Lambda& lam) {
  require_testable(y, "epps_test");
  if (lam.size() < 2) throw DomainError("epps_test: need at least two frequencies");
  const QMinimum m = minimize_q(y, lam);
  EppsResult r;
  r.statistic = static_cast<double>(y.size()) * m.q_min;
  r.df = static_cast<unsigned>(2 * lam.size() - 2);
  r.p_value = chi_square_sf(r.statistic, r.df);
  r.mu_n = m.mu_n;
  r.gamma_n = m.gamma_n;
  r.lambda = lam;
  return r;
}

EppsResult epps_test(const Series& y, LambdaMode mode, RngStream& rng) {
  require_testable(y, "epps_test");
  return epps_test_with_lambda(y, draw_lambda(y.variance(), mode, rng));
}

}  // namespace rpgauss

#include "rpgauss/lobato_velasco.hpp"

#include <algorithm>
#include <cmath>

#include "rpgauss/errors.hpp"
#include "rpgauss/special.hpp"

namespace rpgauss {

namespace {

double f_from_autocov(const std::vector<double>& gamma, int k, std::size_t tau) {
  double acc = 0.0;
  for (std::size_t t = 1; t <= tau; ++t)
    acc += gamma[t] * std::pow(gamma[t] + gamma[tau + 1 - t], k - 1);
  return 2.0 * acc + std::pow(gamma[0], k);
}

struct Denominators {
  double f3;
  double f4;
  std::size_t tau;
};

Denominators denominators(const Series& y, const LvConfig& cfg) {
  const std::size_t tau = cfg.variant == LvVariant::Modified ? lv_tau(y.size(), cfg) : y.size() - 1;
  const std::vector<double> gamma = y.autocovariances(tau);
  return {f_from_autocov(gamma, 3, tau), f_from_autocov(gamma, 4, tau), tau};
}

double statistic_from(const Series& y, const LvConfig& cfg, const Denominators& d) {
  double f3 = d.f3;
  double f4 = d.f4;
  if (cfg.variant == LvVariant::Modified) {
    f3 = std::fabs(f3);
    f4 = std::fabs(f4);
  }
  if (f3 == 0.0 || f4 == 0.0) throw DegenerateSeriesError("lv_statistic: vanishing F3 or F4");
  const double n = static_cast<double>(y.size());
  const double m2 = y.centered_moment(2);
  const double m3 = y.centered_moment(3);
  const double m4 = y.centered_moment(4);
  const double excess = m4 - 3.0 * m2 * m2;
  return n * m3 * m3 / (6.0 * f3) + n * excess * excess / (24.0 * f4);
}

}  // namespace

std::string_view lv_variant_name(LvVariant v) {
  return v == LvVariant::Modified ? "modified" : "original";
}

std::size_t lv_tau(std::size_t n, const LvConfig& cfg) {
  if (!(cfg.c > 0.0)) throw DomainError("lv_tau: c must be positive");
  if (!(cfg.beta0 > 0.0 && cfg.beta0 <= 0.5)) throw DomainError("lv_tau: beta0 must lie in (0, 0.5]");
  if (n < 2) throw DomainError("lv_tau: need at least two observations");
  const double nd = static_cast<double>(n);
  const double root = cfg.beta0 == 0.5 ? std::sqrt(nd) : std::pow(nd, cfg.beta0);
  // Relative nudge so that exact products such as 1 * sqrt(100) floor to 10.
  const double raw = std::floor(cfg.c * root * (1.0 + 1e-12));
  const auto tau = static_cast<std::size_t>(std::max(1.0, raw));
  return std::min(tau, n - 1);
}

double f_hat_k(const Series& y, int k, std::size_t tau) {
  if (k != 3 && k != 4) throw DomainError("f_hat_k: k must be 3 or 4");
  if (tau < 1 || tau >= y.size()) throw DomainError("f_hat_k: tau must lie in [1, n - 1]");
  return f_from_autocov(y.autocovariances(tau), k, tau);
}

double lv_statistic(const Series& y, const LvConfig& cfg) {
  if (y.size() < 2) throw DegenerateSeriesError("lv_statistic: need at least two observations");
  return statistic_from(y, cfg, denominators(y, cfg));
}

LvResult lv_test(const Series& y, const LvConfig& cfg) {
  require_testable(y, "lv_test");
  const Denominators d = denominators(y, cfg);
  LvResult r;
  r.statistic = statistic_from(y, cfg, d);
  // The original variant can go negative; its tail probability is then 1.
  r.p_value = chi_square_sf(std::max(0.0, r.statistic), 2);
  r.f3_hat = d.f3;
  r.f4_hat = d.f4;
  r.tau_used = d.tau;
  return r;
}

}  // namespace rpgauss

#pragma once

#include <cstddef>
#include <string_view>

#include "rpgauss/series.hpp"

namespace rpgauss {

// Modified: lag window tau_n and absolute values in the denominators.
// Original: sums run to n - 1, no absolute values.
enum class LvVariant { Modified, Original };

std::string_view lv_variant_name(LvVariant v);

struct LvConfig {
  double c = 1.0;
  double beta0 = 0.5;
  LvVariant variant = LvVariant::Modified;
};

struct LvResult {
  double statistic = 0.0;
  double p_value = 1.0;
  double f3_hat = 0.0;
  double f4_hat = 0.0;
  std::size_t tau_used = 0;
};

// max(1, floor(c n^beta0)), capped at n - 1.
std::size_t lv_tau(std::size_t n, const LvConfig& cfg);

// 2 sum_{t=1}^{tau} gamma(t) (gamma(t) + gamma(tau + 1 - t))^{k-1} + gamma(0)^k.
// With tau = n - 1 this is the original estimator's sum. k in {3, 4}.
double f_hat_k(const Series& y, int k, std::size_t tau);

// n mu3^2 / (6 F3) + n (mu4 - 3 mu2^2)^2 / (24 F4), with |F_k| for the
// modified variant. Throws DegenerateSeriesError if F3 or F4 is zero.
double lv_statistic(const Series& y, const LvConfig& cfg);

// Statistic with chi-square(2) p-value. Requires n >= 8 and a non-constant
// series.
LvResult lv_test(const Series& y, const LvConfig& cfg = {});

}  // namespace rpgauss

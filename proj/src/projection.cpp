#include "rpgauss/projection.hpp"

#include <algorithm>
#include <cmath>

#include "rpgauss/distributions.hpp"
#include "rpgauss/errors.hpp"

namespace rpgauss {

double projection_weight(std::size_t i) {
  if (i == 0) return 1.0;
  const double d = static_cast<double>(i);
  return 1.0 / (d * d);
}

double ProjectionVector::weighted_norm_sq() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) acc += h[i] * h[i] * projection_weight(i);
  return acc;
}

std::vector<double> stick_breaking(const StickBreakingParams& params, RngStream& rng) {
  if (!(params.alpha1 > 0.0) || !(params.alpha2 > 0.0))
    throw DomainError("stick_breaking: beta parameters must be positive");
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw DomainError("stick_breaking: delta must lie in (0, 1)");
  if (params.n_cap == 0) throw DomainError("stick_breaking: n_cap must be positive");

  std::vector<double> sticks;
  // Remainder kept as a running product; 1 - sum(l) loses the digits that
  // matter near delta = 1e-15.
  double remaining = 1.0;
  while (sticks.size() < params.n_cap) {
    const double b = sample_beta(params.alpha1, params.alpha2, rng);
    sticks.push_back(b * remaining);
    remaining *= (1.0 - b);
    if (remaining <= params.delta) break;
  }
  return sticks;
}

ProjectionVector build_projection_vector(const std::vector<double>& sticks, std::size_t n_cap) {
  if (sticks.empty()) throw DomainError("build_projection_vector: need at least one stick");
  if (sticks.size() > n_cap) throw DomainError("build_projection_vector: more sticks than n_cap");
  double used = 0.0;
  for (double l : sticks) {
    if (!(l >= 0.0)) throw DomainError("build_projection_vector: sticks must be non-negative");
    used += l;
  }
  if (used > 1.0 + 1e-12) throw DomainError("build_projection_vector: sticks sum above 1");

  ProjectionVector pv;
  pv.sticks = sticks;
  pv.h.reserve(sticks.size() + 1);
  for (std::size_t i = 0; i < sticks.size(); ++i)
    pv.h.push_back(std::sqrt(sticks[i] / projection_weight(i)));
  const double rest = std::max(0.0, 1.0 - used);
  if (used < 1.0) {
    const std::size_t m = sticks.size();
    pv.h.push_back(std::sqrt(rest / projection_weight(m)));
  }
  return pv;
}

ProjectionVector draw_projection(const StickBreakingParams& params, RngStream& rng) {
  ProjectionVector pv = build_projection_vector(stick_breaking(params, rng), params.n_cap);
  pv.alpha1 = params.alpha1;
  pv.alpha2 = params.alpha2;
  return pv;
}

Series project_series(const Series& x, const ProjectionVector& h) {
  if (x.empty()) throw DomainError("project_series: empty series");
  const std::size_t n = x.size();
  std::vector<double> coef(h.h.size());
  for (std::size_t i = 0; i < coef.size(); ++i) coef[i] = h.h[i] * projection_weight(i);

  std::vector<double> y(n, 0.0);
  const auto xs = x.values();
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t top = std::min(h.m(), t);
    double acc = 0.0;
    for (std::size_t i = 0; i <= top; ++i) acc += coef[i] * xs[t - i];
    y[t] = acc;
  }
  return Series(std::move(y));
}

}  // namespace rpgauss

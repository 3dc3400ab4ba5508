#pragma once

#include <cstddef>
#include <vector>

#include "rpgauss/rng.hpp"
#include "rpgauss/series.hpp"

namespace rpgauss {

struct StickBreakingParams {
  double alpha1 = 100.0;
  double alpha2 = 1.0;
  // Truncate once the remaining stick length is at most delta.
  double delta = 1e-15;
  // Upper bound on the number of sticks; the observed sample length.
  std::size_t n_cap = 1;
};

// Sequence-space weight a_0 = 1, a_i = i^-2.
double projection_weight(std::size_t i);

// A direction h = (h_0, ..., h_m) with sum h_i^2 a_i = 1 and h_i >= 0.
struct ProjectionVector {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::vector<double> h;
  std::vector<double> sticks;

  std::size_t m() const { return h.empty() ? 0 : h.size() - 1; }
  // sum h_i^2 a_i
  double weighted_norm_sq() const;
};

// Stick lengths l_0, ..., l_{m-1}: l_k = B_k (1 - sum_{i<k} l_i) with
// B_k ~ Beta(alpha1, alpha2). Stops at the first stick after which the
// remainder is <= delta, or after n_cap sticks. Throws DomainError on
// invalid parameters.
std::vector<double> stick_breaking(const StickBreakingParams& params, RngStream& rng);

// h_i = sqrt(l_i / a_i) for the given sticks, plus a closing coordinate
// h_m = sqrt((1 - sum l_i) / a_m) carrying the remainder. When the sticks
// already sum to exactly 1 the closing coordinate is omitted.
ProjectionVector build_projection_vector(const std::vector<double>& sticks, std::size_t n_cap);

ProjectionVector draw_projection(const StickBreakingParams& params, RngStream& rng);

// Y_t = sum_{i=0}^{min(m,t)} h_i a_i X_{t-i}, t = 0, ..., n-1.
Series project_series(const Series& x, const ProjectionVector& h);

}  // namespace rpgauss

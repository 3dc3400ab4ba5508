#pragma once

#include <array>
#include <functional>

namespace rpgauss {

struct NelderMeadOptions {
  // Stop when 2|f_hi - f_lo| / (|f_hi| + |f_lo| + tiny) falls below this.
  double ftol = 1e-10;
  int max_iter = 500;
  // Number of fresh-simplex restarts from the best point.
  int restarts = 1;
};

struct NelderMeadResult {
  std::array<double, 2> x{};
  double fx = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

// Downhill simplex in two dimensions. The initial simplex is
// {start, start + step[0] e_0, start + step[1] e_1}; each restart rebuilds it
// around the best point with the same steps. Throws NumericalFailure if the
// objective returns a non-finite value.
NelderMeadResult nelder_mead_2d(const std::function<double(double, double)>& f,
                                std::array<double, 2> start, std::array<double, 2> step,
                                const NelderMeadOptions& options = {});

}  // namespace rpgauss

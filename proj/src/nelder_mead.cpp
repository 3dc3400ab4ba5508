#include "rpgauss/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

#include "rpgauss/errors.hpp"

namespace rpgauss {

namespace {

using Point = std::array<double, 2>;

struct Counter {
  const std::function<double(double, double)>& f;
  int evaluations = 0;

  double operator()(const Point& p) {
    ++evaluations;
    const double v = f(p[0], p[1]);
    if (!std::isfinite(v)) throw NumericalFailure("nelder_mead: objective is not finite");
    return v;
  }
};

Point lerp(const Point& from, const Point& to, double t) {
  return {from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
}

// One descent; returns the number of iterations used.
int descend(Counter& eval, std::array<Point, 3>& pts, std::array<double, 3>& fv,
            const NelderMeadOptions& opt) {
  constexpr double tiny = 1e-300;
  int iter = 0;
  for (; iter < opt.max_iter; ++iter) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const int lo = order[0], mid = order[1], hi = order[2];

    const double spread = 2.0 * std::fabs(fv[hi] - fv[lo]) / (std::fabs(fv[hi]) + std::fabs(fv[lo]) + tiny);
    if (spread < opt.ftol) break;

    const Point centroid{0.5 * (pts[lo][0] + pts[mid][0]), 0.5 * (pts[lo][1] + pts[mid][1])};
    const Point reflected = lerp(centroid, pts[hi], -1.0);
    const double fr = eval(reflected);

    if (fr < fv[lo]) {
      const Point expanded = lerp(centroid, pts[hi], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[hi] = expanded;
        fv[hi] = fe;
      } else {
        pts[hi] = reflected;
        fv[hi] = fr;
      }
    } else if (fr < fv[mid]) {
      pts[hi] = reflected;
      fv[hi] = fr;
    } else {
      // Outside contraction when the reflection beat the worst point.
      const bool outside = fr < fv[hi];
      const Point contracted = lerp(centroid, outside ? reflected : pts[hi], 0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, fv[hi])) {
        pts[hi] = contracted;
        fv[hi] = fc;
      } else {
        for (int j : {mid, hi}) {
          pts[j] = lerp(pts[lo], pts[j], 0.5);
          fv[j] = eval(pts[j]);
        }
      }
    }
  }
  return iter;
}

}  // namespace

NelderMeadResult nelder_mead_2d(const std::function<double(double, double)>& f, Point start,
                                Point step, const NelderMeadOptions& options) {
  Counter eval{f};
  NelderMeadResult result;
  Point best = start;
  double fbest = eval(start);

  for (int round = 0; round <= options.restarts; ++round) {
    std::array<Point, 3> pts{best, Point{best[0] + step[0], best[1]}, Point{best[0], best[1] + step[1]}};
    std::array<double, 3> fv{fbest, eval(pts[1]), eval(pts[2])};
    result.iterations += descend(eval, pts, fv, options);
    for (int j = 0; j < 3; ++j) {
      if (fv[j] < fbest) {
        fbest = fv[j];
        best = pts[j];
      }
    }
  }
  result.x = best;
  result.fx = fbest;
  result.evaluations = eval.evaluations;
  return result;
}

}  // namespace rpgauss

#include "rpgauss/fdr.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rpgauss/errors.hpp"

namespace rpgauss {

namespace {

std::vector<double> sorted_checked(std::span<const double> ps) {
  if (ps.empty()) throw DomainError("fdr: need at least one p-value");
  for (double p : ps)
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("fdr: p-values must lie in [0, 1]");
  std::vector<double> sorted(ps.begin(), ps.end());
  std::stable_sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

double harmonic_number(std::size_t k) {
  double h = 0.0;
  for (std::size_t j = 1; j <= k; ++j) h += 1.0 / static_cast<double>(j);
  return h;
}

ByDecision by_reject(std::span<const double> ps, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("by_reject: alpha must lie in (0, 1)");
  const std::vector<double> sorted = sorted_checked(ps);
  const double k = static_cast<double>(sorted.size());
  const double denom = k * harmonic_number(sorted.size());
  ByDecision out;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    // p_(i) * k H_k <= i alpha, written multiplicatively so that it agrees
    // exactly with combined_p's comparison.
    if (sorted[i - 1] / static_cast<double>(i) * denom <= alpha) {
      out.reject = true;
      out.witness = i;
    }
  }
  return out;
}

double combined_p(std::span<const double> ps) {
  const std::vector<double> sorted = sorted_checked(ps);
  double best = sorted[0];
  for (std::size_t i = 2; i <= sorted.size(); ++i)
    best = std::min(best, sorted[i - 1] / static_cast<double>(i));
  const double k = static_cast<double>(sorted.size());
  return std::min(1.0, best * (k * harmonic_number(sorted.size())));
}

}  // namespace rpgauss

#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace rpgauss {

// Benjamini-Yekutieli combination of k p-values for the same null.
//
// by_reject: rejects iff some ordered p_(i) <= i alpha / (k H_k), where
// H_k = sum_{j<=k} 1/j. The witness is the largest such i (1-based).
// combined_p: min(1, k H_k min_i p_(i) / i), the smallest alpha at which
// by_reject rejects.

struct ByDecision {
  bool reject = false;
  std::optional<std::size_t> witness;
};

double harmonic_number(std::size_t k);

// Throws DomainError for an empty set, p outside [0,1] or alpha outside (0,1).
ByDecision by_reject(std::span<const double> ps, double alpha);
double combined_p(std::span<const double> ps);

}  // namespace rpgauss

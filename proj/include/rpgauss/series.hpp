#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rpgauss {

// Minimum path length accepted by the test entry points.
inline constexpr std::size_t kMinTestLength = 8;

// An observed path X_0, ..., X_{n-1}. Immutable; the mean and the centered
// moments of order 2..4 are computed once at construction. All estimators
// use divisor n.
class Series {
 public:
  Series() = default;
  // Throws DomainError if any value is not finite.
  explicit Series(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  double mean() const;
  // n^-1 sum (X_i - mean)^k, k >= 2.
  double centered_moment(int k) const;
  // n^-1 sum_{i < n-|t|} (X_i - mean)(X_{i+|t|} - mean).
  double autocovariance(long t) const;
  double variance() const { return centered_moment(2); }
  // gamma(0), ..., gamma(max_lag) in one pass over the centered values.
  std::vector<double> autocovariances(std::size_t max_lag) const;

 private:
  std::vector<double> values_;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

double sample_mean(const Series& s);
double centered_moment(const Series& s, int k);
double autocovariance(const Series& s, long t);

// Throws DegenerateSeriesError when s is shorter than kMinTestLength or has
// zero sample variance.
void require_testable(const Series& s, const char* who);

}  // namespace rpgauss

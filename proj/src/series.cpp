#include "rpgauss/series.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "rpgauss/errors.hpp"

namespace rpgauss {

Series::Series(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_)
    if (!std::isfinite(v)) throw DomainError("Series: values must be finite");
  if (values_.empty()) return;

  const double n = static_cast<double>(values_.size());
  double sum = 0.0;
  for (double v : values_) sum += v;
  mean_ = sum / n;
  // Constant paths get an exact mean so every centered quantity is exactly 0.
  bool constant = true;
  for (double v : values_) constant = constant && (v == values_.front());
  if (constant) mean_ = values_.front();
  for (double v : values_) {
    const double d = v - mean_;
    const double d2 = d * d;
    m2_ += d2;
    m3_ += d2 * d;
    m4_ += d2 * d2;
  }
  m2_ /= n;
  m3_ /= n;
  m4_ /= n;
}

double Series::mean() const {
  if (values_.empty()) throw DomainError("sample_mean: empty series");
  return mean_;
}

double Series::centered_moment(int k) const {
  if (k < 2) throw DomainError("centered_moment: order must be at least 2");
  if (values_.size() < 2) throw DomainError("centered_moment: need at least two values");
  switch (k) {
    case 2: return m2_;
    case 3: return m3_;
    case 4: return m4_;
    default: break;
  }
  double acc = 0.0;
  for (double v : values_) acc += std::pow(v - mean_, k);
  return acc / static_cast<double>(values_.size());
}

double Series::autocovariance(long t) const {
  const std::size_t lag = static_cast<std::size_t>(std::labs(t));
  if (values_.empty() || lag >= values_.size())
    throw DomainError("autocovariance: |t| must be below the series length");
  if (lag == 0) return m2_;
  double acc = 0.0;
  for (std::size_t i = 0; i + lag < values_.size(); ++i)
    acc += (values_[i] - mean_) * (values_[i + lag] - mean_);
  return acc / static_cast<double>(values_.size());
}

std::vector<double> Series::autocovariances(std::size_t max_lag) const {
  if (values_.empty() || max_lag >= values_.size())
    throw DomainError("autocovariances: max_lag must be below the series length");
  const std::size_t n = values_.size();
  std::vector<double> centered(n);
  for (std::size_t i = 0; i < n; ++i) centered[i] = values_[i] - mean_;
  std::vector<double> out(max_lag + 1);
  out[0] = m2_;
  for (std::size_t lag = 1; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) acc += centered[i] * centered[i + lag];
    out[lag] = acc / static_cast<double>(n);
  }
  return out;
}

double sample_mean(const Series& s) { return s.mean(); }
double centered_moment(const Series& s, int k) { return s.centered_moment(k); }
double autocovariance(const Series& s, long t) { return s.autocovariance(t); }

void require_testable(const Series& s, const char* who) {
  if (s.size() < kMinTestLength)
    throw DegenerateSeriesError(std::string(who) + ": series needs at least " +
                                std::to_string(kMinTestLength) + " values, got " +
                                std::to_string(s.size()));
  if (!(s.variance() > 0.0))
    throw DegenerateSeriesError(std::string(who) + ": series has zero sample variance");
}

}  // namespace rpgauss

#include "rpgauss/distributions.hpp"

#include <cmath>
#include <numbers>

#include "rpgauss/errors.hpp"

namespace rpgauss {

std::string_view family_name(InnovationFamily family) {
  switch (family) {
    case InnovationFamily::StdNormal: return "normal";
    case InnovationFamily::StdLogNormal: return "lognormal";
    case InnovationFamily::StudentT10: return "t10";
    case InnovationFamily::ChiSq1: return "chisq1";
    case InnovationFamily::ChiSq10: return "chisq10";
    case InnovationFamily::Uniform01: return "uniform";
    case InnovationFamily::Beta2_1: return "beta21";
  }
  return "unknown";
}

std::optional<InnovationFamily> parse_family(std::string_view name) {
  for (auto f : kAllInnovationFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

double sample_normal(RngStream& rng) {
  // Box-Muller, cosine branch only so that each draw consumes exactly two words.
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_gamma(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw DomainError("sample_gamma: shape must be positive");
  if (shape < 1.0) {
    const double g = sample_gamma(shape + 1.0, rng);
    return g * std::pow(rng.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(double a1, double a2, RngStream& rng) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw DomainError("sample_beta: parameters must be positive");
  if (a2 == 1.0) return std::pow(rng.uniform(), 1.0 / a1);
  const double x = sample_gamma(a1, rng);
  const double y = sample_gamma(a2, rng);
  return x / (x + y);
}

double sample_innovation(InnovationFamily family, RngStream& rng) {
  switch (family) {
    case InnovationFamily::StdNormal: return sample_normal(rng);
    case InnovationFamily::StdLogNormal: return std::exp(sample_normal(rng));
    case InnovationFamily::StudentT10: {
      const double z = sample_normal(rng);
      const double chi2 = 2.0 * sample_gamma(5.0, rng);
      return z / std::sqrt(chi2 / 10.0);
    }
    case InnovationFamily::ChiSq1: {
      const double z = sample_normal(rng);
      return z * z;
    }
    case InnovationFamily::ChiSq10: return 2.0 * sample_gamma(5.0, rng);
    case InnovationFamily::Uniform01: return rng.uniform();
    case InnovationFamily::Beta2_1: return sample_beta(2.0, 1.0, rng);
  }
  return 0.0;
}

double sample_abs_normal(double sd, RngStream& rng) {
  if (!(sd > 0.0)) throw DomainError("sample_abs_normal: sd must be positive");
  return std::fabs(sd * sample_normal(rng));
}

}  // namespace rpgauss

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rpgauss/rng.hpp"

namespace rpgauss {

// Innovation laws used by the AR(1) experiments.
enum class InnovationFamily {
  StdNormal,
  StdLogNormal,
  StudentT10,
  ChiSq1,
  ChiSq10,
  Uniform01,
  Beta2_1,
};

inline constexpr InnovationFamily kAllInnovationFamilies[] = {
    InnovationFamily::StdNormal, InnovationFamily::StdLogNormal, InnovationFamily::StudentT10,
    InnovationFamily::ChiSq1,    InnovationFamily::ChiSq10,      InnovationFamily::Uniform01,
    InnovationFamily::Beta2_1,
};

// Short machine name ("normal", "lognormal", "t10", "chisq1", "chisq10",
// "uniform", "beta21").
std::string_view family_name(InnovationFamily family);
std::optional<InnovationFamily> parse_family(std::string_view name);

double sample_normal(RngStream& rng);
// Marsaglia-Tsang; shape < 1 handled by the U^(1/shape) boost. Unit scale.
double sample_gamma(double shape, RngStream& rng);
// Gamma ratio X / (X + Y); Beta(a1, 1) uses the inverse CDF u^(1/a1).
double sample_beta(double a1, double a2, RngStream& rng);
double sample_innovation(InnovationFamily family, RngStream& rng);
// |Z| with Z ~ N(0, sd^2).
double sample_abs_normal(double sd, RngStream& rng);

}  // namespace rpgauss

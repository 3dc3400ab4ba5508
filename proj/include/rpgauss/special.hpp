#pragma once

namespace rpgauss {

// Standard normal CDF via erfc (accurate in both tails).
double normal_cdf(double x);

// Inverse of normal_cdf on (0, 1). Rational approximation followed by one
// Halley refinement against normal_cdf; absolute error well below 1e-9.
// Throws DomainError outside (0, 1).
double normal_quantile(double u);

// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0.
double gamma_q(double a, double x);

// Upper tail P(chi2_df > x). Throws DomainError for x < 0 or df == 0.
double chi_square_sf(double x, unsigned df);

}  // namespace rpgauss

#pragma once

#include <cstddef>

namespace ctbnc {

double log_gamma(double x);

// Regularized incomplete beta function I_x(a, b) for a,b > 0, x in [0,1].
double regularized_incomplete_beta(double a, double b, double x);

// CDF of Student's t distribution with dof degrees of freedom.
double student_t_cdf(double t, double dof);

// Two-tailed critical value: smallest t >= 0 with P(|T| <= t) >= confidence.
// confidence is a fraction in (0, 1), e.g. 0.95.
double student_t_two_tailed_critical(double confidence, double dof);

// z value for the two-tailed confidence levels accepted by --confidence.
// Allowed levels: 99.9, 99.8, 99, 98, 95, 90, 80. Throws ArgumentError
// for anything else.
double wilson_z_for_confidence(double confidence_percent);

} // namespace ctbnc

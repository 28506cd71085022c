// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_SPECFUN_HPP
#define REDIT_SPECFUN_HPP

#include <vector>

namespace redit {

double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation (modified Lentz), accurate to ~1e-14 on [0, 1].
double regularized_incomplete_beta(double x, double a, double b);

/// Regularized lower incomplete gamma P(a, x).
double regularized_lower_gamma(double a, double x);

/// Chi-square distribution with k degrees of freedom.
double chi_square_cdf(double x, double k);

/// Inverse CDF by bracketing bisection; q in (0, 1).
double chi_square_quantile(double q, double k);

/// Asymptotic one-sample Kolmogorov-Smirnov critical value at significance
/// alpha: reject when D_n > ks_critical(alpha) / sqrt(n).
double ks_critical(double alpha);

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Composite Gauss-Legendre rule over [a, b] with `panels` equal panels of
/// `points` nodes each; nodes and weights mapped to the target interval.
GaussLegendreRule composite_gauss_legendre(double a, double b, int panels, int points);

}  // namespace redit

#endif  // REDIT_SPECFUN_HPP

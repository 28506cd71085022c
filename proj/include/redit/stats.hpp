// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_STATS_HPP
#define REDIT_STATS_HPP

#include <cstdint>
#include <vector>

namespace redit {

/// Pearson chi-square test of equiprobable cells.
struct ChiSquareResult {
    double statistic = 0.0;
    double dof = 0.0;
    double p_value = 0.0;       // upper tail
    double critical_99 = 0.0;   // 99% quantile of the null distribution
    bool pass_at_1pct = false;  // statistic below the 99% critical value
};

ChiSquareResult chi_square_uniform(const std::vector<std::int64_t>& counts);

/// One-sample KS statistic against the uniform CDF on [0, 1].
double ks_statistic_uniform(std::vector<double> samples);

/// Two-sample KS statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Grouped (delete-one-block) jackknife standard error of the sample mean.
/// For a plain mean this reduces to the usual s / sqrt(n) as the number of
/// groups approaches the number of samples.
double jackknife_stderr(const std::vector<double>& values, int groups = 100);

double mean_of(const std::vector<double>& values);

}  // namespace redit

#endif  // REDIT_STATS_HPP

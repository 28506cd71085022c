// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "redit/specfun.hpp"

namespace redit {

ChiSquareResult chi_square_uniform(const std::vector<std::int64_t>& counts) {
    if (counts.size() < 2) throw std::invalid_argument("chi_square_uniform: need at least 2 cells");
    const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
    if (total <= 0.0) throw std::invalid_argument("chi_square_uniform: empty sample");
    const double expected = total / static_cast<double>(counts.size());
    ChiSquareResult r;
    for (const std::int64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        r.statistic += d * d / expected;
    }
    r.dof = static_cast<double>(counts.size()) - 1.0;
    r.p_value = 1.0 - chi_square_cdf(r.statistic, r.dof);
    r.critical_99 = chi_square_quantile(0.99, r.dof);
    r.pass_at_1pct = r.statistic <= r.critical_99;
    return r;
}

double ks_statistic_uniform(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic_uniform: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double lo = samples[i] - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - samples[i];
        d = std::max(d, std::max(lo, hi));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double va = a[i], vb = b[j];
        if (va <= vb) ++i;
        if (vb <= va) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double mean_of(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mean_of: empty sample");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double jackknife_stderr(const std::vector<double>& values, int groups) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const int g = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(groups), n));
    // Group sums in contiguous blocks; the deterministic layout keeps the
    // estimate reproducible for a fixed sample order.
    std::vector<double> group_sum(g, 0.0);
    std::vector<double> group_count(g, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = static_cast<int>(i * static_cast<std::size_t>(g) / n);
        group_sum[k] += values[i];
        group_count[k] += 1.0;
    }
    const double total = std::accumulate(group_sum.begin(), group_sum.end(), 0.0);
    std::vector<double> leave_out(g);
    for (int k = 0; k < g; ++k) {
        leave_out[k] = (total - group_sum[k]) / (static_cast<double>(n) - group_count[k]);
    }
    const double mean = std::accumulate(leave_out.begin(), leave_out.end(), 0.0) / g;
    double ss = 0.0;
    for (int k = 0; k < g; ++k) {
        const double d = leave_out[k] - mean;
        ss += d * d;
    }
    return std::sqrt(ss * (g - 1.0) / g);
}

}  // namespace redit

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "redit/rng.hpp"
#include "redit/specfun.hpp"
#include "redit/stats.hpp"

using namespace redit;

TEST_CASE("same (seed, stream) reproduces the same sequence") {
    Philox a(1234, 7);
    Philox b(RngSeed{1234, 7});
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different streams and seeds decorrelate") {
    Philox a(1234, 7);
    Philox b(1234, 8);
    Philox c(1235, 7);
    int equal_ab = 0, equal_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t x = a.next_u64();
        equal_ab += x == b.next_u64();
        equal_ac += x == c.next_u64();
    }
    CHECK(equal_ab == 0);
    CHECK(equal_ac == 0);
}

TEST_CASE("uniform draws pass a chi-square uniformity test") {
    Philox rng(2024, 0);
    std::vector<std::int64_t> counts(16, 0);
    for (int i = 0; i < 100000; ++i) ++counts[static_cast<int>(rng.uniform() * 16.0)];
    const ChiSquareResult r = chi_square_uniform(counts);
    CHECK(r.pass_at_1pct);
}

TEST_CASE("normal draws have the right moments") {
    Philox rng(99, 1);
    const int n = 200000;
    double sum = 0.0, sum_sq = 0.0;
    int within = 0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sum_sq += z * z;
        within += std::fabs(z) < 1.959964;
    }
    CHECK(std::fabs(sum / n) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(sum_sq / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(static_cast<double>(within) / n == doctest::Approx(0.95).epsilon(0.005));
}

TEST_CASE("index is in range and roughly uniform") {
    Philox rng(5, 5);
    std::vector<std::int64_t> counts(7, 0);
    for (int i = 0; i < 70000; ++i) {
        const std::uint64_t k = rng.index(7);
        REQUIRE(k < 7);
        ++counts[k];
    }
    CHECK(chi_square_uniform(counts).pass_at_1pct);
}

TEST_CASE("substream derivation changes the stream, not the seed") {
    const RngSeed base{42, 3};
    const RngSeed s0 = substream(base, 0);
    const RngSeed s1 = substream(base, 1);
    CHECK(s0.seed == base.seed);
    CHECK(s0.stream != s1.stream);
    CHECK(s0.stream != base.stream);
}

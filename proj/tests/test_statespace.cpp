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

#include "oracles.hpp"
#include "redit/specfun.hpp"
#include "redit/statespace.hpp"
#include "redit/stats.hpp"

using namespace redit;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (const double x : v) out[i++] = x;
    return out;
}

}  // namespace

TEST_CASE("state vector invariants are enforced") {
    Philox rng(30, 0);
    CHECK_THROWS_AS(RealStateVector(vec({0.5, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS(sample_real_sphere(0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_haar_state(0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_su(1, rng), std::invalid_argument);
    CHECK_NOTHROW(RealStateVector(vec({1.0, 0.0})));
    CHECK_THROWS_AS(ProbabilityVector(vec({0.5, 0.6})), std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityVector(vec({-0.1, 1.1})), std::invalid_argument);
    CHECK_THROWS_AS(GammaVector(vec({0.9, 0.9})), std::invalid_argument);
    // Tiny negative drift is clamped, not rejected.
    const ProbabilityVector p(vec({1.0 + 1e-16, -1e-16}));
    CHECK(p[1] == 0.0);
}

TEST_CASE("sample_real_sphere d=1 gives symmetric signs") {
    Philox rng(31, 0);
    int plus = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const RealStateVector s = sample_real_sphere(1, rng);
        CHECK(std::fabs(std::fabs(s[0]) - 1.0) < 1e-12);
        plus += s[0] > 0.0;
    }
    // 3 sigma binomial window around n/2.
    CHECK(std::fabs(plus - n / 2.0) < 3.0 * std::sqrt(n * 0.25));
}

TEST_CASE("sample_real_sphere d=3 component symmetry") {
    Philox rng(32, 0);
    Eigen::Vector3d mean_sq = Eigen::Vector3d::Zero();
    const int n = 100000;
    for (int i = 0; i < n; ++i) mean_sq += sample_real_sphere(3, rng).components().cwiseAbs2();
    mean_sq /= n;
    for (int i = 0; i < 3; ++i) CHECK(mean_sq[i] == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("sample_real_sphere d=2 angle is uniform") {
    Philox rng(33, 0);
    std::vector<std::int64_t> counts(16, 0);
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const RealStateVector s = sample_real_sphere(2, rng);
        double theta = std::atan2(s[1], s[0]);
        if (theta < 0.0) theta += 2.0 * M_PI;
        ++counts[std::min<int>(15, static_cast<int>(theta / (2.0 * M_PI) * 16.0))];
    }
    CHECK(chi_square_uniform(counts).pass_at_1pct);
}

TEST_CASE("sample_haar_state d=2 has uniform |s1|^2") {
    Philox rng(34, 0);
    std::vector<double> p1;
    const int n = 100000;
    p1.reserve(n);
    for (int i = 0; i < n; ++i) p1.push_back(std::norm(sample_haar_state(2, rng)[0]));
    CHECK(ks_statistic_uniform(p1) < ks_critical(0.01) / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sample_haar_state d=3 component symmetry, d=1 phase only") {
    Philox rng(35, 0);
    Eigen::Vector3d mean_sq = Eigen::Vector3d::Zero();
    const int n = 100000;
    for (int i = 0; i < n; ++i) mean_sq += sample_haar_state(3, rng).components().cwiseAbs2();
    mean_sq /= n;
    for (int i = 0; i < 3; ++i) CHECK(mean_sq[i] == doctest::Approx(1.0 / 3.0).epsilon(0.03));
    const ComplexStateVector s = sample_haar_state(1, rng);
    CHECK(std::abs(s[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample_su determinant and Haar moments") {
    Philox rng(36, 0);
    const int n = 100000;
    Eigen::Vector4d mean_sq = Eigen::Vector4d::Zero();
    double mean_tr2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const SpecialUnitary u = sample_su(2, rng);
        // The constructor enforced unitarity and det = 1 within 1e-10.
        const Eigen::MatrixXcd& m = u.matrix();
        const Complex tr = m(0, 0) + m(1, 1);
        mean_tr2 += std::norm(tr);
        Eigen::Vector4d v(0.5 * (m(0, 0) + m(1, 1)).real(), 0.5 * (m(0, 1) + m(1, 0)).imag(),
                          0.5 * (m(0, 1) - m(1, 0)).real(), 0.5 * (m(0, 0) - m(1, 1)).imag());
        mean_sq += v.cwiseAbs2();
        if (i == 0) CHECK(std::abs(m.determinant() - Complex(1.0, 0.0)) < 1e-10);
    }
    mean_sq /= n;
    mean_tr2 /= n;
    for (int i = 0; i < 4; ++i) CHECK(mean_sq[i] == doctest::Approx(0.25).epsilon(0.04));

    // Haar moment oracle by independent quadrature: E|Tr U|^2 =
    // (2/pi) * int_0^pi (2 cos psi)^2 sin^2 psi dpsi = 1.
    const double moment = 2.0 / M_PI *
                          oracles::integrate(
                              [](double psi) {
                                  const double c = std::cos(psi), s = std::sin(psi);
                                  return 4.0 * c * c * s * s;
                              },
                              0.0, M_PI, 1e-12);
    CHECK(moment == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(mean_tr2 == doctest::Approx(moment).epsilon(0.02));
}

TEST_CASE("born rule on real and complex states") {
    CHECK(born(RealStateVector(vec({1.0, 0.0, 0.0}))).entries().isApprox(vec({1.0, 0.0, 0.0})));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(born(RealStateVector(vec({r, -r})))[0] == doctest::Approx(0.5).epsilon(1e-14));
    const ProbabilityVector p = born(RealStateVector(vec({0.6, 0.8})));
    CHECK(p[0] == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.64).epsilon(1e-14));

    Eigen::VectorXcd c1(2);
    c1 << Complex(0.0, 1.0), Complex(0.0, 0.0);
    CHECK(born(ComplexStateVector(c1))[0] == doctest::Approx(1.0));
    Eigen::VectorXcd c2(2);
    c2 << Complex(0.5, 0.5), Complex(0.5, -0.5);
    CHECK(born(ComplexStateVector(c2))[0] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("born on a Haar sample equals componentwise modulus squared") {
    Philox rng(37, 0);
    const ComplexStateVector s = sample_haar_state(4, rng);
    const ProbabilityVector p = born(s);
    for (int i = 0; i < 4; ++i) {
        const Complex z = s[i];
        CHECK(p[i] == z.real() * z.real() + z.imag() * z.imag());
    }
}

TEST_CASE("born is invariant under componentwise phases") {
    Philox rng(38, 0);
    const ComplexStateVector s = sample_haar_state(3, rng);
    const ProbabilityVector p = born(s);
    // Quarter-turn phases commute with |.|^2 exactly in floating point.
    Eigen::VectorXcd rotated = s.components();
    rotated[0] *= Complex(0.0, 1.0);
    rotated[1] *= Complex(-1.0, 0.0);
    rotated[2] *= Complex(0.0, -1.0);
    const ProbabilityVector pr = born(ComplexStateVector(rotated));
    for (int i = 0; i < 3; ++i) CHECK(p[i] == pr[i]);
    // Generic phases match to rounding error.
    Eigen::VectorXcd generic = s.components();
    for (int i = 0; i < 3; ++i) generic[i] *= std::polar(1.0, 0.3 + 1.1 * i);
    const ProbabilityVector pg = born(ComplexStateVector::normalized(generic));
    for (int i = 0; i < 3; ++i) CHECK(pg[i] == doctest::Approx(p[i]).epsilon(1e-13));
}

TEST_CASE("gamma embedding round trip") {
    const GammaVector g = gamma_of(ProbabilityVector(vec({0.25, 0.75})));
    CHECK(g[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g[1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(gamma_of(ProbabilityVector(vec({1.0, 0.0})))[0] == 1.0);

    Philox rng(39, 0);
    double max_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        // Random simplex point from normalized exponentials.
        Eigen::VectorXd e(4);
        for (int k = 0; k < 4; ++k) e[k] = -std::log(1.0 - rng.uniform());
        e /= e.sum();
        const ProbabilityVector p(e);
        const ProbabilityVector back = probs_of(gamma_of(p));
        max_err = std::max(max_err, (back.entries() - p.entries()).cwiseAbs().maxCoeff());
    }
    CHECK(max_err < 1e-14);
}

TEST_CASE("polarization rule") {
    CHECK(polarization_rule(PreparationAngle(0.0, 2))[0] == doctest::Approx(1.0));
    CHECK(polarization_rule(PreparationAngle(M_PI / 4.0, 2))[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(polarization_rule(PreparationAngle(1.23, 0))[0] == doctest::Approx(1.0));
    // theta is reduced modulo 2 pi at construction.
    CHECK(PreparationAngle(2.0 * M_PI + 0.3, 2).theta == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(PreparationAngle(0.1, -1), std::invalid_argument);
}

TEST_CASE("bloch rule") {
    CHECK(bloch_rule(BlochPoint(0.0, 0.0))[0] == doctest::Approx(1.0));
    CHECK(bloch_rule(BlochPoint(M_PI / 2.0, 1.0))[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bloch_rule(BlochPoint(M_PI / 3.0, 2.0))[0] == doctest::Approx(0.75).epsilon(1e-14));
    // phi does not matter.
    CHECK(bloch_rule(BlochPoint(1.0, 0.5))[0] == bloch_rule(BlochPoint(1.0, 4.5))[0]);
    CHECK_THROWS_AS(BlochPoint(-0.1, 0.0), std::invalid_argument);
}

TEST_CASE("real-sphere Born pushforward matches the m=2 polarization rule") {
    // Two-sample Kolmogorov-Smirnov at the 1% level on the p1 samples.
    Philox rng(40, 0);
    const int n = 100000;
    std::vector<double> from_sphere, from_rule;
    from_sphere.reserve(n);
    from_rule.reserve(n);
    for (int i = 0; i < n; ++i) {
        from_sphere.push_back(born(sample_real_sphere(2, rng))[0]);
        from_rule.push_back(polarization_rule(PreparationAngle(rng.uniform(0.0, 2.0 * M_PI), 2))[0]);
    }
    const double critical = ks_critical(0.01) * std::sqrt(2.0 / static_cast<double>(n));
    CHECK(ks_statistic_two_sample(from_sphere, from_rule) < critical);
}

TEST_CASE("su(2) samples square to probability vectors") {
    Philox rng(41, 0);
    for (int i = 0; i < 1000; ++i) {
        const SpecialUnitary u = sample_su(2, rng);
        const Eigen::MatrixXcd& m = u.matrix();
        Eigen::VectorXd v(4);
        v << 0.5 * (m(0, 0) + m(1, 1)).real(), 0.5 * (m(0, 1) + m(1, 0)).imag(),
            0.5 * (m(0, 1) - m(1, 0)).real(), 0.5 * (m(0, 0) - m(1, 1)).imag();
        CHECK_NOTHROW(ProbabilityVector(Eigen::VectorXd(v.cwiseAbs2())));
    }
}

TEST_CASE("special unitary validation") {
    Eigen::MatrixXcd not_unitary = Eigen::MatrixXcd::Identity(2, 2) * 1.1;
    CHECK_THROWS_AS(SpecialUnitary{not_unitary}, std::invalid_argument);
    Eigen::MatrixXcd det_not_one = Eigen::MatrixXcd::Identity(2, 2);
    det_not_one(1, 1) = Complex(-1.0, 0.0);
    CHECK_THROWS_AS(SpecialUnitary{det_not_one}, std::invalid_argument);
}

TEST_CASE("samplers are deterministic per (seed, stream)") {
    Philox a(77, 2), b(77, 2);
    for (int i = 0; i < 10; ++i) {
        CHECK(sample_real_sphere(3, a).components() == sample_real_sphere(3, b).components());
        CHECK(sample_haar_state(2, a).components() == sample_haar_state(2, b).components());
        CHECK(sample_su(2, a).matrix() == sample_su(2, b).matrix());
    }
}

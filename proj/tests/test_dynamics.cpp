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

#include "redit/dynamics.hpp"
#include "redit/rng.hpp"

using namespace redit;

namespace {

AntisymmetricGenerator random_generator(int d, Philox& rng) {
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = rng.normal();
    return AntisymmetricGenerator(Eigen::MatrixXd(a - a.transpose()));
}

}  // namespace

TEST_CASE("evolve of the zero generator is the identity") {
    const AntisymmetricGenerator zero{Eigen::MatrixXd(Eigen::Matrix3d::Zero())};
    CHECK((evolve(zero, 2.7).matrix() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("evolve of J reproduces the closed-form rotation") {
    // e^{J t} = cos t I + sin t J.
    const AntisymmetricGenerator j{Eigen::MatrixXd(rotation_generator_2d())};
    const OrthogonalMatrix quarter = evolve(j, M_PI / 2.0);
    Eigen::Matrix2d expected;
    expected << 0.0, -1.0, 1.0, 0.0;
    CHECK((quarter.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
    for (const double t : {0.3, 1.7, -2.2}) {
        const Eigen::Matrix2d closed =
            std::cos(t) * Eigen::Matrix2d::Identity() + std::sin(t) * rotation_generator_2d();
        CHECK((evolve(j, t).matrix() - closed).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("evolve gives special orthogonal matrices in d = 6") {
    Philox rng(80, 0);
    const AntisymmetricGenerator s = random_generator(6, rng);
    const OrthogonalMatrix q = evolve(s, 1.0);
    CHECK((q.matrix().transpose() * q.matrix() - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(q.matrix().determinant() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.det_sign() == +1);
}

TEST_CASE("one-parameter group laws") {
    Philox rng(81, 0);
    const AntisymmetricGenerator s = random_generator(4, rng);
    const double t = 0.8, u = -0.5;
    CHECK((evolve(s, t).matrix() * evolve(s, u).matrix() - evolve(s, t + u).matrix()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((evolve(s, t).matrix().transpose() - evolve(s, -t).matrix()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("non-antisymmetric generators are rejected, not repaired") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
    CHECK_THROWS_AS(AntisymmetricGenerator{m}, std::invalid_argument);
}

TEST_CASE("reflection via ancilla") {
    const ReflectionConstruction rc = reflection_via_ancilla();

    // Control off: |e1> (x) |a> is fixed.
    Eigen::Vector4d product;
    product << 1.0, 0.0, 0.0, 0.0;  // (1,0) (x) (1,0)
    CHECK((rc.composite.matrix() * product - product).cwiseAbs().maxCoeff() < 1e-15);

    // Control on: (0,1) (x) (1,0) -> (0,-1) (x) (1,0).
    Eigen::Vector4d flipped;
    flipped << 0.0, 0.0, 1.0, 0.0;
    Eigen::Vector4d expected;
    expected << 0.0, 0.0, -1.0, 0.0;
    CHECK((rc.composite.matrix() * flipped - expected).cwiseAbs().maxCoeff() < 1e-15);

    // General product input (s1, s2) (x) a maps to (s1, -s2) (x) a.
    Philox rng(82, 0);
    for (int i = 0; i < 100; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const double psi = rng.uniform(0.0, 2.0 * M_PI);
        const Eigen::Vector2d s(std::cos(phi), std::sin(phi));
        const Eigen::Vector2d a(std::cos(psi), std::sin(psi));
        Eigen::Vector4d in, out;
        in << s[0] * a[0], s[0] * a[1], s[1] * a[0], s[1] * a[1];
        const Eigen::Vector2d rs = rc.reflection * s;
        out << rs[0] * a[0], rs[0] * a[1], rs[1] * a[0], rs[1] * a[1];
        CHECK((rc.composite.matrix() * in - out).cwiseAbs().maxCoeff() < 1e-12);
    }

    // The composite is generated continuously: evolve(S_c, pi) reproduces it.
    CHECK((evolve(rc.generator, M_PI).matrix() - rc.composite.matrix()).cwiseAbs().maxCoeff() < 1e-12);

    // Composite is a rotation even though the induced action reflects.
    CHECK(rc.composite.det_sign() == +1);
    CHECK(rc.reflection.determinant() == doctest::Approx(-1.0));
}

TEST_CASE("2x2 evolutions are rotations, never the reflection") {
    Philox rng(83, 0);
    const RotationOnlyReport report = rotation_only_check(1000, rng);
    CHECK(report.samples == 1000);
    CHECK(report.max_det_deviation < 1e-12);
    CHECK(report.min_distance_to_reflection >= std::sqrt(2.0));

    // Sweep S = cJ, c in [-10, 10]: determinants stay one and the operator
    // distance to R is constantly 2 (numeric minimization oracle).
    Eigen::Matrix2d reflection;
    reflection << 1.0, 0.0, 0.0, -1.0;
    double min_distance = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 2000; ++i) {
        const double c = -10.0 + 0.01 * i;
        const AntisymmetricGenerator s{Eigen::MatrixXd(c * rotation_generator_2d())};
        const OrthogonalMatrix q = evolve(s, 1.0);
        CHECK(std::fabs(q.matrix().determinant() - 1.0) < 1e-12);
        const Eigen::JacobiSVD<Eigen::Matrix2d> svd(reflection - q.matrix());
        min_distance = std::min(min_distance, svd.singularValues()[0]);
    }
    CHECK(min_distance >= std::sqrt(2.0));
    CHECK(min_distance == doctest::Approx(2.0).epsilon(1e-6));
}

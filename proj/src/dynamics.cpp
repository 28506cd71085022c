// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/dynamics.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace redit {

Eigen::Matrix2d rotation_generator_2d() {
    Eigen::Matrix2d j;
    j << 0.0, -1.0, 1.0, 0.0;
    return j;
}

OrthogonalMatrix evolve(const AntisymmetricGenerator& s, double t) {
    const Eigen::MatrixXd q = (s.matrix() * t).exp();
    return OrthogonalMatrix(q);
}

ReflectionConstruction reflection_via_ancilla() {
    // Ordering |s> (x) |a>, the original rebit first.
    Eigen::Matrix4d composite = Eigen::Matrix4d::Identity();
    composite(2, 2) = -1.0;  // Rot(pi) = -I on the ancilla, applied when the
    composite(3, 3) = -1.0;  // control is |e2>
    Eigen::Matrix4d generator = Eigen::Matrix4d::Zero();
    generator.block<2, 2>(2, 2) = rotation_generator_2d();
    Eigen::Matrix2d reflection;
    reflection << 1.0, 0.0, 0.0, -1.0;
    return ReflectionConstruction{OrthogonalMatrix(composite), AntisymmetricGenerator(generator), reflection};
}

RotationOnlyReport rotation_only_check(std::int64_t samples, Philox& rng) {
    if (samples < 100) throw std::invalid_argument("rotation_only_check: need at least 100 samples");
    Eigen::Matrix2d reflection;
    reflection << 1.0, 0.0, 0.0, -1.0;
    RotationOnlyReport report;
    report.samples = samples;
    report.min_distance_to_reflection = std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < samples; ++i) {
        // A 2x2 antisymmetric matrix is c J.
        const double c = 3.0 * rng.normal();
        const double t = rng.uniform(-5.0, 5.0);
        const AntisymmetricGenerator s(Eigen::MatrixXd(c * rotation_generator_2d()));
        const OrthogonalMatrix q = evolve(s, t);
        report.max_det_deviation = std::max(report.max_det_deviation, std::fabs(q.matrix().determinant() - 1.0));
        const Eigen::JacobiSVD<Eigen::Matrix2d> svd(reflection - q.matrix());
        report.min_distance_to_reflection =
            std::min(report.min_distance_to_reflection, svd.singularValues()[0]);
    }
    return report;
}

}  // namespace redit

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_DYNAMICS_HPP
#define REDIT_DYNAMICS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>

#include "redit/rng.hpp"

namespace redit {

/// Antisymmetric real generator of orthogonal time evolution, the
/// real-vector-space analogue of -iH.  Inputs are validated, not repaired.
class AntisymmetricGenerator {
  public:
    explicit AntisymmetricGenerator(Eigen::MatrixXd entries) : s_(std::move(entries)) {
        if (s_.rows() < 1 || s_.rows() != s_.cols())
            throw std::invalid_argument("AntisymmetricGenerator: need a square matrix");
        if ((s_ + s_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("AntisymmetricGenerator: matrix is not antisymmetric");
    }

    Eigen::Index dim() const { return s_.rows(); }
    const Eigen::MatrixXd& matrix() const { return s_; }

  private:
    Eigen::MatrixXd s_;
};

/// Real matrix with orthonormal columns; the determinant sign distinguishes
/// rotations from reflections.
class OrthogonalMatrix {
  public:
    explicit OrthogonalMatrix(Eigen::MatrixXd entries) : q_(std::move(entries)) {
        if (q_.rows() < 1 || q_.rows() != q_.cols())
            throw std::invalid_argument("OrthogonalMatrix: need a square matrix");
        const double defect =
            (q_.transpose() * q_ - Eigen::MatrixXd::Identity(q_.rows(), q_.cols())).cwiseAbs().maxCoeff();
        if (defect > 1e-10) throw std::invalid_argument("OrthogonalMatrix: matrix is not orthogonal");
        det_sign_ = q_.determinant() > 0.0 ? +1 : -1;
    }

    Eigen::Index dim() const { return q_.rows(); }
    const Eigen::MatrixXd& matrix() const { return q_; }
    int det_sign() const { return det_sign_; }

  private:
    Eigen::MatrixXd q_;
    int det_sign_ = +1;
};

/// The 2x2 generator of rotations, J = [[0,-1],[1,0]].
Eigen::Matrix2d rotation_generator_2d();

/// e^{S t} by scaling-and-squaring; orthogonal with determinant +1 for any
/// antisymmetric S.
OrthogonalMatrix evolve(const AntisymmetricGenerator& s, double t);

/// Continuous realization of the reflection (s1, s2) -> (s1, -s2) on a rebit
/// by a controlled half-cycle rotation of an ancillary rebit.  The composite
/// 4x4 operation is a rotation (determinant +1) generated by
/// S_c = |e2><e2| (x) J, while its induced action on the first factor is the
/// reflection R = diag(1, -1).
struct ReflectionConstruction {
    OrthogonalMatrix composite;   // |e1><e1| (x) I + |e2><e2| (x) Rot(pi)
    AntisymmetricGenerator generator;  // S_c; evolve(S_c, pi) equals the composite
    Eigen::Matrix2d reflection;   // R, the induced single-rebit action
};

ReflectionConstruction reflection_via_ancilla();

/// Constructive form of the obstruction: exponentials of 2x2 antisymmetric
/// generators are rotations, so they never reach the reflection R.
struct RotationOnlyReport {
    std::int64_t samples = 0;
    double max_det_deviation = 0.0;       // max |det e^{St} - 1|
    double min_distance_to_reflection = 0.0;  // min operator-norm distance to R
};

RotationOnlyReport rotation_only_check(std::int64_t samples, Philox& rng);

}  // namespace redit

#endif  // REDIT_DYNAMICS_HPP

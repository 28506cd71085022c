// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_STATESPACE_HPP
#define REDIT_STATESPACE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "redit/rng.hpp"

namespace redit {

using Complex = std::complex<double>;

/// Pure state of a d-dimensional system, unit vector over Scalar.
/// Construction validates the norm; use `StateVector::normalized` to build
/// one from raw components.
template <class Scalar>
class StateVector {
  public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    explicit StateVector(Vector components) : v_(std::move(components)) {
        if (v_.size() < 1) throw std::invalid_argument("StateVector: dimension must be >= 1");
        if (std::abs(v_.squaredNorm() - 1.0) > 1e-12)
            throw std::invalid_argument("StateVector: components must have unit norm");
    }

    static StateVector normalized(Vector raw) {
        const double n = raw.norm();
        if (!(n > 0.0)) throw std::invalid_argument("StateVector: cannot normalize the zero vector");
        return StateVector(Vector(raw / n));
    }

    Eigen::Index dim() const { return v_.size(); }
    const Vector& components() const { return v_; }
    Scalar operator[](Eigen::Index i) const { return v_[i]; }

  private:
    Vector v_;
};

using RealStateVector = StateVector<double>;
using ComplexStateVector = StateVector<Complex>;

/// Point of the outcome simplex: non-negative entries summing to one.
/// Entries in [-1e-15, 0) are clamped to zero to absorb upstream rounding.
class ProbabilityVector {
  public:
    explicit ProbabilityVector(Eigen::VectorXd entries) : p_(std::move(entries)) {
        if (p_.size() < 1) throw std::invalid_argument("ProbabilityVector: dimension must be >= 1");
        for (Eigen::Index i = 0; i < p_.size(); ++i) {
            if (p_[i] < 0.0) {
                if (p_[i] < -1e-15) throw std::invalid_argument("ProbabilityVector: negative entry");
                p_[i] = 0.0;
            }
        }
        if (std::abs(p_.sum() - 1.0) > 1e-12)
            throw std::invalid_argument("ProbabilityVector: entries must sum to 1");
    }

    Eigen::Index dim() const { return p_.size(); }
    const Eigen::VectorXd& entries() const { return p_; }
    double operator[](Eigen::Index i) const { return p_[i]; }

  private:
    Eigen::VectorXd p_;
};

/// Square-root embedding of a probability vector: a point on the positive
/// orthant of the unit sphere.
class GammaVector {
  public:
    explicit GammaVector(Eigen::VectorXd entries) : g_(std::move(entries)) {
        if (g_.size() < 1) throw std::invalid_argument("GammaVector: dimension must be >= 1");
        if ((g_.array() < 0.0).any()) throw std::invalid_argument("GammaVector: negative entry");
        if (std::abs(g_.squaredNorm() - 1.0) > 1e-12)
            throw std::invalid_argument("GammaVector: squared entries must sum to 1");
    }

    Eigen::Index dim() const { return g_.size(); }
    const Eigen::VectorXd& entries() const { return g_; }
    double operator[](Eigen::Index i) const { return g_[i]; }

  private:
    Eigen::VectorXd g_;
};

/// Point on the Bloch sphere in polar coordinates.
struct BlochPoint {
    double beta;  // polar angle in [0, pi]
    double phi;   // azimuthal angle in [0, 2*pi)

    BlochPoint(double beta_, double phi_) : beta(beta_), phi(phi_) {
        if (!(beta >= 0.0 && beta <= M_PI)) throw std::invalid_argument("BlochPoint: beta must be in [0, pi]");
        if (!(phi >= 0.0 && phi < 2.0 * M_PI)) throw std::invalid_argument("BlochPoint: phi must be in [0, 2*pi)");
    }
};

/// Linear polarization angle together with the rule-family multiplier m.
/// theta is reduced modulo 2*pi at construction.
struct PreparationAngle {
    double theta;
    int multiplier;

    explicit PreparationAngle(double theta_, int multiplier_ = 2) : multiplier(multiplier_) {
        if (multiplier < 0) throw std::invalid_argument("PreparationAngle: multiplier must be >= 0");
        theta = std::fmod(theta_, 2.0 * M_PI);
        if (theta < 0.0) theta += 2.0 * M_PI;
    }
};

/// Unit-determinant unitary matrix.
class SpecialUnitary {
  public:
    explicit SpecialUnitary(Eigen::MatrixXcd entries) : u_(std::move(entries)) {
        if (u_.rows() < 2 || u_.rows() != u_.cols())
            throw std::invalid_argument("SpecialUnitary: need a square matrix of dimension >= 2");
        const double unitary_defect =
            (u_.adjoint() * u_ - Eigen::MatrixXcd::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
        if (unitary_defect > 1e-10) throw std::invalid_argument("SpecialUnitary: matrix is not unitary");
        if (std::abs(u_.determinant() - Complex(1.0, 0.0)) > 1e-10)
            throw std::invalid_argument("SpecialUnitary: determinant is not 1");
    }

    Eigen::Index dim() const { return u_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return u_; }

  private:
    Eigen::MatrixXcd u_;
};

/// Uniform sample from the unit sphere in R^d (d independent standard
/// normals, normalized).  Rotation invariance follows from that of the
/// Gaussian.
RealStateVector sample_real_sphere(int d, Philox& rng);

/// Haar-uniform sample from the unit sphere in C^d.
ComplexStateVector sample_haar_state(int d, Philox& rng);

/// Haar-distributed element of SU(d): orthonormalize a complex Gaussian
/// matrix, fix the column phases by the sign of the R diagonal, then divide
/// by one fixed d-th root of the determinant.
SpecialUnitary sample_su(int d, Philox& rng);

/// Outcome probabilities of the fixed standard-basis measurement:
/// p_i = |s_i|^2.  Works for real and complex states alike.
template <class Scalar>
ProbabilityVector born(const StateVector<Scalar>& state) {
    return ProbabilityVector(state.components().cwiseAbs2());
}

inline ProbabilityVector born_real(const RealStateVector& s) { return born(s); }
inline ProbabilityVector born_complex(const ComplexStateVector& s) { return born(s); }

/// Componentwise square root; probabilities within -1e-15 of zero are
/// clamped before rooting.
GammaVector gamma_of(const ProbabilityVector& p);

/// Componentwise square, inverse of gamma_of.
ProbabilityVector probs_of(const GammaVector& g);

/// Two-outcome rule family p(theta) = cos^2(m*theta/2); m = 2 is the
/// physical cosine-squared law.
ProbabilityVector polarization_rule(const PreparationAngle& angle);

/// Probability of "horizontal" for a Bloch-sphere preparation:
/// ((1 + cos beta)/2, (1 - cos beta)/2), independent of phi.
ProbabilityVector bloch_rule(const BlochPoint& point);

}  // namespace redit

#endif  // REDIT_STATESPACE_HPP

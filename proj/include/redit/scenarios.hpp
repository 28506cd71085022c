// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_SCENARIOS_HPP
#define REDIT_SCENARIOS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "redit/rng.hpp"
#include "redit/statespace.hpp"
#include "redit/stats.hpp"

namespace redit {

/// Orthonormal two-qubit Bell basis, columns ordered Phi+, Phi-, Psi+, Psi-
/// in the product basis |00>, |01>, |10>, |11>.
class BellBasis2 {
  public:
    BellBasis2();
    const Eigen::MatrixXcd& states() const { return b_; }

  private:
    Eigen::MatrixXcd b_;
};

/// Orthonormal two-qutrit generalized Bell basis built from omega = e^{2 pi i/3},
/// column 3r + c holding (1/sqrt(3)) sum_k omega^{ck} |k, k+r mod 3>.
class GenBellBasis3 {
  public:
    GenBellBasis3();
    const Eigen::MatrixXcd& states() const { return b_; }

  private:
    Eigen::MatrixXcd b_;
};

/// Rotation of the Bloch sphere: unit axis and angle in [0, 2*pi].
/// (2*pi is admitted so the antipode -I has an exact representation.)
struct AxisAngle {
    Eigen::Vector3d axis;
    double angle;

    AxisAngle(Eigen::Vector3d axis_, double angle_) : axis(std::move(axis_)), angle(angle_) {
        if (std::abs(axis.norm() - 1.0) > 1e-12) throw std::invalid_argument("AxisAngle: axis must be unit length");
        if (!(angle >= 0.0 && angle <= 2.0 * M_PI + 1e-12))
            throw std::invalid_argument("AxisAngle: angle must be in [0, 2*pi]");
    }
};

/// U = exp[i (theta/2) n.sigma] = cos(theta/2) I + i sin(theta/2) n.sigma.
SpecialUnitary su2_from_axis_angle(const AxisAngle& a);

/// Point of the unit 3-sphere labelling the SU(2) element:
/// (cos(theta/2), n_x sin(theta/2), n_y sin(theta/2), n_z sin(theta/2)).
Eigen::Vector4d v_u(const AxisAngle& a);

/// Pauli decomposition U = v0 I + i (v1 sx + v2 sy + v3 sz); the same
/// 4-vector as v_u under the axis-angle correspondence.
Eigen::Vector4d v_of_su2(const SpecialUnitary& u);

/// Inverse of su2_from_axis_angle; theta = 2 atan2(|v_vec|, v0) and the axis
/// defaults to z when theta vanishes.
AxisAngle axis_angle_of(const SpecialUnitary& u);

/// Probabilities of the four Bell outcomes when Alice applies U to her half
/// of |Phi+> and Bob measures in the Bell basis, both as the direct
/// projection onto BellBasis2 and as the axis-angle closed form
/// (cos^2(theta/2), n_z^2 sin^2, n_x^2 sin^2, n_y^2 sin^2).
struct Su2BellProbs {
    ProbabilityVector direct;
    ProbabilityVector closed_form;
};
Su2BellProbs su2_bell_probs(const SpecialUnitary& u);

/// Haar SU(2) pushes v_U to the uniform measure on the 3-sphere, so the
/// induced measure on the 4-outcome probability space is the optimal
/// orthant-uniform one.
struct Su2OptimalityReport {
    std::int64_t samples = 0;
    int cells = 0;
    ChiSquareResult orthant_uniformity;
    Eigen::Vector4d mean_squared_components;
    double max_direct_closed_mismatch = 0.0;
    double max_vu_mismatch = 0.0;  // closed form vs squared v_U components
};
Su2OptimalityReport su2_optimality_check(std::int64_t samples, Philox& rng);

/// Nine outcome probabilities of the generalized Bell measurement on
/// (U (x) I)|Phi>, |Phi> = (|00> + |11> + |22>)/sqrt(3).
ProbabilityVector su3_bell_probs(const SpecialUnitary& u);

/// Closed forms of the second and third outcome probabilities:
/// p2 = |u00 + w^2 u11 + w u22|^2 / 9, p3 = |u00 + w u11 + w^2 u22|^2 / 9.
std::pair<double, double> su3_p2_p3(const SpecialUnitary& u);

/// Search for the largest p2 p3: Haar sampling plus random-restart hill
/// climbing in the Lie algebra from the extremal point diag(1, -1, -1).
struct Su3BoundReport {
    std::int64_t samples = 0;
    double bound = 0.0;           // 16/81
    double max_product_sampled = 0.0;
    double attained_by_search = 0.0;
    bool bound_ok = false;        // every evaluation stayed below bound + 1e-12
    bool attained_ok = false;     // search reached bound - 1e-6
};
Su3BoundReport su3_product_bound(std::int64_t samples, Philox& rng);

/// |1 + a + b + a^2 + b^2 - ab| <= 4 on the unit disks.
struct FootnoteResult {
    double lhs = 0.0;
    bool bound_ok = false;
};
FootnoteResult footnote_inequality(Complex a, Complex b);

/// Max of the footnote left-hand side over a polar grid of both disks
/// (angular_points angles per shell at each given radius).
double footnote_grid_max(int angular_points, const std::vector<double>& radii);

/// Symmetric informationally complete frame: d^2 unit vectors with pairwise
/// squared overlaps 1/(d+1), resolving the identity.  Shipped analytically
/// for d = 2 (tetrahedron) and d = 3 (Weyl-Heisenberg orbit of
/// (0, 1, -1)/sqrt(2)).
class SicFrame {
  public:
    explicit SicFrame(int d);
    int dim() const { return d_; }
    const Eigen::MatrixXcd& vectors() const { return m_; }  // d x d^2, columns |m_i>

  private:
    int d_;
    Eigen::MatrixXcd m_;
};

inline SicFrame sic_frame(int d) { return SicFrame(d); }

/// SIC outcome probabilities p_i = |<m_i|s>|^2 / d; never exceeds 1/d.
ProbabilityVector sic_probs(const ComplexStateVector& state, const SicFrame& frame);

/// Linear reconstruction rho = sum_i [(d+1) p_i - 1/d] |m_i><m_i|.  Returns
/// a Hermitian unit-trace matrix; positivity is the caller's concern.
Eigen::MatrixXcd sic_reconstruct(const ProbabilityVector& probs, const SicFrame& frame);

/// The SIC never reaches the part of probability space where some outcome
/// exceeds 1/d, yet the optimal orthant-uniform measure gives that region
/// positive mass.
struct SicInaccessibilityReport {
    int dim = 0;
    std::int64_t samples = 0;
    double threshold = 0.0;           // 1/d + 0.05
    double forbidden_mass = 0.0;      // orthant-uniform mass of {max p > threshold}
    double forbidden_mass_stderr = 0.0;
    std::int64_t sic_hits = 0;        // SIC outcomes in the forbidden cell
    double max_sic_prob = 0.0;
};
SicInaccessibilityReport sic_inaccessibility_report(int d, std::int64_t samples, Philox& rng);

}  // namespace redit

#endif  // REDIT_SCENARIOS_HPP

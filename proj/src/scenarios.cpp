// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/scenarios.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "redit/measures.hpp"

namespace redit {

namespace {

const Complex kI(0.0, 1.0);

Complex omega_pow(int k) { return std::polar(1.0, 2.0 * M_PI * (((k % 3) + 3) % 3) / 3.0); }

void check_orthonormal(const Eigen::MatrixXcd& b, double tolerance, const char* what) {
    const Eigen::MatrixXcd gram = b.adjoint() * b;
    const double defect = (gram - Eigen::MatrixXcd::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff();
    if (defect > tolerance) throw std::logic_error(std::string(what) + ": basis is not orthonormal");
}

}  // namespace

BellBasis2::BellBasis2() : b_(4, 4) {
    const double r = 1.0 / std::sqrt(2.0);
    b_.setZero();
    b_(0, 0) = r;  b_(3, 0) = r;   // Phi+
    b_(0, 1) = r;  b_(3, 1) = -r;  // Phi-
    b_(1, 2) = r;  b_(2, 2) = r;   // Psi+
    b_(1, 3) = r;  b_(2, 3) = -r;  // Psi-
    check_orthonormal(b_, 1e-12, "BellBasis2");
}

GenBellBasis3::GenBellBasis3() : b_(9, 9) {
    const double r = 1.0 / std::sqrt(3.0);
    b_.setZero();
    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) {
            const int column = 3 * row + col;
            for (int k = 0; k < 3; ++k) {
                const int component = 3 * k + (k + row) % 3;
                b_(component, column) = r * omega_pow(col * k);
            }
        }
    }
    check_orthonormal(b_, 1e-12, "GenBellBasis3");
}

SpecialUnitary su2_from_axis_angle(const AxisAngle& a) {
    const double c = std::cos(0.5 * a.angle);
    const double s = std::sin(0.5 * a.angle);
    Eigen::Matrix2cd u;
    u << Complex(c, s * a.axis.z()), Complex(s * a.axis.y(), s * a.axis.x()),
        Complex(-s * a.axis.y(), s * a.axis.x()), Complex(c, -s * a.axis.z());
    return SpecialUnitary(u);
}

Eigen::Vector4d v_u(const AxisAngle& a) {
    const double c = std::cos(0.5 * a.angle);
    const double s = std::sin(0.5 * a.angle);
    return Eigen::Vector4d(c, s * a.axis.x(), s * a.axis.y(), s * a.axis.z());
}

Eigen::Vector4d v_of_su2(const SpecialUnitary& u) {
    if (u.dim() != 2) throw std::invalid_argument("v_of_su2: need a 2x2 unitary");
    const Eigen::MatrixXcd& m = u.matrix();
    return Eigen::Vector4d(0.5 * (m(0, 0) + m(1, 1)).real(), 0.5 * (m(0, 1) + m(1, 0)).imag(),
                           0.5 * (m(0, 1) - m(1, 0)).real(), 0.5 * (m(0, 0) - m(1, 1)).imag());
}

AxisAngle axis_angle_of(const SpecialUnitary& u) {
    const Eigen::Vector4d v = v_of_su2(u);
    const Eigen::Vector3d direction(v[1], v[2], v[3]);
    const double r = direction.norm();
    const double angle = 2.0 * std::atan2(r, v[0]);
    if (r < 1e-15) return AxisAngle(Eigen::Vector3d::UnitZ(), angle);
    return AxisAngle(direction / r, angle);
}

Su2BellProbs su2_bell_probs(const SpecialUnitary& u) {
    if (u.dim() != 2) throw std::invalid_argument("su2_bell_probs: need a 2x2 unitary");
    static const BellBasis2 bell;
    // (U (x) I) |Phi+> has components U(i, k)/sqrt(2) at |i k>.
    Eigen::Vector4cd psi;
    const double r = 1.0 / std::sqrt(2.0);
    psi << u.matrix()(0, 0) * r, u.matrix()(0, 1) * r, u.matrix()(1, 0) * r, u.matrix()(1, 1) * r;
    const Eigen::Vector4cd amplitudes = bell.states().adjoint() * psi;
    ProbabilityVector direct{Eigen::VectorXd(amplitudes.cwiseAbs2())};

    const Eigen::Vector4d v = v_u(axis_angle_of(u));
    Eigen::VectorXd closed(4);
    closed << v[0] * v[0], v[3] * v[3], v[1] * v[1], v[2] * v[2];
    return Su2BellProbs{std::move(direct), ProbabilityVector(std::move(closed))};
}

Su2OptimalityReport su2_optimality_check(std::int64_t samples, Philox& rng) {
    if (samples < 10000) throw std::invalid_argument("su2_optimality_check: need at least 1e4 samples");
    constexpr int kPerAxis = 4;
    const int cells = kPerAxis * kPerAxis * kPerAxis;
    std::vector<std::int64_t> counts(cells, 0);
    Su2OptimalityReport report;
    report.samples = samples;
    report.cells = cells;
    report.mean_squared_components.setZero();
    for (std::int64_t i = 0; i < samples; ++i) {
        const SpecialUnitary u = sample_su(2, rng);
        const Su2BellProbs probs = su2_bell_probs(u);
        const Eigen::Vector4d v = v_of_su2(u);
        const Eigen::Vector4d v_sq = v.cwiseAbs2();
        report.mean_squared_components += v_sq;
        const Eigen::Vector4d permuted(v_sq[0], v_sq[3], v_sq[1], v_sq[2]);
        report.max_direct_closed_mismatch =
            std::max(report.max_direct_closed_mismatch,
                     (probs.direct.entries() - probs.closed_form.entries()).cwiseAbs().maxCoeff());
        report.max_vu_mismatch = std::max(
            report.max_vu_mismatch, (probs.closed_form.entries() - permuted).cwiseAbs().maxCoeff());
        const GammaVector gamma{Eigen::VectorXd(v.cwiseAbs())};
        ++counts[orthant_cell(probs_of(gamma), kPerAxis)];
    }
    report.mean_squared_components /= static_cast<double>(samples);
    report.orthant_uniformity = chi_square_uniform(counts);
    return report;
}

ProbabilityVector su3_bell_probs(const SpecialUnitary& u) {
    if (u.dim() != 3) throw std::invalid_argument("su3_bell_probs: need a 3x3 unitary");
    static const GenBellBasis3 basis;
    Eigen::VectorXcd psi(9);
    const double r = 1.0 / std::sqrt(3.0);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) psi[3 * i + k] = u.matrix()(i, k) * r;
    const Eigen::VectorXcd amplitudes = basis.states().adjoint() * psi;
    return ProbabilityVector(Eigen::VectorXd(amplitudes.cwiseAbs2()));
}

namespace {

std::pair<double, double> p2_p3_from_matrix(const Eigen::Matrix3cd& u) {
    const Complex omega = omega_pow(1);
    const Complex omega2 = omega_pow(2);
    const Complex a2 = u(0, 0) + omega2 * u(1, 1) + omega * u(2, 2);
    const Complex a3 = u(0, 0) + omega * u(1, 1) + omega2 * u(2, 2);
    return {std::norm(a2) / 9.0, std::norm(a3) / 9.0};
}

std::array<Eigen::Matrix3cd, 8> gell_mann() {
    std::array<Eigen::Matrix3cd, 8> g;
    for (auto& m : g) m.setZero();
    g[0](0, 1) = 1.0; g[0](1, 0) = 1.0;
    g[1](0, 1) = -kI; g[1](1, 0) = kI;
    g[2](0, 0) = 1.0; g[2](1, 1) = -1.0;
    g[3](0, 2) = 1.0; g[3](2, 0) = 1.0;
    g[4](0, 2) = -kI; g[4](2, 0) = kI;
    g[5](1, 2) = 1.0; g[5](2, 1) = 1.0;
    g[6](1, 2) = -kI; g[6](2, 1) = kI;
    const double r = 1.0 / std::sqrt(3.0);
    g[7](0, 0) = r; g[7](1, 1) = r; g[7](2, 2) = -2.0 * r;
    return g;
}

}  // namespace

std::pair<double, double> su3_p2_p3(const SpecialUnitary& u) {
    if (u.dim() != 3) throw std::invalid_argument("su3_p2_p3: need a 3x3 unitary");
    return p2_p3_from_matrix(u.matrix());
}

Su3BoundReport su3_product_bound(std::int64_t samples, Philox& rng) {
    if (samples < 10000) throw std::invalid_argument("su3_product_bound: need at least 1e4 samples");
    Su3BoundReport report;
    report.samples = samples;
    report.bound = 16.0 / 81.0;

    double max_eval = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const auto [p2, p3] = su3_p2_p3(sample_su(3, rng));
        max_eval = std::max(max_eval, p2 * p3);
    }
    report.max_product_sampled = max_eval;

    // Random-restart hill climbing in the Lie algebra (8 parameters),
    // restart 0 from the extremal point diag(1, -1, -1).
    const std::array<Eigen::Matrix3cd, 8> generators = gell_mann();
    double attained = 0.0;
    for (int restart = 0; restart < 50; ++restart) {
        Eigen::Matrix3cd u;
        if (restart == 0) {
            u = Eigen::Vector3cd(1.0, -1.0, -1.0).asDiagonal();
        } else {
            u = sample_su(3, rng).matrix();
        }
        auto value = [](const Eigen::Matrix3cd& m) {
            const auto [p2, p3] = p2_p3_from_matrix(m);
            return p2 * p3;
        };
        double best = value(u);
        double step = 0.3;
        int rejected = 0;
        for (int iter = 0; iter < 4000 && step > 1e-9; ++iter) {
            Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
            for (int k = 0; k < 8; ++k) h += (step * rng.normal()) * generators[k];
            const Eigen::Matrix3cd candidate = (kI * h).exp() * u;
            const double f = value(candidate);
            max_eval = std::max(max_eval, f);
            if (f > best) {
                best = f;
                u = candidate;
                rejected = 0;
            } else if (++rejected >= 40) {
                step *= 0.5;
                rejected = 0;
            }
        }
        attained = std::max(attained, best);
    }
    report.attained_by_search = attained;
    report.bound_ok = max_eval <= report.bound + 1e-12;
    report.attained_ok = attained >= report.bound - 1e-6;
    return report;
}

FootnoteResult footnote_inequality(Complex a, Complex b) {
    if (std::abs(a) > 1.0 + 1e-12 || std::abs(b) > 1.0 + 1e-12)
        throw std::invalid_argument("footnote_inequality: arguments must lie in the unit disk");
    FootnoteResult r;
    r.lhs = std::abs(1.0 + a + b + a * a + b * b - a * b);
    r.bound_ok = r.lhs <= 4.0 + 1e-12;
    return r;
}

double footnote_grid_max(int angular_points, const std::vector<double>& radii) {
    if (angular_points < 3) throw std::invalid_argument("footnote_grid_max: need at least 3 angles");
    double max_lhs = 0.0;
    for (const double ra : radii) {
        for (int ia = 0; ia < angular_points; ++ia) {
            const Complex a = std::polar(ra, 2.0 * M_PI * ia / angular_points);
            for (const double rb : radii) {
                for (int ib = 0; ib < angular_points; ++ib) {
                    const Complex b = std::polar(rb, 2.0 * M_PI * ib / angular_points);
                    max_lhs = std::max(max_lhs, std::abs(1.0 + a + b + a * a + b * b - a * b));
                }
            }
        }
    }
    return max_lhs;
}

SicFrame::SicFrame(int d) : d_(d) {
    if (d == 2) {
        // Tetrahedron frame: Bloch vectors (+-1, +-1, +-1)/sqrt(3) with an
        // even number of minus signs.
        const double r = 1.0 / std::sqrt(3.0);
        const std::array<Eigen::Vector3d, 4> bloch = {
            Eigen::Vector3d(r, r, r), Eigen::Vector3d(r, -r, -r), Eigen::Vector3d(-r, r, -r),
            Eigen::Vector3d(-r, -r, r)};
        m_.resize(2, 4);
        for (int i = 0; i < 4; ++i) {
            const double beta = std::acos(bloch[i].z());
            const double phi = std::atan2(bloch[i].y(), bloch[i].x());
            m_(0, i) = std::cos(0.5 * beta);
            m_(1, i) = std::polar(std::sin(0.5 * beta), phi);
        }
    } else if (d == 3) {
        // Weyl-Heisenberg orbit of the fiducial (0, 1, -1)/sqrt(2) under the
        // displacements X^a Z^b.
        Eigen::Vector3cd fiducial(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
        m_.resize(3, 9);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                Eigen::Vector3cd v;
                for (int k = 0; k < 3; ++k) {
                    // (X^a Z^b f)_k = omega^{b (k - a)} f_{k - a}.
                    const int src = ((k - a) % 3 + 3) % 3;
                    v[k] = omega_pow(b * src) * fiducial[src];
                }
                m_.col(3 * a + b) = v;
            }
        }
    } else {
        throw std::invalid_argument("SicFrame: analytic frames are shipped for d = 2 and d = 3 only");
    }

    const int count = d_ * d_;
    const double target = 1.0 / (d_ + 1.0);
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const double overlap = std::norm(m_.col(i).dot(m_.col(j)));
            if (std::fabs(overlap - target) > 1e-10)
                throw std::logic_error("SicFrame: equiangularity violated");
        }
    }
    Eigen::MatrixXcd frame_op = Eigen::MatrixXcd::Zero(d_, d_);
    for (int i = 0; i < count; ++i) frame_op += m_.col(i) * m_.col(i).adjoint();
    frame_op /= static_cast<double>(d_);
    if ((frame_op - Eigen::MatrixXcd::Identity(d_, d_)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::logic_error("SicFrame: identity resolution violated");
}

ProbabilityVector sic_probs(const ComplexStateVector& state, const SicFrame& frame) {
    if (state.dim() != frame.dim()) throw std::invalid_argument("sic_probs: dimension mismatch");
    const Eigen::VectorXcd amplitudes = frame.vectors().adjoint() * state.components();
    return ProbabilityVector(Eigen::VectorXd(amplitudes.cwiseAbs2() / static_cast<double>(frame.dim())));
}

Eigen::MatrixXcd sic_reconstruct(const ProbabilityVector& probs, const SicFrame& frame) {
    const int d = frame.dim();
    if (probs.dim() != d * d) throw std::invalid_argument("sic_reconstruct: need d^2 probabilities");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d * d; ++i) {
        const double coefficient = (d + 1.0) * probs[i] - 1.0 / d;
        rho += coefficient * frame.vectors().col(i) * frame.vectors().col(i).adjoint();
    }
    return rho;
}

SicInaccessibilityReport sic_inaccessibility_report(int d, std::int64_t samples, Philox& rng) {
    if (d != 2 && d != 3) throw std::invalid_argument("sic_inaccessibility_report: d must be 2 or 3");
    if (samples < 10000) throw std::invalid_argument("sic_inaccessibility_report: need at least 1e4 samples");
    SicInaccessibilityReport report;
    report.dim = d;
    report.samples = samples;
    report.threshold = 1.0 / d + 0.05;

    // Mass of the forbidden cell under the optimal (orthant-uniform) measure
    // on the d^2-outcome probability space.
    const int outcomes = d * d;
    std::int64_t forbidden = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const RealStateVector g = sample_real_sphere(outcomes, rng);
        if (g.components().cwiseAbs2().maxCoeff() > report.threshold) ++forbidden;
    }
    report.forbidden_mass = static_cast<double>(forbidden) / static_cast<double>(samples);
    report.forbidden_mass_stderr =
        std::sqrt(report.forbidden_mass * (1.0 - report.forbidden_mass) / static_cast<double>(samples));

    const SicFrame frame(d);
    for (std::int64_t i = 0; i < samples; ++i) {
        const ProbabilityVector p = sic_probs(sample_haar_state(d, rng), frame);
        const double max_p = p.entries().maxCoeff();
        report.max_sic_prob = std::max(report.max_sic_prob, max_p);
        if (max_p > report.threshold) ++report.sic_hits;
    }
    return report;
}

}  // namespace redit

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/statespace.hpp"

#include <cmath>

namespace redit {

RealStateVector sample_real_sphere(int d, Philox& rng) {
    if (d < 1) throw std::invalid_argument("sample_real_sphere: dimension must be >= 1");
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.normal();
    return RealStateVector::normalized(std::move(v));
}

ComplexStateVector sample_haar_state(int d, Philox& rng) {
    if (d < 1) throw std::invalid_argument("sample_haar_state: dimension must be >= 1");
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v[i] = Complex(rng.normal(), rng.normal());
    return ComplexStateVector::normalized(std::move(v));
}

SpecialUnitary sample_su(int d, Philox& rng) {
    if (d < 2) throw std::invalid_argument("sample_su: dimension must be >= 2");
    Eigen::MatrixXcd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = Complex(rng.normal(), rng.normal());
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Absorb the R diagonal phases into Q; without this the QR map is not
    // Haar (Mezzadri 2007).
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    const Complex det = q.determinant();
    q *= std::polar(1.0, -std::arg(det) / d);
    return SpecialUnitary(std::move(q));
}

GammaVector gamma_of(const ProbabilityVector& p) {
    return GammaVector(p.entries().cwiseSqrt());
}

ProbabilityVector probs_of(const GammaVector& g) {
    return ProbabilityVector(g.entries().cwiseAbs2());
}

ProbabilityVector polarization_rule(const PreparationAngle& angle) {
    const double c = std::cos(0.5 * angle.multiplier * angle.theta);
    Eigen::VectorXd p(2);
    p << c * c, 1.0 - c * c;
    return ProbabilityVector(std::move(p));
}

ProbabilityVector bloch_rule(const BlochPoint& point) {
    const double c = std::cos(point.beta);
    Eigen::VectorXd p(2);
    p << 0.5 * (1.0 + c), 0.5 * (1.0 - c);
    return ProbabilityVector(std::move(p));
}

}  // namespace redit

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_MEASURES_HPP
#define REDIT_MEASURES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "redit/rng.hpp"
#include "redit/statespace.hpp"
#include "redit/stats.hpp"

namespace redit {

/// A priori measure K on probability space, given as a paired sampler and
/// log-density evaluator.  The density is taken with respect to the surface
/// element on the positive orthant of the unit sphere; for d = 2 this is
/// equivalently a density K(alpha) over alpha in [0, pi/2] with
/// gamma = (cos alpha, sin alpha).
struct PriorDensity {
    int dim = 2;
    std::string name;
    std::function<GammaVector(Philox&)> sample;
    std::function<double(const GammaVector&)> log_density;

    /// Density over alpha; only set for d = 2 priors, enables quadrature.
    std::function<double(double)> alpha_density;

    /// Entropy known exactly (closed form or converged quadrature), in nats.
    std::optional<double> exact_entropy;

    /// When the pushforward of K to the flat simplex is Dirichlet, its
    /// parameter vector; empty otherwise.  Conjugacy gives the count
    /// marginal in closed form.
    Eigen::VectorXd dirichlet_weights;
};

/// alpha of a d = 2 gamma vector: gamma = (cos alpha, sin alpha).
inline double alpha_of(const GammaVector& g) { return std::atan2(g[1], g[0]); }

/// Constant value of the optimal uniform measure on the positive orthant,
/// the reciprocal of the orthant's surface area: 2^d Gamma(d/2+1) / (d pi^{d/2}).
double k_opt(int d);

/// Uniform density K(alpha) = 2/pi on [0, pi/2]; the optimal d = 2 measure.
PriorDensity uniform_alpha_density();

/// Measure induced on alpha by the Born rule over the uniform Bloch sphere:
/// K(alpha) = 2 cos(alpha) sin(alpha).  Sampler draws p1 uniform on [0, 1]
/// and sets alpha = arccos(sqrt(p1)).
PriorDensity bloch_alpha_density();

/// Uniform measure on the positive orthant of the unit sphere in R^d.
PriorDensity uniform_orthant_density(int d);

/// Truncated-Gaussian bump on [0, pi/2], for the optimality battery.
PriorDensity bump_alpha_density(double center = M_PI / 4.0, double sigma = 0.2);

/// Linear ramp K(alpha) = (8/pi^2) alpha, for the optimality battery.
PriorDensity ramp_alpha_density();

/// Generic d = 2 prior from an unnormalized density over alpha.  Normalizes
/// by quadrature, samples by inverse CDF on a fine grid, and computes the
/// entropy by quadrature.
PriorDensity alpha_prior_from_density(std::string name, std::function<double(double)> density);

struct EntropyEstimate {
    double value = 0.0;
    double std_error = 0.0;
    bool closed_form = false;
};

/// Differential entropy -integral K ln K of the prior, in nats.  Uses the
/// exact value when the prior carries one, otherwise the Monte Carlo
/// estimate -mean(log_density) over `samples` draws with a jackknife
/// standard error.  Throws std::runtime_error on a non-finite log-density
/// draw (the prior violates the positivity condition).
EntropyEstimate differential_entropy(const PriorDensity& prior, std::int64_t samples, Philox& rng);

/// Monte Carlo path, regardless of any exact value.
EntropyEstimate differential_entropy_mc(const PriorDensity& prior, std::int64_t samples, Philox& rng);

/// Monte Carlo check that the density integrates to 1 over the orthant:
/// draws from the uniform orthant reference and averages K / k_opt.
EntropyEstimate normalization_check(const PriorDensity& prior, std::int64_t samples, Philox& rng);

/// Measure induced on alpha by a two-outcome probability rule under a
/// uniform preparation angle theta on [0, 2*pi).
struct InducedMeasureEstimate {
    int bins = 0;
    std::int64_t samples = 0;
    Eigen::VectorXd mass;     // per-bin mass, sums to 1
    Eigen::VectorXd density;  // mass / bin width

    /// Plug-in entropy corrected by +ln(bin width); binned estimation
    /// carries bias O(bins/samples) + O(1/bins^2).
    double entropy = 0.0;

    /// CSV with columns bin_low, bin_high, mass, density.
    std::string to_csv() const;
};

InducedMeasureEstimate induced_alpha_density(const std::function<ProbabilityVector(double)>& rule,
                                             std::int64_t samples, int bins, Philox& rng);

/// Default binning ceil(sqrt(samples)).
InducedMeasureEstimate induced_alpha_density(const std::function<ProbabilityVector(double)>& rule,
                                             std::int64_t samples, Philox& rng);

/// Equal-measure cell decompositions used by the uniformity tests, built by
/// recursive conditional slicing of the simplex.  A point maps to one of
/// per_axis^(d-1) cells; under the null measure all cells carry the same
/// mass.
///
/// flat_simplex_cell: null measure is uniform on the flat simplex
/// (Dirichlet(1,...,1)).
/// orthant_cell: null measure is uniform on the gamma orthant, i.e.
/// Dirichlet(1/2,...,1/2) for p = gamma^2.
int flat_simplex_cell(const ProbabilityVector& p, int per_axis);
int orthant_cell(const ProbabilityVector& p, int per_axis);

/// Pushforward uniformity test: Haar complex states land uniformly on the
/// flat simplex (and not on the orthant); real-sphere states land uniformly
/// on the orthant (and not on the flat simplex).
struct SykoraReport {
    int dim = 0;
    std::int64_t samples = 0;
    int cells = 0;  // actual cell count, per_axis^(d-1)
    ChiSquareResult complex_flat;
    ChiSquareResult complex_orthant;
    ChiSquareResult real_flat;
    ChiSquareResult real_orthant;
};

SykoraReport sykora_test(int d, std::int64_t samples, int cells, Philox& rng);

/// arccos(sum_i sqrt(p_i q_i)), the angle between gamma vectors, in [0, pi/2].
double bhattacharyya_angle(const ProbabilityVector& p, const ProbabilityVector& q);

}  // namespace redit

#endif  // REDIT_MEASURES_HPP

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_INFERENCE_HPP
#define REDIT_INFERENCE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "redit/measures.hpp"
#include "redit/rng.hpp"
#include "redit/statespace.hpp"

namespace redit {

/// Outcome tallies of N repeated measurements.
class TrialCounts {
  public:
    using Vector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

    explicit TrialCounts(Vector counts) : n_(std::move(counts)) {
        if (n_.size() < 1) throw std::invalid_argument("TrialCounts: dimension must be >= 1");
        if ((n_.array() < 0).any()) throw std::invalid_argument("TrialCounts: negative count");
        total_ = n_.sum();
    }

    static TrialCounts of(std::initializer_list<std::int64_t> counts) {
        Vector v(static_cast<Eigen::Index>(counts.size()));
        Eigen::Index i = 0;
        for (const std::int64_t c : counts) v[i++] = c;
        return TrialCounts(std::move(v));
    }

    Eigen::Index dim() const { return n_.size(); }
    const Vector& counts() const { return n_; }
    std::int64_t total() const { return total_; }
    std::int64_t operator[](Eigen::Index i) const { return n_[i]; }

  private:
    Vector n_;
    std::int64_t total_ = 0;
};

struct MutualInfoEstimate {
    double value = 0.0;       // nats
    double std_error = 0.0;
    std::int64_t trials = 0;  // N
    std::string method;       // "exact-quadrature" or "nested-mc"
    double inner_bias = 0.0;  // nested-mc only: delta-method estimate of the positive bias
};

struct ItildeResult {
    double itilde = 0.0;
    bool converged = false;
    std::vector<std::pair<std::int64_t, double>> per_n;  // (N, I - ((d-1)/2) ln N)
    std::vector<MutualInfoEstimate> estimates;
};

/// ln multinomial pmf via log-gamma; terms with n_i = 0 contribute nothing
/// even when p_i = 0, and p_i = 0 with n_i > 0 yields -infinity.
double multinomial_log_pmf(const TrialCounts& counts, const ProbabilityVector& p);

/// ln Dirichlet-multinomial pmf for Dirichlet weights w (the count marginal
/// of a Dirichlet mixing measure).
double dirichlet_multinomial_log_pmf(const TrialCounts& counts, const Eigen::VectorXd& weights);

/// Log of the variance-stabilized Gaussian approximation to the multinomial:
/// -((d-1)/2) ln(2 pi N) - sum ln gamma_i - 2N |gamma^(n) - gamma|^2.
/// Rejects gamma vectors with a zero entry; the approximation breaks down at
/// the edge of probability space.
double gaussian_log_pmf(const TrialCounts& counts, const GammaVector& gamma);

/// Square roots of the observed frequencies, (sqrt(n_1/N), ..., sqrt(n_d/N)).
GammaVector freq_sqrt(const TrialCounts& counts);

/// Draw outcome tallies of N independent trials at probabilities p.
TrialCounts sample_multinomial(std::int64_t trials, const ProbabilityVector& p, Philox& rng);

/// Bayesian update of a prior measure by observed counts.  d = 2 priors with
/// an alpha density are updated by quadrature; otherwise the posterior is
/// represented by self-normalized importance sampling on a pool drawn from
/// the prior's sampler (throws when the effective sample size drops
/// below 100).
PriorDensity posterior_density(const PriorDensity& prior, const TrialCounts& counts,
                               std::int64_t importance_pool = 20000, RngSeed pool_seed = RngSeed{1905, 0});

/// ((d-1)/2) ln(2N / (pi e)), the large-N value of -h(gamma | n).
double posterior_entropy_asymptote(std::int64_t trials, int d);

/// Mutual information I(alpha : n) = H(n) - H(n | alpha) for a two-outcome
/// experiment repeated N times, by composite Gauss-Legendre quadrature over
/// alpha.  Panels double until the vector P(n) is stable to 1e-9 in L1.
MutualInfoEstimate mutual_info_binary_exact(const PriorDensity& prior, std::int64_t trials);

struct NestedMcOptions {
    std::int64_t outer = 10000;
    std::int64_t inner = 10000;
    /// When the prior carries Dirichlet weights, evaluate the count marginal
    /// P(n) in closed form (the exact limit of the inner average) instead of
    /// sampling it.
    bool use_conjugate_marginal = true;
};

/// Nested Monte Carlo estimator of I(gamma : n) for any dimension: outer
/// draws of (gamma, n) from the prior and the multinomial, inner average
/// over fresh prior draws for ln P(n).  The inner log-average carries a
/// positive bias of order Var(w)/(2 M_i E[w]^2); it is reported in
/// `inner_bias`, not corrected.
MutualInfoEstimate mutual_info_multinomial_mc(const PriorDensity& prior, std::int64_t trials,
                                              const NestedMcOptions& options, Philox& rng);

/// Large-N limit from the entropy: h + ((d-1)/2) ln(2/(pi e)).
double i_tilde_from_entropy(double entropy, int d);

/// Same, reading the prior's exact entropy; throws when none is available.
double i_tilde_closed_form(const PriorDensity& prior);

enum class MiEstimator { kExactQuadrature, kNestedMc };

/// Evaluate I - ((d-1)/2) ln N along an increasing schedule of N and report
/// the largest-N value as the limit, flagging non-convergence when the last
/// two values differ by more than 0.05.
ItildeResult i_tilde_empirical(const PriorDensity& prior, const std::vector<std::int64_t>& schedule,
                               MiEstimator estimator, Philox& rng, const NestedMcOptions& options = {});

/// Standard deviation of n/N for a two-outcome experiment: sqrt(p1 p2 / N).
double delta_frequency(const ProbabilityVector& p, std::int64_t trials);

/// Both sides of the slope-compensation identity
/// |d(cos^2 theta)/d theta| = 2 sqrt(p (1 - p)).
struct SlopeCompensation {
    double rule_slope = 0.0;
    double two_sqrt_pq = 0.0;
};
SlopeCompensation slope_compensation(double theta);

enum class UncertaintyCoordinates { kFlat, kSpherical };

/// Region of frequency vectors whose Gaussian exponent has magnitude below
/// one, as an ellipsoid: center, orthonormal principal axes (columns) inside
/// the constraint plane, and radii.  In spherical (gamma) coordinates all
/// radii equal 1/sqrt(2N); in flat coordinates the radii follow the
/// quadratic form (N/2) sum dp_i^2 / p_i restricted to the simplex plane.
struct UncertaintyRegion {
    Eigen::VectorXd center;
    Eigen::MatrixXd axes;
    Eigen::VectorXd radii;
};

UncertaintyRegion region_of_uncertainty(const ProbabilityVector& p, std::int64_t trials,
                                        UncertaintyCoordinates coordinates);

}  // namespace redit

#endif  // REDIT_INFERENCE_HPP

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "redit/specfun.hpp"

namespace redit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kHalfPi = M_PI / 2.0;

double log_multinomial_coefficient(const TrialCounts& counts) {
    double v = std::lgamma(static_cast<double>(counts.total()) + 1.0);
    for (Eigen::Index i = 0; i < counts.dim(); ++i) v -= std::lgamma(static_cast<double>(counts[i]) + 1.0);
    return v;
}

}  // namespace

double multinomial_log_pmf(const TrialCounts& counts, const ProbabilityVector& p) {
    if (counts.dim() != p.dim()) throw std::invalid_argument("multinomial_log_pmf: dimension mismatch");
    double v = log_multinomial_coefficient(counts);
    for (Eigen::Index i = 0; i < counts.dim(); ++i) {
        if (counts[i] == 0) continue;
        if (p[i] <= 0.0) return kNegInf;
        v += static_cast<double>(counts[i]) * std::log(p[i]);
    }
    return v;
}

double dirichlet_multinomial_log_pmf(const TrialCounts& counts, const Eigen::VectorXd& weights) {
    if (counts.dim() != weights.size())
        throw std::invalid_argument("dirichlet_multinomial_log_pmf: dimension mismatch");
    const double w_total = weights.sum();
    const double n_total = static_cast<double>(counts.total());
    double v = log_multinomial_coefficient(counts) + std::lgamma(w_total) - std::lgamma(n_total + w_total);
    for (Eigen::Index i = 0; i < counts.dim(); ++i) {
        v += std::lgamma(static_cast<double>(counts[i]) + weights[i]) - std::lgamma(weights[i]);
    }
    return v;
}

double gaussian_log_pmf(const TrialCounts& counts, const GammaVector& gamma) {
    if (counts.dim() != gamma.dim()) throw std::invalid_argument("gaussian_log_pmf: dimension mismatch");
    if ((gamma.entries().array() <= 0.0).any())
        throw std::domain_error("gaussian_log_pmf: gamma has a zero entry; the approximation is invalid at the edge");
    const double n = static_cast<double>(counts.total());
    const Eigen::Index d = gamma.dim();
    const GammaVector observed = freq_sqrt(counts);
    const double dist2 = (observed.entries() - gamma.entries()).squaredNorm();
    double v = -0.5 * (d - 1) * std::log(2.0 * M_PI * n) - 2.0 * n * dist2;
    v -= gamma.entries().array().log().sum();
    return v;
}

GammaVector freq_sqrt(const TrialCounts& counts) {
    if (counts.total() < 1) throw std::invalid_argument("freq_sqrt: need at least one trial");
    const double n = static_cast<double>(counts.total());
    return GammaVector((counts.counts().cast<double>() / n).cwiseSqrt());
}

TrialCounts sample_multinomial(std::int64_t trials, const ProbabilityVector& p, Philox& rng) {
    if (trials < 0) throw std::invalid_argument("sample_multinomial: negative trial count");
    const Eigen::Index d = p.dim();
    Eigen::VectorXd cumulative(d);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        acc += p[i];
        cumulative[i] = acc;
    }
    cumulative[d - 1] = 1.0;
    TrialCounts::Vector counts = TrialCounts::Vector::Zero(d);
    for (std::int64_t t = 0; t < trials; ++t) {
        const double u = rng.uniform();
        Eigen::Index i = 0;
        while (i < d - 1 && u >= cumulative[i]) ++i;
        ++counts[i];
    }
    return TrialCounts(std::move(counts));
}

PriorDensity posterior_density(const PriorDensity& prior, const TrialCounts& counts,
                               std::int64_t importance_pool, RngSeed pool_seed) {
    if (counts.dim() != prior.dim) throw std::invalid_argument("posterior_density: dimension mismatch");

    Eigen::VectorXd posterior_dirichlet;
    if (prior.dirichlet_weights.size() == prior.dim)
        posterior_dirichlet = prior.dirichlet_weights + counts.counts().cast<double>();

    if (prior.dim == 2 && prior.alpha_density) {
        // Quadrature path: the unnormalized posterior K(alpha) P(n|alpha) is
        // evaluable everywhere; normalization, sampler and entropy come from
        // the generic alpha-density constructor.  Likelihood values are
        // rescaled by their maximum before exponentiation.
        const double n1 = static_cast<double>(counts[0]);
        const double n2 = static_cast<double>(counts[1]);
        double max_ll = kNegInf;
        for (int i = 0; i <= 2048; ++i) {
            const double a = kHalfPi * i / 2048.0;
            const double c = std::cos(a), s = std::sin(a);
            if (c <= 0.0 || s <= 0.0) continue;
            max_ll = std::max(max_ll, 2.0 * (n1 * std::log(c) + n2 * std::log(s)));
        }
        const auto k = prior.alpha_density;
        const double shift = max_ll;
        PriorDensity post = alpha_prior_from_density(
            prior.name + "|counts", [k, n1, n2, shift](double a) {
                const double base = k(a);
                if (base <= 0.0) return 0.0;
                const double c = std::cos(a), s = std::sin(a);
                double ll = 0.0;
                if (n1 > 0.0) {
                    if (c <= 0.0) return 0.0;
                    ll += 2.0 * n1 * std::log(c);
                }
                if (n2 > 0.0) {
                    if (s <= 0.0) return 0.0;
                    ll += 2.0 * n2 * std::log(s);
                }
                return base * std::exp(ll - shift);
            });
        post.dirichlet_weights = posterior_dirichlet;
        return post;
    }

    // Self-normalized importance sampling from the prior's sampler.
    if (importance_pool < 1000) throw std::invalid_argument("posterior_density: importance pool too small");
    Philox rng(pool_seed);
    auto pool = std::make_shared<std::vector<GammaVector>>();
    pool->reserve(importance_pool);
    std::vector<double> log_w(importance_pool);
    double max_lw = kNegInf;
    for (std::int64_t i = 0; i < importance_pool; ++i) {
        pool->push_back(prior.sample(rng));
        log_w[i] = multinomial_log_pmf(counts, probs_of(pool->back()));
        max_lw = std::max(max_lw, log_w[i]);
    }
    if (!std::isfinite(max_lw))
        throw std::runtime_error("posterior_density: all importance weights vanished");
    double sum_w = 0.0, sum_w2 = 0.0;
    auto cumulative = std::make_shared<std::vector<double>>(importance_pool);
    for (std::int64_t i = 0; i < importance_pool; ++i) {
        const double w = std::exp(log_w[i] - max_lw);
        sum_w += w;
        sum_w2 += w * w;
        (*cumulative)[i] = sum_w;
    }
    const double ess = sum_w * sum_w / sum_w2;
    if (ess < 100.0)
        throw std::runtime_error("posterior_density: effective sample size below 100; "
                                 "prior poorly matched to the data");
    const double log_norm = max_lw + std::log(sum_w / static_cast<double>(importance_pool));
    for (double& c : *cumulative) c /= sum_w;

    PriorDensity post;
    post.dim = prior.dim;
    post.name = prior.name + "|counts";
    const auto prior_logk = prior.log_density;
    const auto counts_copy = std::make_shared<TrialCounts>(counts);
    post.log_density = [prior_logk, counts_copy, log_norm](const GammaVector& g) {
        return prior_logk(g) + multinomial_log_pmf(*counts_copy, probs_of(g)) - log_norm;
    };
    post.sample = [pool, cumulative](Philox& r) {
        const double u = r.uniform();
        const auto it = std::lower_bound(cumulative->begin(), cumulative->end(), u);
        const std::size_t idx = std::min<std::size_t>(it - cumulative->begin(), pool->size() - 1);
        return (*pool)[idx];
    };
    post.dirichlet_weights = posterior_dirichlet;
    return post;
}

double posterior_entropy_asymptote(std::int64_t trials, int d) {
    if (trials < 1) throw std::invalid_argument("posterior_entropy_asymptote: need at least one trial");
    if (d < 1) throw std::invalid_argument("posterior_entropy_asymptote: dimension must be >= 1");
    return 0.5 * (d - 1) * std::log(2.0 * static_cast<double>(trials) / (M_PI * M_E));
}

MutualInfoEstimate mutual_info_binary_exact(const PriorDensity& prior, std::int64_t trials) {
    if (prior.dim != 2 || !prior.alpha_density)
        throw std::invalid_argument("mutual_info_binary_exact: needs a d = 2 prior with an alpha density");
    if (trials < 1 || trials > (1 << 16))
        throw std::invalid_argument("mutual_info_binary_exact: N must be in [1, 65536]");

    const std::size_t n_values = static_cast<std::size_t>(trials) + 1;
    std::vector<double> log_choose(n_values);
    const double lg_n = std::lgamma(static_cast<double>(trials) + 1.0);
    for (std::size_t n = 0; n < n_values; ++n) {
        log_choose[n] =
            lg_n - std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(trials - n) + 1.0);
    }

    std::vector<double> pn_prev;
    for (int panels = 512; panels <= 8192; panels *= 2) {
        const GaussLegendreRule rule = composite_gauss_legendre(0.0, kHalfPi, panels, 8);
        std::vector<double> pn(n_values, 0.0);
        double conditional = 0.0;  // integral K(alpha) sum_n P ln P
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double alpha = rule.nodes[j];
            const double wk = rule.weights[j] * prior.alpha_density(alpha);
            if (wk <= 0.0) continue;
            const double lp = 2.0 * std::log(std::cos(alpha));
            const double lq = 2.0 * std::log(std::sin(alpha));
            double node_plogp = 0.0;
            for (std::size_t n = 0; n < n_values; ++n) {
                const double log_p = log_choose[n] + n * lp + (trials - n) * lq;
                const double p = std::exp(log_p);
                pn[n] += wk * p;
                node_plogp += p * log_p;
            }
            conditional += wk * node_plogp;
        }
        double h_n = 0.0;
        for (const double p : pn)
            if (p > 0.0) h_n -= p * std::log(p);
        const double info = h_n + conditional;

        if (!pn_prev.empty()) {
            double delta = 0.0;
            for (std::size_t n = 0; n < n_values; ++n) delta += std::fabs(pn[n] - pn_prev[n]);
            if (delta < 1e-9) {
                MutualInfoEstimate est;
                est.value = info;
                est.std_error = 0.0;
                est.trials = trials;
                est.method = "exact-quadrature";
                return est;
            }
        }
        pn_prev = std::move(pn);
    }
    throw std::runtime_error("mutual_info_binary_exact: quadrature did not converge");
}

MutualInfoEstimate mutual_info_multinomial_mc(const PriorDensity& prior, std::int64_t trials,
                                              const NestedMcOptions& options, Philox& rng) {
    if (options.outer < 1000 || options.inner < 1000)
        throw std::invalid_argument("mutual_info_multinomial_mc: outer and inner sizes must be >= 1e3");
    const bool conjugate = options.use_conjugate_marginal && prior.dirichlet_weights.size() == prior.dim;

    std::vector<double> contributions;
    contributions.reserve(options.outer);
    std::vector<double> inner_log(conjugate ? 0 : options.inner);
    double bias_sum = 0.0;
    for (std::int64_t k = 0; k < options.outer; ++k) {
        const GammaVector gamma = prior.sample(rng);
        const ProbabilityVector p = probs_of(gamma);
        const TrialCounts n = sample_multinomial(trials, p, rng);
        const double log_likelihood = multinomial_log_pmf(n, p);

        double log_pn;
        if (conjugate) {
            log_pn = dirichlet_multinomial_log_pmf(n, prior.dirichlet_weights);
        } else {
            // ln P(n) ~= ln mean_j P(n | gamma_j) over fresh prior draws; the
            // multinomial coefficient is constant and added back afterwards.
            double max_s = kNegInf;
            for (std::int64_t j = 0; j < options.inner; ++j) {
                const ProbabilityVector q = probs_of(prior.sample(rng));
                double s = 0.0;
                for (Eigen::Index i = 0; i < n.dim(); ++i) {
                    if (n[i] == 0) continue;
                    if (q[i] <= 0.0) {
                        s = kNegInf;
                        break;
                    }
                    s += static_cast<double>(n[i]) * std::log(q[i]);
                }
                inner_log[j] = s;
                max_s = std::max(max_s, s);
            }
            if (!std::isfinite(max_s))
                throw std::runtime_error("mutual_info_multinomial_mc: inner average underflowed; "
                                         "prior too concentrated");
            double sum = 0.0, sum_sq = 0.0;
            for (const double s : inner_log) {
                const double w = std::exp(s - max_s);
                sum += w;
                sum_sq += w * w;
            }
            const double m_i = static_cast<double>(options.inner);
            log_pn = log_multinomial_coefficient(n) + max_s + std::log(sum / m_i);
            // Delta-method bias of the log of a sample mean.
            const double mean_w = sum / m_i;
            const double var_w = std::max(0.0, sum_sq / m_i - mean_w * mean_w);
            bias_sum += var_w / (mean_w * mean_w) / (2.0 * m_i);
        }
        contributions.push_back(log_likelihood - log_pn);
    }

    MutualInfoEstimate est;
    est.value = mean_of(contributions);
    est.std_error = jackknife_stderr(contributions);
    est.trials = trials;
    est.method = "nested-mc";
    est.inner_bias = conjugate ? 0.0 : bias_sum / static_cast<double>(options.outer);
    return est;
}

double i_tilde_from_entropy(double entropy, int d) {
    if (d < 1) throw std::invalid_argument("i_tilde_from_entropy: dimension must be >= 1");
    return entropy + 0.5 * (d - 1) * std::log(2.0 / (M_PI * M_E));
}

double i_tilde_closed_form(const PriorDensity& prior) {
    if (!prior.exact_entropy)
        throw std::invalid_argument("i_tilde_closed_form: prior has no exact entropy; "
                                    "use differential_entropy and i_tilde_from_entropy");
    return i_tilde_from_entropy(*prior.exact_entropy, prior.dim);
}

ItildeResult i_tilde_empirical(const PriorDensity& prior, const std::vector<std::int64_t>& schedule,
                               MiEstimator estimator, Philox& rng, const NestedMcOptions& options) {
    if (schedule.size() < 3) throw std::invalid_argument("i_tilde_empirical: schedule needs at least 3 points");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("i_tilde_empirical: schedule must be strictly increasing");

    ItildeResult result;
    if (prior.dim == 1) {
        // Single outcome: n is deterministic and carries no information.
        for (const std::int64_t n : schedule) result.per_n.emplace_back(n, 0.0);
        result.itilde = 0.0;
        result.converged = true;
        return result;
    }

    for (const std::int64_t n : schedule) {
        MutualInfoEstimate est = estimator == MiEstimator::kExactQuadrature
                                     ? mutual_info_binary_exact(prior, n)
                                     : mutual_info_multinomial_mc(prior, n, options, rng);
        const double value = est.value - 0.5 * (prior.dim - 1) * std::log(static_cast<double>(n));
        result.per_n.emplace_back(n, value);
        result.estimates.push_back(std::move(est));
    }
    result.itilde = result.per_n.back().second;
    const double last_gap =
        std::fabs(result.per_n[result.per_n.size() - 1].second - result.per_n[result.per_n.size() - 2].second);
    result.converged = last_gap <= 0.05;
    return result;
}

double delta_frequency(const ProbabilityVector& p, std::int64_t trials) {
    if (p.dim() != 2) throw std::invalid_argument("delta_frequency: two outcomes required");
    if (trials < 1) throw std::invalid_argument("delta_frequency: need at least one trial");
    return std::sqrt(p[0] * p[1] / static_cast<double>(trials));
}

SlopeCompensation slope_compensation(double theta) {
    SlopeCompensation s;
    s.rule_slope = std::fabs(2.0 * std::cos(theta) * std::sin(theta));
    const double p = std::cos(theta) * std::cos(theta);
    s.two_sqrt_pq = 2.0 * std::sqrt(std::max(0.0, p * (1.0 - p)));
    return s;
}

namespace {

// Orthonormal basis of the hyperplane orthogonal to v, as the trailing
// columns of the Householder Q of [v].
Eigen::MatrixXd orthogonal_complement(const Eigen::VectorXd& v) {
    const Eigen::Index d = v.size();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
    const Eigen::MatrixXd q = qr.householderQ();
    return q.rightCols(d - 1);
}

}  // namespace

UncertaintyRegion region_of_uncertainty(const ProbabilityVector& p, std::int64_t trials,
                                        UncertaintyCoordinates coordinates) {
    if (trials < 1) throw std::invalid_argument("region_of_uncertainty: need at least one trial");
    if ((p.entries().array() <= 0.0).any())
        throw std::domain_error("region_of_uncertainty: boundary point; all probabilities must be positive");
    const Eigen::Index d = p.dim();
    const double n = static_cast<double>(trials);

    UncertaintyRegion region;
    if (coordinates == UncertaintyCoordinates::kSpherical) {
        const Eigen::VectorXd gamma = p.entries().cwiseSqrt();
        region.center = gamma;
        region.axes = orthogonal_complement(gamma);
        region.radii = Eigen::VectorXd::Constant(d - 1, 1.0 / std::sqrt(2.0 * n));
        return region;
    }

    // Flat coordinates: exponent magnitude (N/2) sum dp_i^2 / p_i <= 1 on the
    // plane sum dp_i = 0.
    region.center = p.entries();
    const Eigen::MatrixXd basis = orthogonal_complement(Eigen::VectorXd::Ones(d));
    const Eigen::MatrixXd form = basis.transpose() * p.entries().cwiseInverse().asDiagonal() * basis;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(form);
    region.axes = basis * eig.eigenvectors();
    region.radii = (2.0 / (n * eig.eigenvalues().array())).sqrt();
    return region;
}

}  // namespace redit

// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <stdexcept>
#include <vector>

#include "redit/specfun.hpp"

namespace redit {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

GammaVector gamma_from_alpha(double alpha) {
    Eigen::VectorXd g(2);
    g << std::cos(alpha), std::sin(alpha);
    return GammaVector(std::move(g));
}

double entropy_by_quadrature(const std::function<double(double)>& density) {
    // -integral K ln K over [0, pi/2]; integrand vanishes where K does.
    double previous = 0.0;
    for (int panels = 64; panels <= 4096; panels *= 2) {
        const GaussLegendreRule rule = composite_gauss_legendre(0.0, kHalfPi, panels, 8);
        double h = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double k = density(rule.nodes[i]);
            if (k > 0.0) h -= rule.weights[i] * k * std::log(k);
        }
        if (panels > 64 && std::fabs(h - previous) < 1e-12) return h;
        previous = h;
    }
    return previous;
}

}  // namespace

double k_opt(int d) {
    if (d < 1) throw std::invalid_argument("k_opt: dimension must be >= 1");
    return std::exp(d * std::log(2.0) + std::lgamma(0.5 * d + 1.0) - std::log(static_cast<double>(d)) -
                    0.5 * d * std::log(M_PI));
}

PriorDensity uniform_alpha_density() {
    PriorDensity prior;
    prior.dim = 2;
    prior.name = "uniform";
    prior.sample = [](Philox& rng) { return gamma_from_alpha(rng.uniform(0.0, kHalfPi)); };
    prior.log_density = [](const GammaVector&) { return std::log(2.0 / M_PI); };
    prior.alpha_density = [](double) { return 2.0 / M_PI; };
    prior.exact_entropy = std::log(kHalfPi);
    prior.dirichlet_weights = Eigen::VectorXd::Constant(2, 0.5);
    return prior;
}

PriorDensity bloch_alpha_density() {
    PriorDensity prior;
    prior.dim = 2;
    prior.name = "bloch";
    prior.sample = [](Philox& rng) {
        const double p1 = rng.uniform();
        return gamma_from_alpha(std::acos(std::sqrt(p1)));
    };
    prior.log_density = [](const GammaVector& g) {
        const double k = 2.0 * g[0] * g[1];
        return k > 0.0 ? std::log(k) : -std::numeric_limits<double>::infinity();
    };
    prior.alpha_density = [](double alpha) { return 2.0 * std::cos(alpha) * std::sin(alpha); };
    prior.exact_entropy = 1.0 - std::log(2.0);
    prior.dirichlet_weights = Eigen::VectorXd::Constant(2, 1.0);
    return prior;
}

PriorDensity uniform_orthant_density(int d) {
    if (d < 1) throw std::invalid_argument("uniform_orthant_density: dimension must be >= 1");
    PriorDensity prior;
    prior.dim = d;
    prior.name = "orthant-uniform";
    const double log_k = std::log(k_opt(d));
    prior.sample = [d](Philox& rng) {
        const RealStateVector s = sample_real_sphere(d, rng);
        return GammaVector(s.components().cwiseAbs());
    };
    prior.log_density = [log_k](const GammaVector&) { return log_k; };
    if (d == 2) prior.alpha_density = [](double) { return 2.0 / M_PI; };
    prior.exact_entropy = -log_k;
    prior.dirichlet_weights = Eigen::VectorXd::Constant(d, 0.5);
    return prior;
}

PriorDensity alpha_prior_from_density(std::string name, std::function<double(double)> density) {
    // Normalize by quadrature.
    const GaussLegendreRule rule = composite_gauss_legendre(0.0, kHalfPi, 1024, 8);
    double z = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) z += rule.weights[i] * density(rule.nodes[i]);
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::invalid_argument("alpha_prior_from_density: density is not integrable");
    auto k = [density, z](double alpha) { return density(alpha) / z; };

    // Inverse-CDF table on a uniform grid for sampling.
    constexpr int kGrid = 16384;
    auto cdf = std::make_shared<std::vector<double>>(kGrid + 1, 0.0);
    const double h = kHalfPi / kGrid;
    for (int i = 1; i <= kGrid; ++i) {
        const double a = (i - 0.5) * h;
        (*cdf)[i] = (*cdf)[i - 1] + k(a) * h;
    }
    const double total = cdf->back();
    for (double& c : *cdf) c /= total;

    PriorDensity prior;
    prior.dim = 2;
    prior.name = std::move(name);
    prior.alpha_density = k;
    prior.log_density = [k](const GammaVector& g) {
        const double v = k(alpha_of(g));
        return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    };
    prior.sample = [cdf, h](Philox& rng) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf->begin(), cdf->end(), u);
        const int idx = std::clamp<int>(static_cast<int>(it - cdf->begin()), 1, static_cast<int>(cdf->size()) - 1);
        const double c0 = (*cdf)[idx - 1];
        const double c1 = (*cdf)[idx];
        const double frac = c1 > c0 ? (u - c0) / (c1 - c0) : 0.5;
        return gamma_from_alpha((idx - 1 + frac) * h);
    };
    prior.exact_entropy = entropy_by_quadrature(k);
    return prior;
}

PriorDensity bump_alpha_density(double center, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("bump_alpha_density: sigma must be positive");
    char label[64];
    std::snprintf(label, sizeof(label), "bump(%.3g,%.3g)", center, sigma);
    return alpha_prior_from_density(
        label, [center, sigma](double a) { return std::exp(-0.5 * (a - center) * (a - center) / (sigma * sigma)); });
}

PriorDensity ramp_alpha_density() {
    return alpha_prior_from_density("ramp", [](double a) { return a; });
}

namespace {

EntropyEstimate mc_mean(const std::vector<double>& values) {
    EntropyEstimate e;
    e.value = mean_of(values);
    e.std_error = jackknife_stderr(values);
    e.closed_form = false;
    return e;
}

}  // namespace

EntropyEstimate differential_entropy_mc(const PriorDensity& prior, std::int64_t samples, Philox& rng) {
    if (samples < 1000) throw std::invalid_argument("differential_entropy: need at least 1e3 samples");
    std::vector<double> values;
    values.reserve(samples);
    for (std::int64_t i = 0; i < samples; ++i) {
        const GammaVector g = prior.sample(rng);
        const double logk = prior.log_density(g);
        if (!std::isfinite(logk))
            throw std::runtime_error("differential_entropy: non-finite log-density at a sampled point; "
                                     "the prior violates the positivity condition");
        values.push_back(-logk);
    }
    return mc_mean(values);
}

EntropyEstimate differential_entropy(const PriorDensity& prior, std::int64_t samples, Philox& rng) {
    if (prior.exact_entropy) {
        EntropyEstimate e;
        e.value = *prior.exact_entropy;
        e.std_error = 0.0;
        e.closed_form = true;
        return e;
    }
    return differential_entropy_mc(prior, samples, rng);
}

EntropyEstimate normalization_check(const PriorDensity& prior, std::int64_t samples, Philox& rng) {
    if (samples < 1000) throw std::invalid_argument("normalization_check: need at least 1e3 samples");
    const PriorDensity reference = uniform_orthant_density(prior.dim);
    const double log_k_ref = std::log(k_opt(prior.dim));
    std::vector<double> weights;
    weights.reserve(samples);
    for (std::int64_t i = 0; i < samples; ++i) {
        const GammaVector g = reference.sample(rng);
        const double logk = prior.log_density(g);
        weights.push_back(std::isfinite(logk) ? std::exp(logk - log_k_ref) : 0.0);
    }
    return mc_mean(weights);
}

std::string InducedMeasureEstimate::to_csv() const {
    std::string out = "bin_low,bin_high,mass,density\n";
    const double width = kHalfPi / bins;
    char row[128];
    for (int b = 0; b < bins; ++b) {
        std::snprintf(row, sizeof(row), "%.9g,%.9g,%.9g,%.9g\n", b * width, (b + 1) * width, mass[b], density[b]);
        out += row;
    }
    return out;
}

InducedMeasureEstimate induced_alpha_density(const std::function<ProbabilityVector(double)>& rule,
                                             std::int64_t samples, Philox& rng) {
    const int bins = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples))));
    return induced_alpha_density(rule, samples, bins, rng);
}

InducedMeasureEstimate induced_alpha_density(const std::function<ProbabilityVector(double)>& rule,
                                             std::int64_t samples, int bins, Philox& rng) {
    if (samples < 10000) throw std::invalid_argument("induced_alpha_density: need at least 1e4 samples");
    if (bins < 2) throw std::invalid_argument("induced_alpha_density: need at least 2 bins");
    std::vector<std::int64_t> counts(bins, 0);
    const double width = kHalfPi / bins;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        const ProbabilityVector p = rule(theta);
        if (p.dim() != 2) throw std::invalid_argument("induced_alpha_density: rule must have two outcomes");
        const double alpha = std::acos(std::min(1.0, std::sqrt(p[0])));
        const int b = std::min(bins - 1, static_cast<int>(alpha / width));
        ++counts[b];
    }
    InducedMeasureEstimate est;
    est.bins = bins;
    est.samples = samples;
    est.mass.resize(bins);
    est.density.resize(bins);
    double plug_in = 0.0;
    for (int b = 0; b < bins; ++b) {
        const double m = static_cast<double>(counts[b]) / static_cast<double>(samples);
        est.mass[b] = m;
        est.density[b] = m / width;
        if (m > 0.0) plug_in -= m * std::log(m);
    }
    est.entropy = plug_in + std::log(width);
    return est;
}

namespace {

// Rosenblatt staircase: map p to (d-1) coordinates that are iid uniform
// under the Dirichlet(w,...,w) null, then read off a base-m cell index.
int staircase_cell(const ProbabilityVector& p, int per_axis, double w) {
    const int d = static_cast<int>(p.dim());
    if (d < 2) throw std::invalid_argument("cell index: dimension must be >= 2");
    if (per_axis < 1) throw std::invalid_argument("cell index: per_axis must be >= 1");
    double remaining = 1.0;
    int index = 0;
    int scale = 1;
    for (int k = 0; k < d - 1; ++k) {
        double u;
        if (remaining <= 0.0) {
            u = 1.0;
        } else {
            const double x = std::clamp(p[k] / remaining, 0.0, 1.0);
            const double tail = w * (d - k - 1);
            u = (w == 1.0) ? 1.0 - std::pow(1.0 - x, tail) : regularized_incomplete_beta(x, w, tail);
        }
        const int bin = std::min(per_axis - 1, static_cast<int>(u * per_axis));
        index += bin * scale;
        scale *= per_axis;
        remaining -= p[k];
    }
    return index;
}

}  // namespace

int flat_simplex_cell(const ProbabilityVector& p, int per_axis) { return staircase_cell(p, per_axis, 1.0); }

int orthant_cell(const ProbabilityVector& p, int per_axis) { return staircase_cell(p, per_axis, 0.5); }

SykoraReport sykora_test(int d, std::int64_t samples, int cells, Philox& rng) {
    if (d < 2) throw std::invalid_argument("sykora_test: dimension must be >= 2");
    if (samples < 10000) throw std::invalid_argument("sykora_test: need at least 1e4 samples");
    if (cells < 2) throw std::invalid_argument("sykora_test: need at least 2 cells");
    const int per_axis = std::max(2, static_cast<int>(std::lround(std::pow(static_cast<double>(cells), 1.0 / (d - 1)))));
    int total_cells = 1;
    for (int k = 0; k < d - 1; ++k) total_cells *= per_axis;

    std::vector<std::int64_t> cf(total_cells, 0), co(total_cells, 0), rf(total_cells, 0), ro(total_cells, 0);
    for (std::int64_t i = 0; i < samples; ++i) {
        const ProbabilityVector pc = born(sample_haar_state(d, rng));
        const ProbabilityVector pr = born(sample_real_sphere(d, rng));
        ++cf[flat_simplex_cell(pc, per_axis)];
        ++co[orthant_cell(pc, per_axis)];
        ++rf[flat_simplex_cell(pr, per_axis)];
        ++ro[orthant_cell(pr, per_axis)];
    }

    SykoraReport report;
    report.dim = d;
    report.samples = samples;
    report.cells = total_cells;
    report.complex_flat = chi_square_uniform(cf);
    report.complex_orthant = chi_square_uniform(co);
    report.real_flat = chi_square_uniform(rf);
    report.real_orthant = chi_square_uniform(ro);
    return report;
}

double bhattacharyya_angle(const ProbabilityVector& p, const ProbabilityVector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("bhattacharyya_angle: dimension mismatch");
    const double overlap = (p.entries().cwiseProduct(q.entries())).cwiseSqrt().sum();
    return std::acos(std::clamp(overlap, 0.0, 1.0));
}

}  // namespace redit

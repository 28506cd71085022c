// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

// Command-line front end: every report the library produces as a CSV/JSON
// table or a static SVG plot.  Exit codes: 0 success, 1 numerical failure,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redit/dynamics.hpp"
#include "redit/inference.hpp"
#include "redit/io.hpp"
#include "redit/measures.hpp"
#include "redit/rng.hpp"
#include "redit/scenarios.hpp"
#include "redit/statespace.hpp"

using json = nlohmann::ordered_json;
using namespace redit;

namespace {

struct RunConfig {
    std::string command;
    int d = 2;
    std::uint64_t seed = 0;
    std::int64_t samples = 100000;
    std::vector<std::int64_t> schedule = {64, 256, 1024, 4096};
    int bins = 32;
    int cells = 64;
    std::string prior;
    std::string rule = "m2";
    std::string out;
    std::string format;

    std::string hash() const {
        std::string canon = command + "|d=" + std::to_string(d) + "|seed=" + std::to_string(seed) +
                            "|samples=" + std::to_string(samples) + "|schedule=";
        for (const auto n : schedule) canon += std::to_string(n) + ",";
        canon += "|bins=" + std::to_string(bins) + "|cells=" + std::to_string(cells) + "|prior=" + prior +
                 "|rule=" + rule + "|format=" + format;
        return io::hex64(io::fnv1a64(canon));
    }
};

void validate(const RunConfig& cfg) {
    if (cfg.d < 1) throw std::invalid_argument("--d must be >= 1");
    if (cfg.samples < 1) throw std::invalid_argument("--samples must be positive");
    if (cfg.bins < 2) throw std::invalid_argument("--bins must be >= 2");
    if (cfg.cells < 2) throw std::invalid_argument("--cells must be >= 2");
    if (cfg.schedule.empty()) throw std::invalid_argument("--schedule must not be empty");
    for (std::size_t i = 0; i + 1 < cfg.schedule.size(); ++i) {
        if (cfg.schedule[i + 1] <= cfg.schedule[i])
            throw std::invalid_argument("--schedule must be strictly increasing");
    }
    for (const auto n : cfg.schedule) {
        if (n < 1) throw std::invalid_argument("--schedule entries must be positive");
    }
    if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json" && cfg.format != "svg")
        throw std::invalid_argument("--format must be csv, json or svg");
}

PriorDensity prior_by_name(const std::string& name, int d) {
    if (name == "uniform") return uniform_alpha_density();
    if (name == "bloch") return bloch_alpha_density();
    if (name == "bump") return bump_alpha_density();
    if (name == "ramp") return ramp_alpha_density();
    if (name == "orthant") return uniform_orthant_density(d);
    throw std::invalid_argument("unknown prior '" + name + "' (use uniform|bloch|bump|ramp|orthant)");
}

json meta_object(const RunConfig& cfg) {
    json meta;
    meta["version"] = kVersion;
    meta["command"] = cfg.command;
    meta["seed"] = cfg.seed;
    meta["config"] = cfg.hash();
    return meta;
}

json envelope(const RunConfig& cfg, json data) {
    json report;
    report["meta"] = meta_object(cfg);
    report["data"] = std::move(data);
    return report;
}

void emit(const RunConfig& cfg, const std::string& content, const std::string& suffix = "") {
    if (cfg.out.empty()) {
        std::cout << content;
    } else {
        io::write_text_file(suffix.empty() ? cfg.out : cfg.out + suffix, content);
    }
}

json chi_square_json(const ChiSquareResult& r) {
    json j;
    j["statistic"] = r.statistic;
    j["dof"] = r.dof;
    j["p_value"] = r.p_value;
    j["critical_99"] = r.critical_99;
    j["pass_at_1pct"] = r.pass_at_1pct;
    return j;
}

json estimate_json(const MutualInfoEstimate& est) {
    json j;
    j["value"] = est.value;
    j["stderr"] = est.std_error;
    j["n"] = est.trials;
    j["method"] = est.method;
    return j;
}

// entropy: one row per prior with the Monte Carlo estimate and the exact
// value where available.
int cmd_entropy(const RunConfig& cfg) {
    std::vector<PriorDensity> priors;
    if (!cfg.prior.empty()) {
        priors.push_back(prior_by_name(cfg.prior, cfg.d));
    } else if (cfg.d == 2) {
        priors.push_back(uniform_alpha_density());
        priors.push_back(bloch_alpha_density());
        priors.push_back(bump_alpha_density());
        priors.push_back(ramp_alpha_density());
    } else {
        priors.push_back(uniform_orthant_density(cfg.d));
    }

    struct Row {
        std::string name;
        EntropyEstimate mc;
        std::optional<double> exact;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < priors.size(); ++i) {
        Philox rng(substream(RngSeed{cfg.seed, 0}, i));
        rows.push_back({priors[i].name, differential_entropy_mc(priors[i], cfg.samples, rng),
                        priors[i].exact_entropy});
    }

    if (cfg.format == "json") {
        json data;
        data["samples"] = cfg.samples;
        data["rows"] = json::array();
        for (const Row& r : rows) {
            json row;
            row["prior"] = r.name;
            row["entropy"] = r.mc.value;
            row["stderr"] = r.mc.std_error;
            if (r.exact) row["closed_form"] = *r.exact;
            data["rows"].push_back(row);
        }
        emit(cfg, envelope(cfg, data).dump(2) + "\n");
        return 0;
    }
    std::string csv = io::csv_meta_line(cfg.seed, cfg.hash());
    csv += "prior,entropy,stderr,closed_form\n";
    for (const Row& r : rows) {
        csv += r.name + "," + io::format_sig(r.mc.value) + "," + io::format_sig(r.mc.std_error) + "," +
               (r.exact ? io::format_sig(*r.exact) : std::string()) + "\n";
    }
    emit(cfg, csv);
    return 0;
}

// sweep: I and I - ((d-1)/2) ln N along the schedule, with the closed-form
// asymptote drawn on the plot.
int cmd_sweep(const RunConfig& cfg) {
    if (cfg.schedule.size() < 3) throw std::invalid_argument("--schedule needs at least 3 points");
    const std::string prior_name = cfg.prior.empty() ? "uniform" : cfg.prior;
    const PriorDensity prior = prior_by_name(prior_name, cfg.d);
    Philox rng(cfg.seed, 0);
    const MiEstimator estimator =
        prior.dim == 2 && prior.alpha_density ? MiEstimator::kExactQuadrature : MiEstimator::kNestedMc;
    NestedMcOptions options;
    options.outer = std::max<std::int64_t>(1000, cfg.samples / 10);
    options.inner = 1000;
    const ItildeResult result = i_tilde_empirical(prior, cfg.schedule, estimator, rng, options);
    const double asymptote =
        prior.exact_entropy ? i_tilde_closed_form(prior) : std::numeric_limits<double>::quiet_NaN();

    if (cfg.format == "svg") {
        io::Series line{"I - ((d-1)/2) ln N", {}};
        for (const auto& [n, v] : result.per_n) line.points.push_back({std::log2(static_cast<double>(n)), v});
        const std::vector<double> guides =
            std::isnan(asymptote) ? std::vector<double>{} : std::vector<double>{asymptote};
        emit(cfg, io::svg_line_plot("information limit, prior " + prior_name, "log2 N", "I - ((d-1)/2) ln N",
                                    {line}, guides));
        return 0;
    }
    if (cfg.format == "json") {
        json data;
        data["prior"] = prior_name;
        data["itilde"] = result.itilde;
        data["converged"] = result.converged;
        if (!std::isnan(asymptote)) data["closed_form"] = asymptote;
        data["points"] = json::array();
        for (std::size_t i = 0; i < result.estimates.size(); ++i) {
            json pt = estimate_json(result.estimates[i]);
            pt["subtracted"] = result.per_n[i].second;
            data["points"].push_back(pt);
        }
        emit(cfg, envelope(cfg, data).dump(2) + "\n");
        return 0;
    }
    std::string csv = io::csv_meta_line(cfg.seed, cfg.hash());
    csv += "n,info,subtracted,stderr,method\n";
    for (std::size_t i = 0; i < result.estimates.size(); ++i) {
        const MutualInfoEstimate& est = result.estimates[i];
        csv += std::to_string(est.trials) + "," + io::format_sig(est.value) + "," +
               io::format_sig(result.per_n[i].second) + "," + io::format_sig(est.std_error) + "," + est.method +
               "\n";
    }
    emit(cfg, csv);
    return 0;
}

int cmd_induced(const RunConfig& cfg) {
    Philox rng(cfg.seed, 0);
    std::function<ProbabilityVector(double)> rule;
    if (cfg.rule == "m2") {
        rule = [](double theta) { return polarization_rule(PreparationAngle(theta, 2)); };
    } else if (cfg.rule == "m1") {
        rule = [](double theta) { return polarization_rule(PreparationAngle(theta, 1)); };
    } else if (cfg.rule == "bloch") {
        auto beta_rng = std::make_shared<Philox>(cfg.seed, 1);
        rule = [beta_rng](double) {
            return bloch_rule(BlochPoint(std::acos(beta_rng->uniform(-1.0, 1.0)), 0.0));
        };
    } else {
        throw std::invalid_argument("unknown rule '" + cfg.rule + "' (use m2|m1|bloch)");
    }
    const InducedMeasureEstimate est = induced_alpha_density(rule, cfg.samples, cfg.bins, rng);

    if (cfg.format == "json") {
        json data;
        data["rule"] = cfg.rule;
        data["bins"] = est.bins;
        data["samples"] = est.samples;
        data["entropy"] = est.entropy;
        data["mass"] = std::vector<double>(est.mass.data(), est.mass.data() + est.mass.size());
        emit(cfg, envelope(cfg, data).dump(2) + "\n");
        return 0;
    }
    if (cfg.format == "svg") {
        io::Series density{"density", {}};
        const double width = M_PI / 2.0 / est.bins;
        for (int b = 0; b < est.bins; ++b) density.points.push_back({(b + 0.5) * width, est.density[b]});
        emit(cfg, io::svg_line_plot("measure induced on alpha, rule " + cfg.rule, "alpha", "density", {density}));
        return 0;
    }
    emit(cfg, io::csv_meta_line(cfg.seed, cfg.hash()) + est.to_csv());
    return 0;
}

int cmd_sykora(const RunConfig& cfg) {
    if (cfg.d < 2) throw std::invalid_argument("sykora needs --d >= 2");
    Philox rng(cfg.seed, 0);
    const SykoraReport report = sykora_test(cfg.d, cfg.samples, cfg.cells, rng);
    json data;
    data["d"] = report.dim;
    data["samples"] = report.samples;
    data["cells"] = report.cells;
    data["complex_flat"] = chi_square_json(report.complex_flat);
    data["complex_orthant"] = chi_square_json(report.complex_orthant);
    data["real_flat"] = chi_square_json(report.real_flat);
    data["real_orthant"] = chi_square_json(report.real_orthant);
    emit(cfg, envelope(cfg, data).dump(2) + "\n");
    return 0;
}

int cmd_su2(const RunConfig& cfg) {
    Philox rng(cfg.seed, 0);
    if (cfg.format == "csv") {
        // Per-sample dump: the four outcome probabilities of each Haar draw.
        std::string csv = io::csv_meta_line(cfg.seed, cfg.hash());
        csv += "p_phi_plus,p_phi_minus,p_psi_plus,p_psi_minus\n";
        for (std::int64_t i = 0; i < cfg.samples; ++i) {
            const ProbabilityVector p = su2_bell_probs(sample_su(2, rng)).direct;
            csv += io::format_sig(p[0]) + std::string(",") + io::format_sig(p[1]) + "," + io::format_sig(p[2]) +
                   "," + io::format_sig(p[3]) + "\n";
        }
        emit(cfg, csv);
        return 0;
    }
    const Su2OptimalityReport report = su2_optimality_check(cfg.samples, rng);
    json data;
    data["samples"] = report.samples;
    data["cells"] = report.cells;
    data["orthant_uniformity"] = chi_square_json(report.orthant_uniformity);
    data["mean_squared_components"] = {report.mean_squared_components[0], report.mean_squared_components[1],
                                       report.mean_squared_components[2], report.mean_squared_components[3]};
    data["max_direct_closed_mismatch"] = report.max_direct_closed_mismatch;
    data["max_vu_mismatch"] = report.max_vu_mismatch;
    emit(cfg, envelope(cfg, data).dump(2) + "\n");
    return 0;
}

int cmd_su3(const RunConfig& cfg) {
    Philox rng(cfg.seed, 0);
    if (cfg.format == "csv") {
        std::string csv = io::csv_meta_line(cfg.seed, cfg.hash());
        csv += "p2,p3,product\n";
        for (std::int64_t i = 0; i < cfg.samples; ++i) {
            const auto [p2, p3] = su3_p2_p3(sample_su(3, rng));
            csv += io::format_sig(p2) + std::string(",") + io::format_sig(p3) + "," + io::format_sig(p2 * p3) + "\n";
        }
        emit(cfg, csv);
        return 0;
    }
    const Su3BoundReport report = su3_product_bound(cfg.samples, rng);
    const double grid_max = footnote_grid_max(401, {1.0, 0.999, 0.99, 0.9, 0.5, 0.0});
    json data;
    data["samples"] = report.samples;
    data["bound"] = report.bound;
    data["max_product"] = std::max(report.max_product_sampled, report.attained_by_search);
    data["max_product_sampled"] = report.max_product_sampled;
    data["attained"] = report.attained_by_search;
    data["bound_ok"] = report.bound_ok;
    data["attained_ok"] = report.attained_ok;
    json footnote;
    footnote["grid_max"] = grid_max;
    footnote["bound_ok"] = grid_max <= 4.0 + 1e-12;
    data["footnote"] = footnote;
    emit(cfg, envelope(cfg, data).dump(2) + "\n");
    return 0;
}

int cmd_sic(const RunConfig& cfg) {
    if (cfg.d != 2 && cfg.d != 3) throw std::invalid_argument("sic needs --d 2 or --d 3");
    Philox rng(cfg.seed, 0);
    const SicFrame frame(cfg.d);
    if (cfg.format == "csv") {
        std::string csv = io::csv_meta_line(cfg.seed, cfg.hash());
        csv += "max_prob,min_prob\n";
        for (std::int64_t i = 0; i < cfg.samples; ++i) {
            const ProbabilityVector p = sic_probs(sample_haar_state(cfg.d, rng), frame);
            csv += io::format_sig(p.entries().maxCoeff()) + std::string(",") + io::format_sig(p.entries().minCoeff()) +
                   "\n";
        }
        emit(cfg, csv);
        return 0;
    }
    const int count = cfg.d * cfg.d;
    double max_overlap_deviation = 0.0;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const double overlap = std::norm(frame.vectors().col(i).dot(frame.vectors().col(j)));
            max_overlap_deviation = std::max(max_overlap_deviation, std::fabs(overlap - 1.0 / (cfg.d + 1.0)));
        }
    }
    double max_prob = 0.0;
    for (std::int64_t i = 0; i < cfg.samples; ++i) {
        max_prob = std::max(max_prob, sic_probs(sample_haar_state(cfg.d, rng), frame).entries().maxCoeff());
    }
    double reconstruct_error = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ComplexStateVector s = sample_haar_state(cfg.d, rng);
        const Eigen::MatrixXcd rho = sic_reconstruct(sic_probs(s, frame), frame);
        reconstruct_error =
            std::max(reconstruct_error, (rho - s.components() * s.components().adjoint()).cwiseAbs().maxCoeff());
    }
    const SicInaccessibilityReport inaccessible = sic_inaccessibility_report(cfg.d, cfg.samples, rng);

    json data;
    data["d"] = cfg.d;
    data["samples"] = cfg.samples;
    data["max_overlap_deviation"] = max_overlap_deviation;
    data["max_prob"] = max_prob;
    data["prob_bound"] = 1.0 / cfg.d;
    data["reconstruct_max_error"] = reconstruct_error;
    json cell;
    cell["threshold"] = inaccessible.threshold;
    cell["forbidden_mass"] = inaccessible.forbidden_mass;
    cell["stderr"] = inaccessible.forbidden_mass_stderr;
    cell["sic_hits"] = inaccessible.sic_hits;
    data["forbidden_cell"] = cell;
    emit(cfg, envelope(cfg, data).dump(2) + "\n");
    return 0;
}

int cmd_dynamics(const RunConfig& cfg) {
    Philox rng(cfg.seed, 0);
    const RotationOnlyReport rotation = rotation_only_check(std::max<std::int64_t>(100, cfg.samples), rng);
    const ReflectionConstruction rc = reflection_via_ancilla();
    const double generator_error =
        (evolve(rc.generator, M_PI).matrix() - rc.composite.matrix()).cwiseAbs().maxCoeff();
    double action_error = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * M_PI), psi = rng.uniform(0.0, 2.0 * M_PI);
        const Eigen::Vector2d s(std::cos(phi), std::sin(phi));
        const Eigen::Vector2d a(std::cos(psi), std::sin(psi));
        Eigen::Vector4d in, out;
        in << s[0] * a[0], s[0] * a[1], s[1] * a[0], s[1] * a[1];
        const Eigen::Vector2d rs = rc.reflection * s;
        out << rs[0] * a[0], rs[0] * a[1], rs[1] * a[0], rs[1] * a[1];
        action_error = std::max(action_error, (rc.composite.matrix() * in - out).cwiseAbs().maxCoeff());
    }
    json data;
    data["samples"] = rotation.samples;
    data["max_det_deviation"] = rotation.max_det_deviation;
    data["min_distance_to_reflection"] = rotation.min_distance_to_reflection;
    data["composite_det_sign"] = rc.composite.det_sign();
    data["reflection_det"] = rc.reflection.determinant();
    data["generator_reproduces_composite_error"] = generator_error;
    data["product_action_error"] = action_error;
    emit(cfg, envelope(cfg, data).dump(2) + "\n");
    return 0;
}

// figures: the data behind the four illustrative plots, as CSV + SVG pairs
// written under the --out prefix.
int cmd_figures(const RunConfig& cfg) {
    RunConfig base = cfg;
    if (base.out.empty()) base.out = "figures";
    const std::string meta = io::csv_meta_line(cfg.seed, cfg.hash());

    // Figure 1: the alpha parameterization of the binary probability space.
    {
        std::string csv = meta + "alpha,p1,gamma1,gamma2\n";
        io::Series curve{"gamma circle", {}};
        for (int i = 0; i <= 200; ++i) {
            const double alpha = i * (M_PI / 2.0) / 200.0;
            const double c = std::cos(alpha), s = std::sin(alpha);
            csv += io::format_sig(alpha) + std::string(",") + io::format_sig(c * c) + "," + io::format_sig(c) +
                   "," + io::format_sig(s) + "\n";
            curve.points.push_back({c, s});
        }
        io::write_text_file(base.out + "_fig1.csv", csv);
        io::write_text_file(base.out + "_fig1.svg", io::svg_polylines("alpha parameterization", {curve}));
    }

    // Figure 2: the slope of cos^2 compensates the frequency spread.
    {
        std::string csv = meta + "theta,p,slope,two_sqrt_pq\n";
        io::Series p_curve{"p(theta)", {}};
        io::Series slope_curve{"|dp/dtheta|", {}};
        for (int i = 0; i <= 400; ++i) {
            const double theta = i * M_PI / 400.0;
            const SlopeCompensation s = slope_compensation(theta);
            const double p = std::cos(theta) * std::cos(theta);
            csv += io::format_sig(theta) + std::string(",") + io::format_sig(p) + "," +
                   io::format_sig(s.rule_slope) + "," + io::format_sig(s.two_sqrt_pq) + "\n";
            p_curve.points.push_back({theta, p});
            slope_curve.points.push_back({theta, s.rule_slope});
        }
        io::write_text_file(base.out + "_fig2.csv", csv);
        io::write_text_file(base.out + "_fig2.svg",
                            io::svg_line_plot("slope compensation", "theta", "", {p_curve, slope_curve}));
    }

    // Isometric 2D coordinates of the plane x1 + x2 + x3 = const.
    const auto plane_xy = [](const Eigen::Vector3d& p) {
        return std::pair<double, double>((p[1] - p[0]) / std::sqrt(2.0),
                                         (2.0 * p[2] - p[0] - p[1]) / std::sqrt(6.0));
    };
    const std::vector<Eigen::Vector3d> centers = {
        {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.7, 0.2, 0.1}, {0.1, 0.8, 0.1}, {0.15, 0.15, 0.7}, {0.45, 0.45, 0.1}};
    const std::int64_t trials = 200;

    // Figure 3: flat-simplex regions of uncertainty (d = 3).
    {
        std::string csv = meta + "region,x,y\n";
        std::vector<io::Series> series;
        io::Series triangle{"simplex", {}};
        const Eigen::Vector3d corners[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
        for (const auto& c : corners) triangle.points.push_back(plane_xy(c));
        series.push_back(triangle);
        int region_id = 0;
        for (const Eigen::Vector3d& center : centers) {
            const UncertaintyRegion region =
                region_of_uncertainty(ProbabilityVector(center), trials, UncertaintyCoordinates::kFlat);
            io::Series ellipse{"region" + std::to_string(region_id), {}};
            for (int i = 0; i <= 96; ++i) {
                const double phi = 2.0 * M_PI * i / 96.0;
                const Eigen::Vector3d point = region.center +
                                              std::cos(phi) * region.radii[0] * region.axes.col(0) +
                                              std::sin(phi) * region.radii[1] * region.axes.col(1);
                const auto [x, y] = plane_xy(point);
                csv += std::to_string(region_id) + "," + io::format_sig(x) + "," + io::format_sig(y) + "\n";
                ellipse.points.push_back({x, y});
            }
            series.push_back(ellipse);
            ++region_id;
        }
        io::write_text_file(base.out + "_fig3.csv", csv);
        io::write_text_file(base.out + "_fig3.svg", io::svg_polylines("flat regions of uncertainty", series));
    }

    // Figure 4: spherical regions on the gamma orthant (d = 3).
    {
        std::string csv = meta + "region,x,y\n";
        std::vector<io::Series> series;
        for (int axis = 0; axis < 3; ++axis) {
            io::Series arc{"arc" + std::to_string(axis), {}};
            for (int i = 0; i <= 90; ++i) {
                const double t = i * (M_PI / 2.0) / 90.0;
                Eigen::Vector3d g = Eigen::Vector3d::Zero();
                g[(axis + 1) % 3] = std::cos(t);
                g[(axis + 2) % 3] = std::sin(t);
                arc.points.push_back(plane_xy(g));
            }
            series.push_back(arc);
        }
        int region_id = 0;
        for (const Eigen::Vector3d& center : centers) {
            const UncertaintyRegion region =
                region_of_uncertainty(ProbabilityVector(center), trials, UncertaintyCoordinates::kSpherical);
            io::Series circle{"region" + std::to_string(region_id), {}};
            for (int i = 0; i <= 96; ++i) {
                const double phi = 2.0 * M_PI * i / 96.0;
                const Eigen::Vector3d point = region.center +
                                              std::cos(phi) * region.radii[0] * region.axes.col(0) +
                                              std::sin(phi) * region.radii[1] * region.axes.col(1);
                const auto [x, y] = plane_xy(point);
                csv += std::to_string(region_id) + "," + io::format_sig(x) + "," + io::format_sig(y) + "\n";
                circle.points.push_back({x, y});
            }
            series.push_back(circle);
            ++region_id;
        }
        io::write_text_file(base.out + "_fig4.csv", csv);
        io::write_text_file(base.out + "_fig4.svg", io::svg_polylines("spherical regions of uncertainty", series));
    }
    return 0;
}

void apply_config_file(const std::string& path, RunConfig& cfg, const CLI::App& cmd) {
    std::string text;
    try {
        text = io::read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
    const json file = json::parse(text);
    const auto given = [&cmd](const std::string& flag) {
        const CLI::Option* opt = cmd.get_option_no_throw("--" + flag);
        return opt != nullptr && opt->count() > 0;
    };
    if (file.contains("d") && !given("d")) cfg.d = file["d"].get<int>();
    if (file.contains("seed") && !given("seed")) cfg.seed = file["seed"].get<std::uint64_t>();
    if (file.contains("samples") && !given("samples")) cfg.samples = file["samples"].get<std::int64_t>();
    if (file.contains("schedule") && !given("schedule"))
        cfg.schedule = file["schedule"].get<std::vector<std::int64_t>>();
    if (file.contains("bins") && !given("bins")) cfg.bins = file["bins"].get<int>();
    if (file.contains("cells") && !given("cells")) cfg.cells = file["cells"].get<int>();
    if (file.contains("prior") && !given("prior")) cfg.prior = file["prior"].get<std::string>();
    if (file.contains("rule") && !given("rule")) cfg.rule = file["rule"].get<std::string>();
    if (file.contains("out") && !given("out")) cfg.out = file["out"].get<std::string>();
    if (file.contains("format") && !given("format")) cfg.format = file["format"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string config_path;

    CLI::App app{"redit: information transfer in real-vector-space quantum models"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"entropy", "sweep", "induced",  "sykora",  "su2",
                                               "su3",     "sic",   "dynamics", "figures"};
    std::vector<CLI::App*> subs;
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--d", cfg.d, "dimension");
        sub->add_option("--seed", cfg.seed, "rng seed");
        sub->add_option("--samples", cfg.samples, "sample count");
        sub->add_option("--schedule", cfg.schedule, "trial schedule a,b,c")->delimiter(',');
        sub->add_option("--bins", cfg.bins, "histogram bins");
        sub->add_option("--cells", cfg.cells, "uniformity test cells");
        sub->add_option("--prior", cfg.prior, "prior name (uniform|bloch|bump|ramp|orthant)");
        sub->add_option("--rule", cfg.rule, "induced rule (m2|m1|bloch)");
        sub->add_option("--out", cfg.out, "output path (figures: path prefix)");
        sub->add_option("--format", cfg.format, "output format csv|json|svg");
        sub->add_option("--config", config_path, "JSON config file; flags override");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    CLI::App* active = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            active = subs[i];
            cfg.command = commands[i];
        }
    }
    if (active == nullptr) {
        std::cerr << "a subcommand is required\n";
        return 2;
    }

    try {
        if (!config_path.empty()) apply_config_file(config_path, cfg, *active);
        validate(cfg);
        if (cfg.command == "entropy") return cmd_entropy(cfg);
        if (cfg.command == "sweep") return cmd_sweep(cfg);
        if (cfg.command == "induced") return cmd_induced(cfg);
        if (cfg.command == "sykora") return cmd_sykora(cfg);
        if (cfg.command == "su2") return cmd_su2(cfg);
        if (cfg.command == "su3") return cmd_su3(cfg);
        if (cfg.command == "sic") return cmd_sic(cfg);
        if (cfg.command == "dynamics") return cmd_dynamics(cfg);
        return cmd_figures(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}

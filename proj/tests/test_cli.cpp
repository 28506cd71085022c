// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "cli_harness.hpp"

using cli_harness::run;
using cli_harness::slurp;
using json = nlohmann::json;

namespace {

json schema() { return json::parse(slurp(REDIT_SCHEMA_PATH)); }

}  // namespace

TEST_CASE("entropy table lists the built-in priors with their closed forms") {
    const auto r = run("entropy --samples 20000 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("# redit", 0) == 0);
    CHECK(r.out.find("prior,entropy,stderr,closed_form") != std::string::npos);
    CHECK(r.out.find("uniform,") != std::string::npos);
    CHECK(r.out.find("bloch,") != std::string::npos);
    CHECK(r.out.find("0.451583") != std::string::npos);  // ln(pi/2)
    CHECK(r.out.find("0.306853") != std::string::npos);  // 1 - ln 2
    CHECK(r.out.find("seed=3") != std::string::npos);
}

TEST_CASE("entropy for the d=4 orthant prior reports -ln k_opt(4)") {
    const auto r = run("entropy --d 4 --prior orthant --samples 20000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("orthant-uniform,") != std::string::npos);
    CHECK(r.out.find("0.210018") != std::string::npos);  // ln(pi^2/8)
}

TEST_CASE("bad prior and bad command are usage errors") {
    CHECK(run("entropy --prior nonsense").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("sweep --schedule 64").exit_code == 2);
    CHECK(run("sweep --schedule 64,32,128").exit_code == 2);
    CHECK(run("induced --rule bogus").exit_code == 2);
    CHECK(run("sic --d 5").exit_code == 2);
    CHECK(run("entropy --format yaml").exit_code == 2);
}

TEST_CASE("sweep json validates against the shipped schema") {
    const auto r = run("sweep --schedule 16,64,256 --prior uniform --format json --seed 4");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    std::string why;
    CHECK(cli_harness::validates(report, schema(), &why));
    INFO(why);
    CHECK(cli_harness::validates(report["data"], schema()["definitions"]["sweep_data"], &why));
    for (const auto& point : report["data"]["points"]) {
        CHECK(cli_harness::validates(point, schema()["definitions"]["estimate"], &why));
        CHECK(point["method"] == "exact-quadrature");
    }
    CHECK(report["data"]["closed_form"].get<double>() == doctest::Approx(-0.274209).epsilon(1e-5));
    CHECK(report["data"]["converged"].get<bool>());
    CHECK(report["meta"]["command"] == "sweep");
}

TEST_CASE("sweep on the default schedule lands on the closed form") {
    const auto r = run("sweep --format json --seed 13");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(std::fabs(report["data"]["itilde"].get<double>() - (-0.2742)) < 0.02);
    CHECK(report["data"]["points"].size() == 4);  // 64, 256, 1024, 4096
}

TEST_CASE("sweep svg plot") {
    const auto r = run("sweep --schedule 16,64,256 --format svg");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("polyline") != std::string::npos);
}

TEST_CASE("sykora report shows the pass/fail pattern") {
    const auto r = run("sykora --d 3 --samples 20000 --cells 64 --format json --seed 61");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    std::string why;
    CHECK(cli_harness::validates(report["data"], schema()["definitions"]["sykora_data"], &why));
    CHECK(report["data"]["complex_flat"]["pass_at_1pct"].get<bool>());
    CHECK_FALSE(report["data"]["complex_orthant"]["pass_at_1pct"].get<bool>());
    CHECK(report["data"]["real_orthant"]["pass_at_1pct"].get<bool>());
    CHECK_FALSE(report["data"]["real_flat"]["pass_at_1pct"].get<bool>());
}

TEST_CASE("su3 report keys and bounds") {
    const auto r = run("su3 --samples 10000 --seed 5");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    std::string why;
    CHECK(cli_harness::validates(report["data"], schema()["definitions"]["su3_data"], &why));
    CHECK(report["data"]["max_product"].get<double>() <= 16.0 / 81.0 + 1e-12);
    CHECK(report["data"]["attained"].get<double>() >= 16.0 / 81.0 - 1e-6);
    CHECK(report["data"]["footnote"]["bound_ok"].get<bool>());
}

TEST_CASE("sic report max probability stays below 1/d") {
    const auto r = run("sic --d 2 --samples 20000 --seed 6");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    std::string why;
    CHECK(cli_harness::validates(report["data"], schema()["definitions"]["sic_data"], &why));
    CHECK(report["data"]["max_prob"].get<double>() <= 0.5 + 1e-12);
    CHECK(report["data"]["forbidden_cell"]["sic_hits"].get<long long>() == 0);
    CHECK(report["data"]["forbidden_cell"]["forbidden_mass"].get<double>() > 0.0);
}

TEST_CASE("dynamics report") {
    const auto r = run("dynamics --samples 300 --seed 7");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    std::string why;
    CHECK(cli_harness::validates(report["data"], schema()["definitions"]["dynamics_data"], &why));
    CHECK(report["data"]["max_det_deviation"].get<double>() < 1e-12);
    CHECK(report["data"]["min_distance_to_reflection"].get<double>() >= 1.41);
    CHECK(report["data"]["composite_det_sign"].get<int>() == 1);
    CHECK(report["data"]["reflection_det"].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("scenario sample dumps behind the csv flag") {
    const auto su2 = run("su2 --samples 50 --format csv --seed 21");
    CHECK(su2.exit_code == 0);
    CHECK(su2.out.find("p_phi_plus,p_phi_minus,p_psi_plus,p_psi_minus") != std::string::npos);
    CHECK(std::count(su2.out.begin(), su2.out.end(), '\n') == 52);
    const auto su3 = run("su3 --samples 50 --format csv --seed 22");
    CHECK(su3.exit_code == 0);
    CHECK(su3.out.find("p2,p3,product") != std::string::npos);
    const auto sic = run("sic --d 3 --samples 50 --format csv --seed 23");
    CHECK(sic.exit_code == 0);
    CHECK(sic.out.find("max_prob,min_prob") != std::string::npos);
}

TEST_CASE("induced csv and svg") {
    const auto csv = run("induced --rule m1 --samples 20000 --bins 8 --seed 8");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("bin_low,bin_high,mass,density") != std::string::npos);
    const auto svg = run("induced --rule bloch --samples 20000 --bins 8 --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("figures writes csv and svg pairs") {
    const std::string prefix = "/tmp/redit_figs";
    const auto r = run("figures --out " + prefix);
    CHECK(r.exit_code == 0);
    for (const std::string fig : {"_fig1", "_fig2", "_fig3", "_fig4"}) {
        const std::string csv = slurp(prefix + fig + ".csv");
        const std::string svg = slurp(prefix + fig + ".svg");
        CHECK(csv.rfind("# redit", 0) == 0);
        CHECK(svg.rfind("<svg", 0) == 0);
        std::remove((prefix + fig + ".csv").c_str());
        std::remove((prefix + fig + ".svg").c_str());
    }
}

TEST_CASE("identical config reruns are byte-identical") {
    const std::string args = "entropy --samples 20000 --seed 11";
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    const std::string sweep_args = "sweep --schedule 16,64,256 --format json --seed 12";
    CHECK(run(sweep_args).out == run(sweep_args).out);
}

TEST_CASE("config file applies and flags override it") {
    const std::string path = "/tmp/redit_cfg_test.json";
    {
        std::ofstream out(path);
        out << "{\"seed\": 5, \"samples\": 20000, \"format\": \"json\"}\n";
    }
    const auto from_file = run("entropy --config " + path);
    REQUIRE(from_file.exit_code == 0);
    CHECK(json::parse(from_file.out)["meta"]["seed"].get<std::uint64_t>() == 5);
    const auto overridden = run("entropy --config " + path + " --seed 9");
    REQUIRE(overridden.exit_code == 0);
    CHECK(json::parse(overridden.out)["meta"]["seed"].get<std::uint64_t>() == 9);
    std::remove(path.c_str());

    CHECK(run("entropy --config /tmp/no_such_config_file.json").exit_code == 2);
}

// SPDX-License-Identifier: Apache-2.0
//
// mimo-adhoc: outage and transmission capacity of MIMO-MMSE ad hoc networks
// Copyright (C) 2026 The mimo-adhoc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mimo_adhoc/cli.hpp"
#include "mimo_adhoc/presets.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mimo_adhoc;
using doctest::Approx;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "mimo-adhoc");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

std::vector<double> fields(const std::string& line)
{
    std::vector<double> out;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');)
        out.push_back(std::stod(f));
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("outage curve defaults")
{
    const auto r = run({"outage-curve", "--no-mc"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2 + 36);
    CHECK(l[0].rfind("# mimo-adhoc ", 0) == 0);
    CHECK(l[0].find("alpha=4.5999999999999996") != std::string::npos);
    CHECK(l[0].find("gamma=100 ") != std::string::npos);
    CHECK(l[1] == "lambda,n_t,analytic_outage");
    const auto first = fields(l[2]);
    CHECK(first[0] == 0.01);
    CHECK(first[1] == 1.0);
    const auto last = fields(l.back());
    CHECK(last[0] == 2.0);
    CHECK(last[1] == 4.0);
    CHECK(last[2] == Approx(outage_probability(presets::outage_link(4), {0.5, 4.6})).epsilon(1e-15));
}

TEST_CASE("transmitter density mode")
{
    const auto r = run({"outage-curve", "--no-mc", "--no-per-stream-density", "--nt", "2", "--points", "1",
                        "--sweep-min", "0.2", "--sweep-max", "0.2"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(fields(l[2])[2] == Approx(outage_probability(presets::outage_link(2), {0.2, 4.6})).epsilon(1e-15));
}

TEST_CASE("values use seventeen significant digits")
{
    const auto r = run({"outage-curve", "--no-mc", "--nt", "1", "--points", "1", "--sweep-min", "0.3",
                        "--sweep-max", "0.3"});
    const auto row = lines(r.out)[2];
    const double f = outage_probability(presets::outage_link(1), {0.3, 4.6});
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", f);
    CHECK(row == std::string("0.29999999999999999,1,") + buf);
}

TEST_CASE("simulated columns and determinism across worker counts")
{
    std::vector<std::string> args{"outage-curve", "--nt", "1", "--nt", "4", "--points", "2",
                                  "--sweep-min", "0.02", "--sweep-max", "0.08", "--trials", "400",
                                  "--seed", "3"};
    auto one = args;
    one.insert(one.end(), {"--workers", "1"});
    auto many = args;
    many.insert(many.end(), {"--workers", "3"});
    const auto a = run(one);
    const auto b = run(many);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == run(one).out);
    const auto l = lines(a.out);
    CHECK(l[1] == "lambda,n_t,analytic_outage,mc_outage,mc_std_error");
    CHECK(l.size() == 6);
}

TEST_CASE("file output and gnuplot script")
{
    const auto dir = std::filesystem::temp_directory_path() / "mimo_adhoc_cli_test";
    std::filesystem::create_directories(dir);
    const auto csv = (dir / "fig2.csv").string();
    const auto r = run({"tc-vs-epsilon", "--out", csv, "--gnuplot"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto text = slurp(csv);
    CHECK(lines(text).size() == 2 + 60);
    CHECK(lines(text)[1] == "epsilon,n_t,feasible,exact_capacity,asymptotic_capacity");
    const auto gp = slurp(csv + ".gp");
    CHECK(gp.find(csv) != std::string::npos);
    CHECK(gp.find("asymptotic") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("single-stream capacity is highest")
{
    const auto r = run({"tc-vs-epsilon"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    for (std::size_t i = 2; i < 22; ++i) {
        const auto c1 = fields(l[i]);
        const auto c2 = fields(l[i + 20]);
        const auto c4 = fields(l[i + 40]);
        CHECK(c1[0] == c2[0]);
        CHECK(c1[3] > c2[3]);
        CHECK(c1[3] > c4[3]);
    }
}

TEST_CASE("single outage target gives one row per stream count")
{
    const auto r = run({"tc-vs-epsilon", "--points", "1", "--sweep-min", "0.5", "--sweep-max", "0.5"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 5);
}

TEST_CASE("capacity against path loss")
{
    const auto r = run({"tc-vs-alpha", "--points", "2"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 2 + 6);
    CHECK(r.err.find("n_t=1: capacity increasing") != std::string::npos);
    const auto near_two = run({"tc-vs-alpha", "--sweep-min", "2.05", "--points", "3"});
    REQUIRE(near_two.code == 0);
    const auto row = fields(lines(near_two.out)[2]);
    CHECK(row[0] == 2.05);
    CHECK(row[2] == 1.0);
    CHECK(std::isfinite(row[3]));
    CHECK(row[3] > 0.0);
}

TEST_CASE("infeasible points are flagged and all-infeasible is a data error")
{
    const auto mixed = run({"tc-vs-epsilon", "--gamma-db", "10", "--nt", "1", "--points", "3",
                            "--sweep-min", "1e-6", "--sweep-max", "0.5"});
    REQUIRE(mixed.code == 0);
    const auto l = lines(mixed.out);
    CHECK(l[2] == "9.9999999999999995e-07,1,0,nan,nan");
    CHECK(fields(l[4])[2] == 1.0);
    CHECK(run({"tc-vs-epsilon", "--gamma", "1"}).code == 3);
    CHECK(run({"tc-vs-alpha", "--gamma", "0.1"}).code == 3);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"point", "--z", "1", "--z-db", "0"}).code == 2);
    CHECK(run({"point", "--gamma", "inf", "--gamma-db", "10"}).code == 2);
    CHECK(run({"point", "--gamma", "loud"}).code == 2);
    CHECK(run({"tc-vs-alpha", "--sweep-min", "1.9"}).code == 2);
    CHECK(run({"tc-vs-alpha", "--log", "--linear"}).code == 2);
    CHECK(run({"tc-vs-epsilon", "--sweep-max", "1.5"}).code == 2);
    CHECK(run({"outage-curve", "--points", "0"}).code == 2);
    CHECK(run({"outage-curve", "--sweep-min", "3", "--sweep-max", "1"}).code == 2);
    CHECK(run({"outage-curve", "--gnuplot"}).code == 2);
    CHECK(run({"outage-curve", "--alpha", "2"}).code == 2);
    CHECK(run({"validate", "--sigma", "-3"}).code == 2);
    CHECK(run({"validate", "--sigma", "x"}).code == 2);
    CHECK(run({"point", "--trials", "0"}).code == 2);
    CHECK(run({"point", "--nt", "0"}).code == 2);
    CHECK(run({"tc-vs-epsilon", "--nt", "5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("point record")
{
    const auto r = run({"point", "--no-mc"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["parameters"]["alpha"] == 4.6);
    CHECK(j["parameters"]["lambda"] == 0.01);
    const auto& rec = j["results"][0];
    const auto c = presets::outage_link(1);
    CHECK(rec["n_t"] == 1);
    CHECK(rec["ell"] == 4);
    CHECK(rec["outage"].get<double>() == outage_probability(c, {0.01, 4.6}));
    CHECK(rec["theta"].get<double>() == theta(c, 4.6));
    CHECK(rec["omega"].get<double>() == omega(c, 4.6));
    CHECK(rec["contention_density"].get<double>() == contention_density(c, 4.6, 0.1));
    CHECK(rec["mc"].is_null());
    CHECK(rec["asymptotic_capacity"].is_null());
}

TEST_CASE("point record with simulation")
{
    const auto r = run({"point", "--trials", "2000", "--lambda", "0.05"});
    REQUIRE(r.code == 0);
    const auto rec = nlohmann::json::parse(r.out)["results"][0];
    CHECK(rec["mc"]["trials"] == 2000);
    CHECK(rec["mc"]["outage"].get<double>() >= 0.0);
}

TEST_CASE("point record edge cases")
{
    const auto zero = nlohmann::json::parse(run({"point", "--no-mc", "--z", "0"}).out);
    CHECK(zero["results"][0]["outage"] == 0.0);
    const auto hs = run({"point", "--no-mc", "--gamma", "inf", "--nt", "2", "--epsilon", "0.01"});
    REQUIRE(hs.code == 0);
    const auto j = nlohmann::json::parse(hs.out);
    CHECK(j["parameters"]["gamma"] == "inf");
    const auto& rec = j["results"][0];
    CHECK(rec["asymptotic_capacity"].get<double>() ==
          transmission_capacity_asymptotic(LinkConfig{2, 4, 1.0, kInfiniteSnr, 1.0}, 4.6, 0.01));
    const auto infeasible = nlohmann::json::parse(run({"point", "--no-mc", "--gamma", "1", "--nr", "1"}).out);
    CHECK(infeasible["results"][0]["feasible"] == false);
    CHECK(infeasible["results"][0]["outage_floor"].get<double>() > 0.1);
}

TEST_CASE("decibel conversion round trip")
{
    for (double db : {-30.0, -3.0, 0.0, 10.0, 15.0, 47.5})
        CHECK(linear_to_db(db_to_linear(db)) == Approx(db).epsilon(1e-12).scale(1.0));
    const auto j = nlohmann::json::parse(run({"point", "--no-mc", "--z-db", "10", "--gamma-db", "20"}).out);
    CHECK(j["parameters"]["z"].get<double>() == Approx(10.0).epsilon(1e-15));
    CHECK(j["parameters"]["gamma"].get<double>() == Approx(100.0).epsilon(1e-15));
}

TEST_CASE("sweep grids")
{
    cli::Sweep s{1.0, 100.0, 3, true};
    const auto v = s.values();
    CHECK(v[0] == 1.0);
    CHECK(v[1] == Approx(10.0).epsilon(1e-15));
    CHECK(v[2] == 100.0);
    cli::Sweep lin{2.5, 6.0, 8, false};
    CHECK(lin.values()[7] == 6.0);
    CHECK(lin.values()[1] == Approx(3.0).epsilon(1e-15));
}

TEST_CASE("validation with few trials")
{
    const auto r = run({"validate", "--trials", "100"});
    INFO(r.out);
    INFO(r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(lines(r.out).size() == 8);
}

TEST_CASE("validation failure names the check")
{
    const auto r = run({"validate", "--trials", "100", "--sigma", "1e-9"});
    CHECK(r.code == 1);
    CHECK(r.err.find("check failed: analytic outage vs direct Monte Carlo") != std::string::npos);
}

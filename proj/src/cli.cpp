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

#include "mimo_adhoc/cli.hpp"

#include "mimo_adhoc/errors.hpp"
#include "mimo_adhoc/presets.hpp"
#include "mimo_adhoc/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace mimo_adhoc::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<int>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + std::to_string(values[i]);
    return s;
}

double parse_gamma(const std::string& text)
{
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "inf" || lower == "infinity")
        return kInfiniteSnr;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value))
        throw DomainError("--gamma expects a positive number or \"inf\", got \"" + text + "\"");
    return value;
}

template <class Fn>
void for_each_sweep_value(const RunConfig& cfg, Fn&& fn)
{
    for (int n_t : cfg.n_t)
        for (double v : cfg.sweep.values())
            fn(n_t, v);
}

}  // namespace

const char* command_name(Command command)
{
    switch (command) {
    case Command::outage_curve: return "outage-curve";
    case Command::tc_vs_epsilon: return "tc-vs-epsilon";
    case Command::tc_vs_alpha: return "tc-vs-alpha";
    case Command::validate: return "validate";
    case Command::point: return "point";
    }
    return "?";
}

void Sweep::validate() const
{
    if (points < 1)
        throw DomainError("sweep needs at least one point, got " + std::to_string(points));
    if (!std::isfinite(min) || !std::isfinite(max) || min > max)
        throw DomainError("sweep bounds must be finite with min <= max, got [" + num(min) + ", " +
                          num(max) + "]");
    if (log && !(min > 0.0))
        throw DomainError("log sweep needs a positive minimum, got " + num(min));
    if (points > 1 && min == max)
        throw DomainError("sweep of several points needs min < max");
}

std::vector<double> Sweep::values() const
{
    std::vector<double> out;
    for (int i = 0; i < points; ++i) {
        if (points == 1) {
            out.push_back(min);
            break;
        }
        const double f = static_cast<double>(i) / (points - 1);
        if (i == points - 1)
            out.push_back(max);
        else
            out.push_back(log ? min * std::pow(max / min, f) : min + (max - min) * f);
    }
    return out;
}

RunConfig RunConfig::defaults(Command command)
{
    RunConfig cfg;
    cfg.command = command;
    cfg.n_r = presets::kReceiveAntennas;
    cfg.z = db_to_linear(presets::kOutageZdB);
    cfg.gamma = db_to_linear(presets::kOutageGammaDb);
    cfg.alpha = presets::kOutageAlpha;
    cfg.n_t.assign(std::begin(presets::kStreamCounts), std::end(presets::kStreamCounts));
    switch (command) {
    case Command::outage_curve:
        cfg.sweep = {0.01, 2.0, 12, true};
        break;
    case Command::tc_vs_epsilon:
        cfg.z = db_to_linear(presets::kCapacityZdB);
        cfg.gamma = kInfiniteSnr;
        cfg.alpha = presets::kCapacityAlpha;
        cfg.sweep = {1e-4, 0.8, 20, true};
        break;
    case Command::tc_vs_alpha:
        cfg.z = db_to_linear(presets::kPathLossZdB);
        cfg.gamma = kInfiniteSnr;
        cfg.epsilon = presets::kPathLossEpsilon;
        cfg.sweep = {2.5, 6.0, 15, false};
        break;
    case Command::validate:
        break;
    case Command::point:
        cfg.n_t = {1};
        break;
    }
    return cfg;
}

void RunConfig::validate() const
{
    if (n_t.empty())
        throw DomainError("at least one --nt is required");
    for (int n : n_t)
        link(n).validate();
    if (!(d0 > 0.0))
        throw DomainError("d0 must be positive");
    if (mc_options.trials < 1)
        throw DomainError("--trials must be positive");
    if (!(mc_options.delta > 0.0 && mc_options.delta < 1.0))
        throw DomainError("--delta must lie in (0, 1), got " + num(mc_options.delta));
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("--sigma must be finite and positive, got " + num(sigma));

    switch (command) {
    case Command::outage_curve:
        check_path_loss(alpha);
        sweep.validate();
        if (sweep.min < 0.0)
            throw DomainError("densities must be non-negative");
        break;
    case Command::tc_vs_epsilon:
        check_path_loss(alpha);
        sweep.validate();
        if (!(sweep.min > 0.0 && sweep.max < 1.0))
            throw DomainError("outage targets must lie in (0, 1)");
        break;
    case Command::tc_vs_alpha:
        sweep.validate();
        for (double a : sweep.values())
            check_path_loss(a);
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw DomainError("--epsilon must lie in (0, 1), got " + num(epsilon));
        break;
    case Command::validate:
        break;
    case Command::point:
        NetworkParams{lambda, alpha}.validate();
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw DomainError("--epsilon must lie in (0, 1), got " + num(epsilon));
        break;
    }
    if (command == Command::tc_vs_epsilon || command == Command::tc_vs_alpha)
        for (int n : n_t)
            if (n > n_r)
                throw DomainError("capacity needs n_t <= n_r, got n_t=" + std::to_string(n));
}

std::string describe(const RunConfig& cfg)
{
    std::ostringstream s;
    s << "mimo-adhoc " << kVersion << " " << command_name(cfg.command) << " n_t=" << join(cfg.n_t)
      << " n_r=" << cfg.n_r << " z=" << num(cfg.z) << " gamma=" << num(cfg.gamma)
      << " d0=" << num(cfg.d0);
    if (cfg.command != Command::tc_vs_alpha)
        s << " alpha=" << num(cfg.alpha);
    if (cfg.command == Command::tc_vs_alpha || cfg.command == Command::point)
        s << " epsilon=" << num(cfg.epsilon);
    if (cfg.command == Command::point)
        s << " lambda=" << num(cfg.lambda);
    else
        s << " sweep=" << (cfg.sweep.log ? "log" : "linear") << ":" << num(cfg.sweep.min) << ":"
          << num(cfg.sweep.max) << ":" << cfg.sweep.points;
    if (cfg.command == Command::outage_curve)
        s << " per_stream_density=" << cfg.per_stream_density;
    if (cfg.command == Command::outage_curve || cfg.command == Command::point) {
        s << " mc=" << cfg.mc;
        if (cfg.mc)
            s << " trials=" << cfg.mc_options.trials << " seed=" << cfg.mc_options.seed
              << " delta=" << num(cfg.mc_options.delta);
    }
    return s.str();
}

void write_csv(std::ostream& os, const std::string& comment, const Table& table)
{
    os << "# " << comment << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << num(row[i]);
        os << "\n";
    }
}

Table run_outage_curve(const RunConfig& cfg)
{
    cfg.validate();
    Table table;
    table.columns = {"lambda", "n_t", "analytic_outage"};
    if (cfg.mc) {
        table.columns.push_back("mc_outage");
        table.columns.push_back("mc_std_error");
    }
    for_each_sweep_value(cfg, [&](int n_t, double lambda) {
        const auto link = cfg.link(n_t);
        const NetworkParams net{cfg.per_stream_density ? lambda / n_t : lambda, cfg.alpha};
        std::vector<double> row{lambda, static_cast<double>(n_t), outage_probability(link, net)};
        if (cfg.mc) {
            const auto mc = simulate_outage(link, net, cfg.mc_options);
            row.push_back(mc.probability);
            row.push_back(mc.std_error);
        }
        table.rows.push_back(std::move(row));
    });
    return table;
}

Table run_tc_vs_epsilon(const RunConfig& cfg)
{
    cfg.validate();
    Table table;
    table.columns = {"epsilon", "n_t", "feasible", "exact_capacity", "asymptotic_capacity"};
    int feasible = 0;
    double floor = 0.0;
    for_each_sweep_value(cfg, [&](int n_t, double eps) {
        try {
            const auto c = transmission_capacity_exact(cfg.link(n_t), cfg.alpha, eps);
            table.rows.push_back({eps, static_cast<double>(n_t), 1.0, c.exact_capacity,
                                  c.asymptotic_capacity});
            ++feasible;
        } catch (const InfeasibleEpsilon& e) {
            floor = std::max(floor, e.floor());
            table.rows.push_back({eps, static_cast<double>(n_t), 0.0, kNaN, kNaN});
        }
    });
    if (feasible == 0)
        throw InfeasibleEpsilon("no outage target exceeds the zero-density outage " + num(floor),
                                floor);
    return table;
}

Table run_tc_vs_alpha(const RunConfig& cfg)
{
    cfg.validate();
    Table table;
    table.columns = {"alpha", "n_t", "feasible", "exact_capacity"};
    int feasible = 0;
    double floor = 0.0;
    for_each_sweep_value(cfg, [&](int n_t, double alpha) {
        try {
            const auto c = transmission_capacity_exact(cfg.link(n_t), alpha, cfg.epsilon);
            table.rows.push_back({alpha, static_cast<double>(n_t), 1.0, c.exact_capacity});
            ++feasible;
        } catch (const InfeasibleEpsilon& e) {
            floor = std::max(floor, e.floor());
            table.rows.push_back({alpha, static_cast<double>(n_t), 0.0, kNaN});
        }
    });
    if (feasible == 0)
        throw InfeasibleEpsilon("outage target " + num(cfg.epsilon) +
                                    " does not exceed the zero-density outage " + num(floor),
                                floor);
    return table;
}

std::vector<std::pair<int, bool>> alpha_monotonicity(const Table& table)
{
    std::map<int, std::pair<double, bool>> state;
    std::vector<int> order;
    for (const auto& row : table.rows) {
        const int n_t = static_cast<int>(row[1]);
        if (!state.count(n_t)) {
            state[n_t] = {-std::numeric_limits<double>::infinity(), true};
            order.push_back(n_t);
        }
        if (row[2] == 0.0)
            continue;
        auto& [last, ok] = state[n_t];
        if (row[3] < last)
            ok = false;
        last = row[3];
    }
    std::vector<std::pair<int, bool>> out;
    for (int n_t : order)
        out.emplace_back(n_t, state[n_t].second);
    return out;
}

std::vector<CheckResult> run_validate(const RunConfig& cfg, std::ostream& os)
{
    cfg.validate();
    std::vector<CheckResult> results;
    auto report = [&](CheckResult r) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        os.flush();
        results.push_back(std::move(r));
    };
    report(check_partition_examples());
    report(check_partition_oracle(30));
    report(check_collapse_identities(100, cfg.mc_options.seed, 1e-12));
    report(check_single_stream_dominance(20, 20));
    report(check_asymptotic_consistency(0.1));
    if (cfg.mc) {
        const auto grid = outage_grid({1, 2, 4}, 5, 0.05, 0.9);
        const auto runs = run_estimators(grid, cfg.mc_options, true);
        report(check_mc_agreement(runs, cfg.sigma));
        report(check_estimator_equivalence(runs, cfg.sigma));
        report(check_conditional_cdf(20, cfg.mc_options.trials, cfg.sigma, cfg.mc_options.seed,
                                     cfg.mc_options.workers));
    }
    return results;
}

std::string run_point(const RunConfig& cfg)
{
    cfg.validate();
    using nlohmann::json;
    auto number = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };

    json params{{"version", kVersion},
                {"n_r", cfg.n_r},
                {"z", cfg.z},
                {"z_db", cfg.z > 0.0 ? number(linear_to_db(cfg.z)) : json(nullptr)},
                {"gamma", std::isinf(cfg.gamma) ? json("inf") : json(cfg.gamma)},
                {"d0", cfg.d0},
                {"alpha", cfg.alpha},
                {"lambda", cfg.lambda},
                {"epsilon", cfg.epsilon}};
    json results = json::array();
    for (int n_t : cfg.n_t) {
        const auto link = cfg.link(n_t);
        const NetworkParams net{cfg.lambda, cfg.alpha};
        json r{{"n_t", n_t},
               {"rate", link.rate()},
               {"theta", theta(link, cfg.alpha)},
               {"outage", outage_probability(link, net)}};
        if (cfg.mc) {
            const auto mc = simulate_outage(link, net, cfg.mc_options);
            r["mc"] = {{"outage", mc.probability}, {"std_error", mc.std_error}, {"trials", mc.trials}};
        } else {
            r["mc"] = nullptr;
        }
        if (n_t <= cfg.n_r) {
            r["ell"] = max_cancelable(cfg.n_r, n_t);
            r["omega"] = omega(link, cfg.alpha);
        } else {
            r["ell"] = nullptr;
            r["omega"] = nullptr;
        }
        r["feasible"] = false;
        r["contention_density"] = nullptr;
        r["exact_capacity"] = nullptr;
        r["asymptotic_capacity"] = nullptr;
        try {
            const double density = contention_density(link, cfg.alpha, cfg.epsilon);
            r["feasible"] = true;
            r["contention_density"] = density;
            r["exact_capacity"] = n_t * density * (1.0 - cfg.epsilon) * link.rate();
            if (link.high_snr() && n_t <= cfg.n_r && link.z > 0.0)
                r["asymptotic_capacity"] =
                    number(transmission_capacity_asymptotic(link, cfg.alpha, cfg.epsilon));
        } catch (const InfeasibleEpsilon& e) {
            r["outage_floor"] = e.floor();
        } catch (const BracketError&) {
            // outage stays below epsilon at every density
        }
        results.push_back(std::move(r));
    }
    return json{{"parameters", params}, {"results", results}}.dump(2) + "\n";
}

namespace {

struct Overrides {
    std::vector<int> n_t;
    std::optional<int> n_r;
    std::optional<double> z, z_db, gamma_db, d0, alpha, lambda, epsilon, delta, sigma;
    std::optional<double> sweep_min, sweep_max;
    std::optional<std::string> gamma, out;
    std::optional<int> points;
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;
    unsigned workers = 0;
    bool no_mc = false;
    bool per_stream = false;
    bool no_per_stream = false;
    bool log = false;
    bool linear = false;
    bool gnuplot = false;
};

void add_common(CLI::App* sub, Overrides& o, bool sweep)
{
    sub->add_option("--nt", o.n_t, "transmit antennas / streams (repeatable)");
    sub->add_option("--nr", o.n_r, "receive antennas");
    auto* z = sub->add_option("--z", o.z, "SINR threshold, linear");
    sub->add_option("--z-db", o.z_db, "SINR threshold in dB")->excludes(z);
    auto* g = sub->add_option("--gamma", o.gamma, "transmit SNR, linear or inf");
    sub->add_option("--gamma-db", o.gamma_db, "transmit SNR in dB")->excludes(g);
    sub->add_option("--d0", o.d0, "link distance");
    sub->add_option("--alpha", o.alpha, "path loss exponent");
    sub->add_option("--trials", o.trials, "Monte Carlo trials per point");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--delta", o.delta, "far-field interference tolerance");
    sub->add_option("--workers", o.workers, "worker threads, 0 for all cores");
    sub->add_flag("--no-mc", o.no_mc, "skip simulation");
    auto* out = sub->add_option("--out", o.out, "output file");
    sub->add_flag("--gnuplot", o.gnuplot, "also write <out>.gp")->needs(out);
    if (sweep) {
        sub->add_option("--sweep-min", o.sweep_min, "first sweep value");
        sub->add_option("--sweep-max", o.sweep_max, "last sweep value");
        sub->add_option("--points", o.points, "sweep points");
        auto* lg = sub->add_flag("--log", o.log, "log-spaced sweep");
        sub->add_flag("--linear", o.linear, "linearly spaced sweep")->excludes(lg);
    }
}

RunConfig resolve(Command command, const Overrides& o)
{
    auto cfg = RunConfig::defaults(command);
    if (!o.n_t.empty())
        cfg.n_t = o.n_t;
    if (o.n_r) cfg.n_r = *o.n_r;
    if (o.z) cfg.z = *o.z;
    if (o.z_db) cfg.z = db_to_linear(*o.z_db);
    if (o.gamma) cfg.gamma = parse_gamma(*o.gamma);
    if (o.gamma_db) cfg.gamma = db_to_linear(*o.gamma_db);
    if (o.d0) cfg.d0 = *o.d0;
    if (o.alpha) cfg.alpha = *o.alpha;
    if (o.lambda) cfg.lambda = *o.lambda;
    if (o.epsilon) cfg.epsilon = *o.epsilon;
    if (o.trials) cfg.mc_options.trials = *o.trials;
    if (o.seed) cfg.mc_options.seed = *o.seed;
    if (o.delta) cfg.mc_options.delta = *o.delta;
    if (o.sigma) cfg.sigma = *o.sigma;
    cfg.mc_options.workers = o.workers;
    cfg.mc = !o.no_mc;
    if (o.per_stream) cfg.per_stream_density = true;
    if (o.no_per_stream) cfg.per_stream_density = false;
    if (o.sweep_min) cfg.sweep.min = *o.sweep_min;
    if (o.sweep_max) cfg.sweep.max = *o.sweep_max;
    if (o.points) cfg.sweep.points = *o.points;
    if (o.log) cfg.sweep.log = true;
    if (o.linear) cfg.sweep.log = false;
    if (o.out) cfg.out = *o.out;
    cfg.gnuplot = o.gnuplot;
    return cfg;
}

std::string gnuplot_script(const RunConfig& cfg, const Table& table)
{
    std::ostringstream s;
    const std::string data = cfg.out;
    s << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set grid\n";
    int y = 3;
    switch (cfg.command) {
    case Command::outage_curve:
        s << "set xlabel '" << (cfg.per_stream_density ? "density per stream" : "density")
          << "'\nset ylabel 'outage probability'\n";
        if (cfg.sweep.log)
            s << "set logscale x\n";
        break;
    case Command::tc_vs_epsilon:
        s << "set xlabel 'outage probability'\nset ylabel 'transmission capacity'\nset logscale x\n";
        y = 4;
        break;
    default:
        s << "set xlabel 'path loss exponent'\nset ylabel 'transmission capacity'\n";
        y = 4;
        break;
    }
    s << "plot \\\n";
    std::vector<std::string> series;
    for (int n_t : cfg.n_t) {
        const std::string sel = "($2==" + std::to_string(n_t) + "?$" + std::to_string(y) + ":1/0)";
        series.push_back("  '" + data + "' using 1:" + sel + " with lines title 'n_t=" +
                         std::to_string(n_t) + "'");
        if (cfg.command == Command::outage_curve && cfg.mc)
            series.push_back("  '" + data + "' using 1:($2==" + std::to_string(n_t) +
                             "?$4:1/0):5 with yerrorbars title 'n_t=" + std::to_string(n_t) +
                             " simulated'");
        if (cfg.command == Command::tc_vs_epsilon)
            series.push_back("  '" + data + "' using 1:($2==" + std::to_string(n_t) +
                             "?$5:1/0) with lines dashtype 2 title 'n_t=" + std::to_string(n_t) +
                             " asymptotic'");
    }
    for (std::size_t i = 0; i < series.size(); ++i)
        s << series[i] << (i + 1 < series.size() ? ", \\\n" : "\n");
    (void)table;
    return s.str();
}

int emit_table(const RunConfig& cfg, const Table& table, std::ostream& out, std::ostream& err)
{
    if (cfg.out.empty()) {
        write_csv(out, describe(cfg), table);
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << cfg.out << " for writing\n";
        return static_cast<int>(ExitCode::data);
    }
    write_csv(file, describe(cfg), table);
    if (cfg.gnuplot) {
        std::ofstream gp(cfg.out + ".gp", std::ios::binary);
        if (!gp) {
            err << "error: cannot open " << cfg.out << ".gp for writing\n";
            return static_cast<int>(ExitCode::data);
        }
        gp << gnuplot_script(cfg, table);
    }
    return file ? 0 : static_cast<int>(ExitCode::data);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Outage probability and transmission capacity of MIMO-MMSE ad hoc networks",
                 "mimo-adhoc"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Overrides o;
    std::map<CLI::App*, Command> commands;
    auto* outage = app.add_subcommand("outage-curve", "outage probability vs density (CSV)");
    add_common(outage, o, true);
    auto* ps = outage->add_flag("--per-stream-density", o.per_stream, "sweep density per stream");
    outage->add_flag("--no-per-stream-density", o.no_per_stream, "sweep transmitter density")
        ->excludes(ps);
    commands[outage] = Command::outage_curve;

    auto* tce = app.add_subcommand("tc-vs-epsilon", "transmission capacity vs outage target (CSV)");
    add_common(tce, o, true);
    commands[tce] = Command::tc_vs_epsilon;

    auto* tca = app.add_subcommand("tc-vs-alpha", "transmission capacity vs path loss (CSV)");
    add_common(tca, o, true);
    tca->add_option("--epsilon", o.epsilon, "outage target");
    commands[tca] = Command::tc_vs_alpha;

    auto* val = app.add_subcommand("validate", "run the validation checks");
    add_common(val, o, false);
    val->add_option("--sigma", o.sigma, "Monte Carlo gate width in standard errors");
    commands[val] = Command::validate;

    auto* pt = app.add_subcommand("point", "all quantities at one parameter point (JSON)");
    add_common(pt, o, false);
    pt->add_option("--lambda", o.lambda, "transmitter density");
    pt->add_option("--epsilon", o.epsilon, "outage target");
    commands[pt] = Command::point;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }

    Command command = Command::point;
    for (const auto& [sub, cmd] : commands)
        if (sub->parsed())
            command = cmd;

    try {
        const RunConfig cfg = resolve(command, o);
        cfg.validate();
        switch (command) {
        case Command::outage_curve:
            return emit_table(cfg, run_outage_curve(cfg), out, err);
        case Command::tc_vs_epsilon:
            return emit_table(cfg, run_tc_vs_epsilon(cfg), out, err);
        case Command::tc_vs_alpha: {
            const auto table = run_tc_vs_alpha(cfg);
            for (const auto& [n_t, increasing] : alpha_monotonicity(table))
                err << "n_t=" << n_t << ": capacity "
                    << (increasing ? "increasing" : "NOT monotone") << " in alpha\n";
            return emit_table(cfg, table, out, err);
        }
        case Command::validate: {
            std::ofstream file;
            if (!cfg.out.empty()) {
                file.open(cfg.out, std::ios::binary);
                if (!file) {
                    err << "error: cannot open " << cfg.out << " for writing\n";
                    return static_cast<int>(ExitCode::data);
                }
            }
            int failed = 0;
            for (const auto& r : run_validate(cfg, cfg.out.empty() ? out : file)) {
                if (!r.passed) {
                    err << "check failed: " << r.name << "\n";
                    ++failed;
                }
            }
            return failed ? static_cast<int>(ExitCode::validation_failure) : 0;
        }
        case Command::point: {
            const auto record = run_point(cfg);
            if (cfg.out.empty()) {
                out << record;
                return 0;
            }
            std::ofstream file(cfg.out, std::ios::binary);
            if (!(file << record)) {
                err << "error: cannot write " << cfg.out << "\n";
                return static_cast<int>(ExitCode::data);
            }
            return 0;
        }
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const InfeasibleEpsilon& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::data);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::numerical);
    }
    return static_cast<int>(ExitCode::numerical);
}

}  // namespace mimo_adhoc::cli

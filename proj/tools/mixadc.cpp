// SPDX-License-Identifier: Apache-2.0
//
// mixadc - achievable-rate toolkit for mixed-ADC massive MIMO receivers
// Copyright (C) 2026 The mixadc authors
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


// Command-line driver: sweeps that reproduce the single-user, multi-user and
// sum-rate experiments as CSV, plus the closed-form self-check.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 verification failure.

#include "mixadc/config.hpp"
#include "mixadc/experiment.hpp"
#include "mixadc/gmi.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>

namespace {

constexpr int exit_config_error = 1;
constexpr int exit_verify_failed = 2;

struct Flags
{
    std::string config_file;
    std::map<std::string, std::string> settings;
    bool bits = false;
};

void add_setting_flags(CLI::App *cmd, Flags &flags)
{
    cmd->add_option("--config", flags.config_file, "key = value configuration file");
    for (const auto *name : {"n-antennas", "n-users", "k", "snr-db", "users", "trials", "seed", "scheme", "out",
                             "perturb-rr"})
    {
        const std::string key = name;
        cmd->add_option_function<std::string>(
            "--" + key, [&flags, key](const std::string &v) { flags.settings[key] = v; },
            "overrides the configuration key '" + key + "'");
    }
    cmd->add_flag_function(
        "--all-users", [&flags](std::int64_t) { flags.settings["all-users"] = "true"; },
        "multi-user: average over all users instead of user 1");
    cmd->add_flag("--bits", flags.bits, "print the summary in bits (CSV stays in nats)");
}

mixadc::ExperimentConfig build_config(mixadc::Scenario scenario, const Flags &flags)
{
    mixadc::ExperimentConfig config;
    config.scenario = scenario;
    if (scenario != mixadc::Scenario::single_user)
        config.assignment = mixadc::Scheme::scheme1;
    if (scenario == mixadc::Scenario::multi_user)
        config.n_users = 10;
    if (scenario == mixadc::Scenario::sum_rate_vs_users)
    {
        config.k_values = {20};
        config.snr_db_grid = {0.0};
        config.user_counts = {1, 10, 20, 40, 60, 80, 100};
    }

    if (!flags.config_file.empty())
    {
        std::ifstream in(flags.config_file);
        if (!in)
            throw std::invalid_argument("cannot open config file " + flags.config_file);
        mixadc::load_config(config, in);
    }
    for (const auto &[key, value] : flags.settings)
        mixadc::apply_setting(config, key, value);
    config.scenario = scenario;
    config.validate();
    return config;
}

void print_summary(const mixadc::SweepResult &result, bool bits)
{
    for (const auto &r : result.records)
    {
        if (r.metric != "fraction" && r.metric != "gmi_nats")
            continue;
        const bool rate = r.metric == "gmi_nats";
        const double scale = rate && bits ? 1.0 / std::numbers::ln2 : 1.0;
        std::fprintf(stderr, "M=%-4ld K=%-4ld snr=%6.1f dB  %-9s %.4f +- %.4f%s\n", static_cast<long>(r.n_users),
                     static_cast<long>(r.k), r.snr_db, rate ? "gmi" : "fraction",
                     r.mean * scale, r.std_error * scale, rate ? (bits ? " bits" : " nats") : "");
    }
}

int write_result(const mixadc::ExperimentConfig &config, const mixadc::SweepResult &result)
{
    if (config.output_path.empty())
    {
        mixadc::write_sweep_csv(std::cout, result);
        return 0;
    }
    std::ofstream out(config.output_path);
    if (!out)
    {
        std::cerr << "error: cannot write " << config.output_path << '\n';
        return exit_config_error;
    }
    mixadc::write_sweep_csv(out, result);
    return out ? 0 : exit_config_error;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Achievable rates of mixed-ADC massive MIMO receivers"};
    app.require_subcommand(1);

    Flags flags;
    auto *single = app.add_subcommand("single-user", "strongest-K single-user sweep");
    auto *multi = app.add_subcommand("multi-user", "per-user GMI with Scheme #1 or #2");
    auto *sum = app.add_subcommand("sum-rate", "sum GMI against the number of users");
    auto *verify = app.add_subcommand("verify", "check closed forms against independent routes");
    for (auto *cmd : {single, multi, sum, verify})
        add_setting_flags(cmd, flags);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config_error;
    }

    mixadc::Scenario scenario = mixadc::Scenario::single_user;
    if (multi->parsed())
        scenario = mixadc::Scenario::multi_user;
    else if (sum->parsed())
        scenario = mixadc::Scenario::sum_rate_vs_users;
    else if (verify->parsed())
        scenario = mixadc::Scenario::verify;

    mixadc::ExperimentConfig config;
    try
    {
        config = build_config(scenario, flags);
    }
    catch (const std::exception &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    }

    try
    {
        if (scenario == mixadc::Scenario::verify)
        {
            const auto report = mixadc::run_verify(config);
            const std::string json = report.to_json();
            if (config.output_path.empty())
                std::cout << json << '\n';
            else
                std::ofstream(config.output_path) << json << '\n';
            for (const auto &c : report.checks)
                std::fprintf(stderr, "[%s] %-40s %s = %.3e (tol %.1e)\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                             c.comparison.c_str(), c.observed, c.tolerance);
            return report.passed() ? 0 : exit_verify_failed;
        }

        mixadc::SweepResult result;
        if (scenario == mixadc::Scenario::single_user)
            result = mixadc::run_single_user_sweep(config);
        else if (scenario == mixadc::Scenario::multi_user)
            result = mixadc::run_multi_user_sweep(config);
        else
            result = mixadc::run_sum_rate_vs_users(config);
        print_summary(result, flags.bits);
        return write_result(config, result);
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}

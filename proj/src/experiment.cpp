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


#include "mixadc/experiment.hpp"

#include "mixadc/assignment.hpp"
#include "mixadc/gmi.hpp"
#include "mixadc/parallel.hpp"
#include "mixadc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mixadc {

std::string_view to_string(Scenario scenario)
{
    switch (scenario)
    {
    case Scenario::single_user: return "single_user";
    case Scenario::multi_user: return "multi_user";
    case Scenario::sum_rate_vs_users: return "sum_rate_vs_users";
    case Scenario::verify: return "verify";
    }
    return "unknown";
}

std::string_view to_string(Scheme scheme)
{
    switch (scheme)
    {
    case Scheme::strongest_k: return "strongest_k";
    case Scheme::scheme1: return "scheme1";
    case Scheme::scheme2: return "scheme2";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view text)
{
    for (auto s : {Scenario::single_user, Scenario::multi_user, Scenario::sum_rate_vs_users, Scenario::verify})
        if (text == to_string(s))
            return s;
    throw std::invalid_argument("unknown scenario '" + std::string(text) + "'");
}

Scheme parse_scheme(std::string_view text)
{
    for (auto s : {Scheme::strongest_k, Scheme::scheme1, Scheme::scheme2})
        if (text == to_string(s))
            return s;
    throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

std::vector<double> ExperimentConfig::default_snr_grid()
{
    std::vector<double> grid;
    for (int db = -20; db <= 20; db += 2)
        grid.push_back(db);
    return grid;
}

void ExperimentConfig::validate() const
{
    if (n_antennas < 1)
        throw std::invalid_argument("n-antennas must be at least 1");
    if (n_users < 1)
        throw std::invalid_argument("n-users must be at least 1");
    if (n_realizations < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (snr_db_grid.empty())
        throw std::invalid_argument("snr-db grid must not be empty");
    for (const double s : snr_db_grid)
        if (!std::isfinite(s))
            throw std::invalid_argument("snr-db values must be finite");
    if (k_values.empty())
        throw std::invalid_argument("k list must not be empty");
    for (const Index k : k_values)
        if (k < 0 || k > n_antennas)
            throw std::invalid_argument("every k must lie in [0, n-antennas]");
    for (const Index m : user_counts)
        if (m < 1)
            throw std::invalid_argument("user counts must be at least 1");
    if (!std::isfinite(perturb_rr))
        throw std::invalid_argument("perturb-rr must be finite");
}

const SweepRecord &SweepResult::find(std::string_view metric, Index k, double snr_db,
                                     Index n_users) const
{
    for (const auto &r : records)
        if (r.metric == metric && r.k == k && r.snr_db == snr_db && (n_users < 1 || r.n_users == n_users))
            return r;
    throw std::out_of_range("no sweep record for metric " + std::string(metric));
}

void write_sweep_csv(std::ostream &out, const SweepResult &result)
{
    out << sweep_csv_header << '\n';
    char buf[64];
    for (const auto &r : result.records)
    {
        out << r.scenario << ',' << r.n_antennas << ',' << r.n_users << ',' << r.k << ',';
        std::snprintf(buf, sizeof buf, "%g", r.snr_db);
        out << buf << ',' << r.scheme << ',' << r.n_realizations << ',' << r.metric << ',';
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", r.mean, r.std_error);
        out << buf << '\n';
    }
}

namespace {

// Per-realization samples of one grid point, aggregated after all trials.
struct PointSamples
{
    std::vector<std::string> metrics;
    // values[metric][trial]
    std::vector<std::vector<double>> values;

    PointSamples(std::vector<std::string> names, std::uint64_t trials)
        : metrics(std::move(names)), values(metrics.size(), std::vector<double>(trials, 0.0))
    {
    }
};

struct MeanStderr
{
    double mean = 0.0;
    double std_error = 0.0;
};

MeanStderr summarize(const std::vector<double> &v)
{
    const double n = static_cast<double>(v.size());
    double sum = 0.0;
    for (const double x : v)
        sum += x;
    const double mean = sum / n;
    if (v.size() < 2)
        return {mean, 0.0};
    double ss = 0.0;
    for (const double x : v)
        ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

// Ratio of means with a delta-method standard error from paired samples.
MeanStderr ratio_of_means(const std::vector<double> &num, const std::vector<double> &den)
{
    const MeanStderr a = summarize(num);
    const MeanStderr b = summarize(den);
    if (b.mean == 0.0)
        return {0.0, 0.0};
    const double ratio = a.mean / b.mean;
    if (num.size() < 2)
        return {ratio, 0.0};
    std::vector<double> influence(num.size());
    for (std::size_t i = 0; i < num.size(); ++i)
        influence[i] = (num[i] - ratio * den[i]) / b.mean;
    return {ratio, summarize(influence).std_error};
}

struct GridPoint
{
    Index n_users;
    Index k;
    double snr_db;
};

SweepResult collect(const ExperimentConfig &config, std::string_view scenario, std::string_view scheme,
                    const std::vector<GridPoint> &grid, const std::vector<PointSamples> &samples,
                    const std::string &fraction_num, const std::string &fraction_den)
{
    SweepResult result;
    for (std::size_t p = 0; p < grid.size(); ++p)
    {
        const auto &s = samples[p];
        auto push = [&](const std::string &metric, MeanStderr v) {
            result.records.push_back(SweepRecord{std::string(scenario), config.n_antennas, grid[p].n_users,
                                                 grid[p].k, grid[p].snr_db, std::string(scheme),
                                                 config.n_realizations, metric, v.mean, v.std_error});
        };
        const std::vector<double> *num = nullptr;
        const std::vector<double> *den = nullptr;
        for (std::size_t m = 0; m < s.metrics.size(); ++m)
        {
            push(s.metrics[m], summarize(s.values[m]));
            if (s.metrics[m] == fraction_num)
                num = &s.values[m];
            if (s.metrics[m] == fraction_den)
                den = &s.values[m];
        }
        push("fraction", ratio_of_means(*num, *den));
    }
    return result;
}

BindingVector assign(Scheme scheme, const ChannelRealization &channel, Index k, std::uint64_t seed,
                     std::uint64_t trial)
{
    switch (scheme)
    {
    case Scheme::strongest_k: return strongest_k(channel, k);
    case Scheme::scheme1: return scheme1_max_aggregate(channel, k);
    case Scheme::scheme2:
        return scheme2_random(channel.n_antennas(), k,
                              derive_seed(derive_seed(seed, StreamTag::assignment, trial),
                                          StreamTag::assignment, static_cast<std::uint64_t>(k)));
    }
    throw std::invalid_argument("unknown scheme");
}

std::vector<GridPoint> make_grid(const std::vector<Index> &users, const ExperimentConfig &config)
{
    std::vector<GridPoint> grid;
    for (const Index m : users)
        for (const Index k : config.k_values)
            for (const double s : config.snr_db_grid)
                grid.push_back({m, k, s});
    return grid;
}

} // namespace

SweepResult run_single_user_sweep(const ExperimentConfig &config)
{
    config.validate();
    if (config.assignment != Scheme::strongest_k)
        throw std::invalid_argument("single-user sweep uses the strongest_k assignment");

    const auto grid = make_grid({1}, config);
    std::vector<PointSamples> samples(
        grid.size(), PointSamples({"gmi_nats", "cap_full", "cap_sel"}, config.n_realizations));

    parallel_for(config.n_realizations, [&](std::size_t t) {
        const auto channel = generate_rayleigh_trial(config.n_antennas, 1, config.seed, t);
        for (std::size_t p = 0; p < grid.size(); ++p)
        {
            const SnrSpec snr = snr_from_db(grid[p].snr_db, 1);
            const BindingVector delta = strongest_k(channel, grid[p].k);
            auto &s = samples[p].values;
            s[0][t] = gmi_single_user(channel, delta, snr).gmi_nats;
            s[1][t] = capacity_full(channel, snr);
            s[2][t] = capacity_selection(channel, delta, snr);
        }
    });
    return collect(config, to_string(Scenario::single_user), to_string(config.assignment), grid, samples,
                   "gmi_nats", "cap_full");
}

SweepResult run_multi_user_sweep(const ExperimentConfig &config)
{
    config.validate();
    if (config.assignment == Scheme::strongest_k && config.n_users > 1)
        throw std::invalid_argument("multi-user sweep needs scheme1 or scheme2");

    const Index m_users = config.n_users;
    const auto grid = make_grid({m_users}, config);
    std::vector<PointSamples> samples(
        grid.size(), PointSamples({"gmi_nats", "per_user_cap", "mmse_fullres"}, config.n_realizations));

    parallel_for(config.n_realizations, [&](std::size_t t) {
        const auto channel = generate_rayleigh_trial(config.n_antennas, m_users, config.seed, t);
        const BindingVector full = BindingVector::all_high(config.n_antennas);
        for (std::size_t p = 0; p < grid.size(); ++p)
        {
            const SnrSpec snr = snr_from_db(grid[p].snr_db, m_users);
            const BindingVector delta = assign(config.assignment, channel, grid[p].k, config.seed, t);
            auto &s = samples[p].values;
            if (config.all_users)
            {
                double mixed = 0.0, unquantized = 0.0;
                for (const auto &r : gmi_all_users(channel, delta, snr))
                    mixed += r.gmi_nats;
                for (const auto &r : gmi_all_users(channel, full, snr))
                    unquantized += r.gmi_nats;
                s[0][t] = mixed / static_cast<double>(m_users);
                s[2][t] = unquantized / static_cast<double>(m_users);
            }
            else
            {
                s[0][t] = gmi_multi_user(channel, delta, snr, 0).gmi_nats;
                s[2][t] = gmi_multi_user(channel, full, snr, 0).gmi_nats;
            }
            s[1][t] = per_user_capacity(channel, snr);
        }
    });
    return collect(config, to_string(Scenario::multi_user), to_string(config.assignment), grid, samples,
                   "gmi_nats", "per_user_cap");
}

SweepResult run_sum_rate_vs_users(const ExperimentConfig &config)
{
    config.validate();
    const std::vector<Index> users =
        config.user_counts.empty() ? std::vector<Index>{config.n_users} : config.user_counts;
    const bool any_multi = std::any_of(users.begin(), users.end(), [](Index m) { return m > 1; });
    if (config.assignment == Scheme::strongest_k && any_multi)
        throw std::invalid_argument("sum-rate sweep with several users needs scheme1 or scheme2");

    const auto grid = make_grid(users, config);
    std::vector<PointSamples> samples(
        grid.size(), PointSamples({"gmi_nats", "mmse_fullres", "per_user_cap"}, config.n_realizations));

    parallel_for(config.n_realizations, [&](std::size_t t) {
        for (const Index m_users : users)
        {
            const auto channel = generate_rayleigh_trial(config.n_antennas, m_users, config.seed, t);
            const BindingVector full = BindingVector::all_high(config.n_antennas);
            for (std::size_t p = 0; p < grid.size(); ++p)
            {
                if (grid[p].n_users != m_users)
                    continue;
                const SnrSpec snr = snr_from_db(grid[p].snr_db, m_users);
                const BindingVector delta = assign(config.assignment, channel, grid[p].k, config.seed, t);
                double mixed = 0.0, unquantized = 0.0;
                for (const auto &r : gmi_all_users(channel, delta, snr))
                    mixed += r.gmi_nats;
                for (const auto &r : gmi_all_users(channel, full, snr))
                    unquantized += r.gmi_nats;
                auto &s = samples[p].values;
                s[0][t] = mixed;
                s[1][t] = unquantized;
                s[2][t] = per_user_capacity(channel, snr);
            }
        }
    });
    return collect(config, to_string(Scenario::sum_rate_vs_users), to_string(config.assignment), grid,
                   samples, "gmi_nats", "mmse_fullres");
}

} // namespace mixadc

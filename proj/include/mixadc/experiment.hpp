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


#pragma once

#include "mixadc/channel.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mixadc {

enum class Scenario
{
    single_user,
    multi_user,
    sum_rate_vs_users,
    verify,
};

enum class Scheme
{
    strongest_k,
    scheme1,
    scheme2,
};

std::string_view to_string(Scenario scenario);
std::string_view to_string(Scheme scheme);
Scenario parse_scenario(std::string_view text);
Scheme parse_scheme(std::string_view text);

/// Everything a sweep needs. Realization t of any sweep draws its channel
/// from substream (seed, t), so sweeps that differ only in assignment scheme
/// or grid see the same channels.
struct ExperimentConfig
{
    Scenario scenario = Scenario::single_user;
    Index n_antennas = 100;
    Index n_users = 1;
    std::vector<Index> k_values{10, 20};
    std::vector<double> snr_db_grid = default_snr_grid();
    /// User counts swept by the sum-rate scenario; empty means {n_users}.
    std::vector<Index> user_counts;
    std::uint64_t n_realizations = 1000;
    Scheme assignment = Scheme::strongest_k;
    std::uint64_t seed = 1;
    std::string output_path;
    /// Multi-user: average the per-user statistics over all users instead of user 1.
    bool all_users = false;
    /// Verify scenario only: offset added to every closed-form R_rr entry
    /// before the oracle comparison. Non-zero values exercise the detector.
    double perturb_rr = 0.0;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;

    static std::vector<double> default_snr_grid();
};

/// One CSV row: the mean and standard error of `metric` at one grid point.
struct SweepRecord
{
    std::string scenario;
    Index n_antennas = 0;
    Index n_users = 0;
    Index k = 0;
    double snr_db = 0.0;
    std::string scheme;
    std::uint64_t n_realizations = 0;
    std::string metric;
    double mean = 0.0;
    double std_error = 0.0;
};

struct SweepResult
{
    std::vector<SweepRecord> records;

    /// The record for (metric, K, SNR) and, when n_users >= 1, that user count.
    /// Throws std::out_of_range if absent.
    const SweepRecord &find(std::string_view metric, Index k, double snr_db,
                            Index n_users = -1) const;
};

inline constexpr std::string_view sweep_csv_header =
    "scenario,N,M,K,snr_db,scheme,n_real,metric,mean,stderr";

void write_sweep_csv(std::ostream &out, const SweepResult &result);

/// Strongest-K single-user sweep: metrics gmi_nats, cap_full, cap_sel, and
/// fraction = mean GMI / mean cap_full.
SweepResult run_single_user_sweep(const ExperimentConfig &config);

/// Multi-user sweep with Scheme #1 or #2: metrics gmi_nats, per_user_cap,
/// mmse_fullres (GMI with all antennas high-resolution) and
/// fraction = mean GMI / mean per_user_cap.
SweepResult run_multi_user_sweep(const ExperimentConfig &config);

/// Sum rate against user count: gmi_nats and mmse_fullres are sums over all
/// users, per_user_cap is (1/M) log det(I + Es H H^H), and
/// fraction = mean sum GMI / mean sum MMSE rate.
SweepResult run_sum_rate_vs_users(const ExperimentConfig &config);

/// One self-check of the closed forms against independent routes.
struct CheckResult
{
    std::string name;
    std::string comparison; ///< "max |z|", "max rel err", ...
    double tolerance = 0.0;
    double observed = 0.0;
    bool passed = false;
};

struct VerifyReport
{
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const;
};

VerifyReport run_verify(const ExperimentConfig &config);

} // namespace mixadc

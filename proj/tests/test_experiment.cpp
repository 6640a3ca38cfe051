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


#include <doctest.h>

#include "mixadc/config.hpp"
#include "mixadc/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace mixadc;

namespace {

ExperimentConfig small_config()
{
    ExperimentConfig c;
    c.n_antennas = 12;
    c.k_values = {0, 3, 12};
    c.snr_db_grid = {-10.0, 0.0, 10.0};
    c.n_realizations = 40;
    c.seed = 17;
    return c;
}

std::string to_csv(const SweepResult &r)
{
    std::ostringstream os;
    write_sweep_csv(os, r);
    return os.str();
}

} // namespace

TEST_CASE("config parsing")
{
    ExperimentConfig c;
    std::istringstream in("# comment\n"
                          "n_antennas = 64\n"
                          "n-users = 4   # trailing comment\n"
                          "k = 0, 8,16\n"
                          "snr-db = -4:4:2\n"
                          "trials = 25\n"
                          "seed = 99\n"
                          "scheme = scheme2\n"
                          "scenario = multi_user\n"
                          "all-users = yes\n"
                          "out = result.csv\n");
    load_config(c, in);
    CHECK(c.n_antennas == 64);
    CHECK(c.n_users == 4);
    CHECK(c.k_values == std::vector<Index>{0, 8, 16});
    CHECK(c.snr_db_grid == std::vector<double>{-4.0, -2.0, 0.0, 2.0, 4.0});
    CHECK(c.n_realizations == 25);
    CHECK(c.seed == 99);
    CHECK(c.assignment == Scheme::scheme2);
    CHECK(c.scenario == Scenario::multi_user);
    CHECK(c.all_users);
    CHECK(c.output_path == "result.csv");
    CHECK_NOTHROW(c.validate());

    apply_setting(c, "trials", "7");
    CHECK(c.n_realizations == 7);

    CHECK_THROWS_AS(apply_setting(c, "bogus", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "trials", "many"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "scheme", "scheme3"), std::invalid_argument);
    std::istringstream bad("n-antennas 3\n");
    CHECK_THROWS_AS(load_config(c, bad), std::invalid_argument);
}

TEST_CASE("config validation")
{
    ExperimentConfig c = small_config();
    c.k_values = {13};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.snr_db_grid.clear();
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.n_realizations = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK(ExperimentConfig::default_snr_grid().size() == 21);
}

TEST_CASE("single-user sweep")
{
    const auto cfg = small_config();
    const auto r = run_single_user_sweep(cfg);
    CHECK(r.records.size() == 3 * 3 * 4);

    for (const double snr : cfg.snr_db_grid)
    {
        // K = N is the unquantized receiver
        CHECK(std::abs(r.find("gmi_nats", 12, snr).mean - r.find("cap_full", 12, snr).mean) <=
              1e-10 * r.find("cap_full", 12, snr).mean);
        CHECK(r.find("cap_sel", 0, snr).mean == 0.0);
        CHECK(r.find("gmi_nats", 3, snr).mean > r.find("gmi_nats", 0, snr).mean);
        const auto &f = r.find("fraction", 3, snr);
        CHECK(f.mean > 0.0);
        CHECK(f.mean <= 1.0);
        CHECK(std::isfinite(f.std_error));
    }

    const std::string csv = to_csv(r);
    CHECK(csv.rfind("scenario,N,M,K,snr_db,scheme,n_real,metric,mean,stderr\n", 0) == 0);
    CHECK(csv.find("single_user,12,1,3,-10,strongest_k,40,gmi_nats,") != std::string::npos);
}

TEST_CASE("sweeps are deterministic and independent of the worker count")
{
    const auto cfg = small_config();
    setenv("MIXADC_WORKERS", "1", 1);
    const std::string a = to_csv(run_single_user_sweep(cfg));
    setenv("MIXADC_WORKERS", "4", 1);
    const std::string b = to_csv(run_single_user_sweep(cfg));
    unsetenv("MIXADC_WORKERS");
    CHECK(a == b);
}

TEST_CASE("standard errors shrink like 1/sqrt(n)")
{
    auto cfg = small_config();
    cfg.k_values = {3};
    cfg.snr_db_grid = {0.0};
    cfg.n_realizations = 100;
    const double se_small = run_single_user_sweep(cfg).find("gmi_nats", 3, 0.0).std_error;
    cfg.n_realizations = 1600;
    const double se_large = run_single_user_sweep(cfg).find("gmi_nats", 3, 0.0).std_error;
    // expected ratio 4; allow sampling noise in the standard-error estimates themselves
    CHECK(se_small / se_large == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("multi-user sweep")
{
    auto cfg = small_config();
    cfg.n_users = 3;
    cfg.k_values = {0, 4, 12};
    cfg.assignment = Scheme::scheme1;
    const auto s1 = run_multi_user_sweep(cfg);
    cfg.assignment = Scheme::scheme2;
    const auto s2 = run_multi_user_sweep(cfg);

    for (const double snr : cfg.snr_db_grid)
    {
        // K = N: the mixed receiver is the unquantized MMSE receiver
        CHECK(s1.find("gmi_nats", 12, snr).mean == doctest::Approx(s1.find("mmse_fullres", 12, snr).mean).epsilon(1e-12));
        CHECK(s1.find("gmi_nats", 4, snr).mean >= s2.find("gmi_nats", 4, snr).mean);
        // the channels do not depend on the scheme
        CHECK(s1.find("per_user_cap", 4, snr).mean == s2.find("per_user_cap", 4, snr).mean);
    }

    cfg.assignment = Scheme::strongest_k;
    CHECK_THROWS_AS(run_multi_user_sweep(cfg), std::invalid_argument);

    cfg.assignment = Scheme::scheme1;
    cfg.all_users = true;
    const auto all = run_multi_user_sweep(cfg);
    for (const double snr : cfg.snr_db_grid)
    {
        // summed over users, linear MMSE cannot beat the sum capacity
        CHECK(all.find("gmi_nats", 12, snr).mean <= all.find("per_user_cap", 12, snr).mean * (1.0 + 1e-12));
        CHECK(all.find("gmi_nats", 4, snr).mean > 0.0);
    }
}

TEST_CASE("sum-rate sweep")
{
    auto cfg = small_config();
    cfg.k_values = {3};
    cfg.snr_db_grid = {0.0};
    cfg.assignment = Scheme::scheme1;
    cfg.user_counts = {1, 4};
    const auto r = run_sum_rate_vs_users(cfg);

    // M = 1 reproduces the single-user sweep on the same seed
    auto su_cfg = cfg;
    su_cfg.assignment = Scheme::strongest_k;
    const auto su = run_single_user_sweep(su_cfg);
    CHECK(r.find("gmi_nats", 3, 0.0, 1).mean == doctest::Approx(su.find("gmi_nats", 3, 0.0).mean).epsilon(1e-14));

    // the sum statistic is M times the mean per-user GMI over all users
    auto mu_cfg = cfg;
    mu_cfg.n_users = 4;
    mu_cfg.all_users = true;
    const auto mu = run_multi_user_sweep(mu_cfg);
    CHECK(r.find("gmi_nats", 3, 0.0, 4).mean == doctest::Approx(4.0 * mu.find("gmi_nats", 3, 0.0).mean).epsilon(1e-12));

    const auto &f = r.find("fraction", 3, 0.0, 4);
    CHECK(f.mean > 0.0);
    CHECK(f.mean <= 1.0);
}

TEST_CASE("verify report")
{
    ExperimentConfig cfg;
    const auto a = run_verify(cfg);
    for (const auto &c : a.checks)
    {
        INFO(c.name << ": " << c.observed << " vs " << c.tolerance);
        CHECK(c.passed);
    }
    CHECK(a.passed());
    CHECK(a.to_json() == run_verify(cfg).to_json());

    cfg.perturb_rr = 0.05;
    const auto bad = run_verify(cfg);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.checks.front().passed);
}

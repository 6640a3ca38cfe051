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
#include "mixadc/asymptotics.hpp"
#include "mixadc/gmi.hpp"
#include "mixadc/oracle.hpp"
#include "mixadc/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace mixadc {

namespace {

constexpr std::uint64_t verify_samples = 200000;
constexpr int verify_configs = 12;

struct RandomCase
{
    ChannelRealization channel;
    BindingVector delta;
    double energy;
};

RandomCase random_case(Rng &rng, Index max_users)
{
    std::uniform_int_distribution<Index> n_dist(2, 4), m_dist(1, max_users);
    std::uniform_real_distribution<double> log_es(-1.0, 1.0);
    const Index n = n_dist(rng), m = m_dist(rng);
    auto channel = generate_rayleigh(n, m, rng());
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (auto &b : bits)
        b = static_cast<std::uint8_t>(rng() & 1u);
    return {std::move(channel), BindingVector(std::move(bits)), std::pow(10.0, log_es(rng))};
}

double z_score(cplx estimate, cplx target, cplx se)
{
    auto rail = [](double e, double t, double s) { return s > 0.0 ? std::abs(e - t) / s : (e == t ? 0.0 : INFINITY); };
    return std::max(rail(estimate.real(), target.real(), se.real()), rail(estimate.imag(), target.imag(), se.imag()));
}

// Linear-MMSE rate of user j from the matrix-inversion-lemma form
// log(1 + Es h_j^H (I + Es sum_{i != j} h_i h_i^H)^{-1} h_j).
double mmse_rate_reference(const ChannelRealization &channel, double energy, Index user)
{
    const Index n = channel.n_antennas();
    Eigen::MatrixXcd interference = Eigen::MatrixXcd::Identity(n, n);
    for (Index i = 0; i < channel.n_users(); ++i)
    {
        if (i == user)
            continue;
        const Eigen::VectorXcd hi = channel.user_row(i);
        interference += energy * hi * hi.adjoint();
    }
    const Eigen::VectorXcd hj = channel.user_row(user);
    const cplx q = hj.dot(interference.partialPivLu().solve(hj));
    return std::log1p(energy * q.real());
}

CheckResult check(std::string name, std::string comparison, double tolerance, double observed)
{
    return {std::move(name), std::move(comparison), tolerance, observed, observed <= tolerance};
}

} // namespace

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::string VerifyReport::to_json() const
{
    nlohmann::json j;
    j["seed"] = seed;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto &c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"comparison", c.comparison},
                               {"tolerance", c.tolerance},
                               {"observed", c.observed},
                               {"passed", c.passed}});
    return j.dump(2);
}

VerifyReport run_verify(const ExperimentConfig &config)
{
    config.validate();
    VerifyReport report;
    report.seed = config.seed;

    // Closed-form moments and kappa against Monte Carlo.
    {
        Rng rng = make_stream(config.seed, StreamTag::channel, 0);
        double worst_moment = 0.0, worst_kappa = 0.0;
        for (int c = 0; c < verify_configs; ++c)
        {
            const RandomCase rc = random_case(rng, 2);
            const Index user = rc.channel.n_users() - 1;
            MomentModel closed = moments_multi_user(rc.channel, rc.delta, rc.energy, user);
            const std::uint64_t sample_seed = rng();
            const MomentEstimate est =
                estimate_moments(rc.channel, rc.delta, rc.energy, verify_samples, sample_seed, user);

            Eigen::MatrixXcd target_rr = closed.r_rr;
            target_rr.array() += config.perturb_rr;
            for (Index n = 0; n < closed.r_rx.size(); ++n)
            {
                worst_moment = std::max(worst_moment, z_score(est.r_rx_hat(n), closed.r_rx(n), est.r_rx_se(n)));
                for (Index m = 0; m < closed.r_rx.size(); ++m)
                    worst_moment = std::max(worst_moment,
                                            z_score(est.r_rr_hat(n, m), target_rr(n, m), est.r_rr_se(n, m)));
            }

            const GmiResult g = gmi_from_moments(closed);
            const KappaEstimate k =
                estimate_kappa(rc.channel, rc.delta, g.combiner, rc.energy, verify_samples, sample_seed, user);
            worst_kappa = std::max(worst_kappa, std::abs(k.kappa - g.kappa) / k.standard_error);
        }
        report.checks.push_back(check("moments_match_monte_carlo", "max |z|", 4.0, worst_moment));
        report.checks.push_back(check("kappa_matches_monte_carlo", "max |z|", 4.0, worst_kappa));
    }

    // Unquantized and single-user reductions.
    {
        double worst_su = 0.0, worst_mmse = 0.0, worst_m1 = 0.0;
        for (std::uint64_t t = 0; t < 20; ++t)
        {
            const double es = std::pow(10.0, -1.0 + 0.1 * static_cast<double>(t));
            const auto h = generate_rayleigh_trial(8, 1, config.seed, 100 + t);
            const double exact = std::log1p(h.coefficients().squaredNorm() * es);
            const double g = gmi_from_moments(moments_single_user(h, BindingVector::all_high(8), es)).gmi_nats;
            worst_su = std::max(worst_su, std::abs(g - exact) / exact);

            const auto hm = generate_rayleigh_trial(8, 3, config.seed, 200 + t);
            const SnrSpec snr = SnrSpec::from_linear(3.0 * es, 3);
            const auto all = gmi_all_users(hm, BindingVector::all_high(8), snr);
            for (Index j = 0; j < 3; ++j)
            {
                const double ref = mmse_rate_reference(hm, es, j);
                worst_mmse = std::max(worst_mmse, std::abs(all[static_cast<std::size_t>(j)].gmi_nats - ref) / ref);
            }

            const BindingVector mixed = strongest_k(h, 3);
            const MomentModel a = moments_single_user(h, mixed, es);
            const MomentModel b = moments_multi_user(h, mixed, es, 0);
            worst_m1 = std::max({worst_m1, (a.r_rx - b.r_rx).cwiseAbs().maxCoeff(),
                                 (a.r_rr - b.r_rr).cwiseAbs().maxCoeff()});
        }
        report.checks.push_back(check("unquantized_single_user_reduction", "max rel err", 1e-10, worst_su));
        report.checks.push_back(check("unquantized_multi_user_mmse_reduction", "max rel err", 1e-10, worst_mmse));
        report.checks.push_back(check("single_user_equals_multi_user_m1", "max abs diff", 1e-14, worst_m1));
    }

    // MMSE combiner optimality.
    {
        Rng rng = make_stream(config.seed, StreamTag::samples, 1);
        ComplexGaussian cn(1.0);
        double worst = -INFINITY;
        for (int c = 0; c < 20; ++c)
        {
            const RandomCase rc = random_case(rng, 1);
            const MomentModel mm = moments_single_user(rc.channel, rc.delta, rc.energy);
            const double best = gmi_from_moments(mm).kappa;
            for (int w = 0; w < 100; ++w)
            {
                Eigen::VectorXcd v(rc.channel.n_antennas());
                for (auto &x : v)
                    x = cn(rng);
                worst = std::max(worst, kappa_for_combiner(mm, v) - best);
            }
        }
        report.checks.push_back(check("mmse_combiner_optimal", "max kappa(w) - kappa(w_opt)", 1e-12, worst));
    }

    // Low- and high-SNR asymptotics.
    {
        double worst_low = 0.0, worst_high = 0.0;
        for (std::uint64_t t = 0; t < 10; ++t)
        {
            const auto h = generate_rayleigh_trial(6, 1, config.seed, 300 + t);
            const BindingVector low_delta = strongest_k(h, static_cast<Index>(t % 7));
            const double es_low = 1e-4;
            const double exact_low = gmi_from_moments(moments_single_user(h, low_delta, es_low)).gmi_nats;
            const double slope = low_snr_slope(h, low_delta);
            worst_low = std::max(worst_low, std::abs(exact_low / es_low - slope) / slope);

            const BindingVector high_delta = strongest_k(h, 1 + static_cast<Index>(t % 6));
            const double es_high = 1e4;
            const double exact_high = gmi_from_moments(moments_single_user(h, high_delta, es_high)).gmi_nats;
            const double approx = gmi_high_snr_approx(h, high_delta, es_high);
            worst_high = std::max(worst_high, std::abs(exact_high - approx) / exact_high);
        }
        report.checks.push_back(check("low_snr_slope", "max rel err", 0.01, worst_low));
        report.checks.push_back(check("high_snr_approximation", "max rel err", 0.01, worst_high));

        const auto one = ChannelRealization::single_user(Eigen::VectorXcd::Ones(1));
        const double g = gmi_from_moments(moments_single_user(one, BindingVector::all_low(1), 1e6)).gmi_nats;
        const double limit = std::log(std::numbers::pi / (std::numbers::pi - 2.0));
        report.checks.push_back(check("one_bit_high_snr_limit", "abs err", 1e-3, std::abs(g - limit)));
    }

    // Brute-force assignment agrees with strongest-K at both SNR extremes.
    {
        int mismatches = 0;
        for (std::uint64_t t = 0; t < 20; ++t)
        {
            const auto h = generate_rayleigh_trial(6, 1, config.seed, 400 + t);
            const Index k = 1 + static_cast<Index>(t % 5);
            for (const double es : {1e-4, 1e4})
                if (exhaustive_best(h, k, es, Objective::single_user) != strongest_k(h, k))
                    ++mismatches;
        }
        report.checks.push_back(check("exhaustive_matches_strongest_k", "mismatches", 0.0, mismatches));
    }

    return report;
}

} // namespace mixadc

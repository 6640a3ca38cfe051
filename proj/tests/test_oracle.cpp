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

#include "mixadc/gmi.hpp"
#include "mixadc/oracle.hpp"

#include <cmath>
#include <numbers>

using namespace mixadc;

namespace {

constexpr double pi = std::numbers::pi;

ChannelRealization su(std::initializer_list<cplx> h)
{
    Eigen::VectorXcd v(static_cast<Index>(h.size()));
    Index i = 0;
    for (const cplx c : h)
        v(i++) = c;
    return ChannelRealization::single_user(v);
}

bool within_4se(cplx est, cplx target, cplx se)
{
    return std::abs(est.real() - target.real()) <= 4.0 * se.real() + 1e-15 &&
           std::abs(est.imag() - target.imag()) <= 4.0 * se.imag() + 1e-15;
}

} // namespace

TEST_CASE("estimate_moments: unquantized single antenna")
{
    const auto est = estimate_moments(su({1.0}), BindingVector({1}), 1.0, 1000000, 1);
    CHECK(est.n_samples == 1000000);
    CHECK(within_4se(est.r_rx_hat(0), 1.0, est.r_rx_se(0)));
    CHECK(within_4se(est.r_rr_hat(0, 0), 2.0, est.r_rr_se(0, 0)));
}

TEST_CASE("estimate_moments: one-bit correlation follows the Bussgang gain")
{
    const auto est = estimate_moments(su({1.0}), BindingVector({0}), 1.0, 1000000, 2);
    CHECK(within_4se(est.r_rx_hat(0), std::sqrt(2.0 / pi), est.r_rx_se(0)));
    // |r|^2 = 2 for every one-bit sample
    CHECK(est.r_rr_hat(0, 0) == cplx(2.0, 0.0));
}

TEST_CASE("estimate_moments is deterministic and Hermitian")
{
    const auto h = generate_rayleigh(3, 2, 5);
    const BindingVector d({0, 1, 0});
    const auto a = estimate_moments(h, d, 0.5, 100000, 9, 1);
    const auto b = estimate_moments(h, d, 0.5, 100000, 9, 1);
    CHECK(a.r_rx_hat == b.r_rx_hat);
    CHECK(a.r_rr_hat == b.r_rr_hat);
    CHECK(a.r_rr_hat == a.r_rr_hat.adjoint());
    CHECK_THROWS_AS(estimate_moments(h, d, 0.5, 999, 9), std::invalid_argument);
    CHECK_THROWS_AS(estimate_moments(h, d, 0.5, 1000, 9, 2), std::out_of_range);
}

TEST_CASE("estimate_moments does not depend on the worker count")
{
    const auto h = generate_rayleigh(3, 1, 6);
    const BindingVector d({0, 0, 1});
    setenv("MIXADC_WORKERS", "1", 1);
    const auto one = estimate_moments(h, d, 2.0, 300000, 4);
    setenv("MIXADC_WORKERS", "3", 1);
    const auto three = estimate_moments(h, d, 2.0, 300000, 4);
    unsetenv("MIXADC_WORKERS");
    CHECK(one.r_rx_hat == three.r_rx_hat);
    CHECK(one.r_rr_hat == three.r_rr_hat);
}

TEST_CASE("estimate_kappa")
{
    SUBCASE("one-bit single antenna, optimal combiner")
    {
        const auto h = su({1.0});
        const auto g = gmi_from_moments(moments_single_user(h, BindingVector({0}), 1.0));
        const auto k = estimate_kappa(h, BindingVector({0}), g.combiner, 1.0, 1000000, 3);
        CHECK(std::abs(k.kappa - 1.0 / pi) <= 4.0 * k.standard_error);
        CHECK(k.standard_error > 0.0);
    }
    SUBCASE("unquantized closed form")
    {
        const auto h = generate_rayleigh(4, 1, 8);
        const double es = 0.3;
        const auto g = gmi_from_moments(moments_single_user(h, BindingVector::all_high(4), es));
        const auto k = estimate_kappa(h, BindingVector::all_high(4), g.combiner, es, 1000000, 4);
        const double p = h.coefficients().squaredNorm() * es;
        CHECK(std::abs(k.kappa - p / (1.0 + p)) <= 4.0 * k.standard_error);
    }
    SUBCASE("combiner orthogonal to the correlation vector")
    {
        const auto h = su({1.0, cplx(0.0, 1.0)});
        const BindingVector d({0, 1});
        const auto m = moments_single_user(h, d, 1.0);
        // w^H r_rx = 0 for w = (r_rx(1), -r_rx(0))^*
        Eigen::VectorXcd w(2);
        w << std::conj(m.r_rx(1)), -std::conj(m.r_rx(0));
        REQUIRE(std::abs(w.dot(m.r_rx)) < 1e-14);
        const auto k = estimate_kappa(h, d, w, 1.0, 1000000, 5);
        CHECK(k.kappa <= 1e-4);
        CHECK(k.kappa <= 4.0 * k.standard_error);
    }
}

TEST_CASE("codebook_size")
{
    CHECK(codebook_size(std::log(2.0), 1) == 2);
    CHECK(codebook_size(std::log(16.0) / 4.0, 4) == 16);
    CHECK(codebook_size(0.0, 10) == 1);
    CHECK(codebook_size(std::log(65536.0) / 16.0, 16) == 65536);
    CHECK_THROWS_AS(codebook_size(1.0, 128), std::invalid_argument);
}

TEST_CASE("nearest-neighbour decoding without noise never errs")
{
    const auto h = su({1.0, cplx(0.5, -0.2)});
    DecodeConfig cfg;
    cfg.rate_nats = std::log(2.0);
    cfg.codeword_length = 1;
    cfg.n_trials = 500;
    cfg.noise_variance = 0.0;
    const auto r = nn_decode_experiment(h, BindingVector::all_high(2), 1.0, cfg);
    CHECK(r.n_messages == 2);
    CHECK(r.n_errors == 0);
}

TEST_CASE("nearest-neighbour decoding is deterministic")
{
    const auto h = su({1.0});
    DecodeConfig cfg;
    cfg.rate_nats = 0.05;
    cfg.codeword_length = 32;
    cfg.n_trials = 300;
    cfg.seed = 3;
    const auto a = nn_decode_experiment(h, BindingVector({0}), 0.1, cfg);
    const auto b = nn_decode_experiment(h, BindingVector({0}), 0.1, cfg);
    CHECK(a.n_errors == b.n_errors);
    CHECK(a.n_messages == 4);
}

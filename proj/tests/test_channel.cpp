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

#include "mixadc/channel.hpp"
#include "mixadc/rng.hpp"

#include <cmath>
#include <sstream>

using namespace mixadc;

TEST_CASE("generate_rayleigh is deterministic in the seed")
{
    const auto a = generate_rayleigh(1, 1, 42);
    const auto b = generate_rayleigh(1, 1, 42);
    CHECK(a.coefficients()(0, 0) == b.coefficients()(0, 0));
    CHECK(generate_rayleigh(1, 1, 43).coefficients()(0, 0) != a.coefficients()(0, 0));

    const auto t1 = generate_rayleigh_trial(16, 3, 9, 5);
    const auto t2 = generate_rayleigh_trial(16, 3, 9, 5);
    CHECK(t1.coefficients() == t2.coefficients());
}

TEST_CASE("generate_rayleigh rejects zero dimensions")
{
    CHECK_THROWS_AS(generate_rayleigh(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_rayleigh(1, 0, 1), std::invalid_argument);
}

TEST_CASE("pooled Rayleigh draws are CN(0, 1)")
{
    // 10^5 pooled coefficients: E|h|^2 = 1, E h = 0 with per-rail variance 1/2.
    double power = 0.0;
    cplx sum = 0.0;
    const int n_draws = 1000;
    const Index n_ant = 100;
    for (int t = 0; t < n_draws; ++t)
    {
        const auto h = generate_rayleigh_trial(n_ant, 1, 2024, t);
        power += h.coefficients().squaredNorm();
        sum += h.coefficients().sum();
    }
    const double n = n_draws * static_cast<double>(n_ant);
    const double mean_power = power / n;
    CHECK(mean_power >= 0.99);
    CHECK(mean_power <= 1.01);
    const double rail_se = std::sqrt(0.5 / n);
    CHECK(std::abs(sum.real() / n) <= 4.0 * rail_se);
    CHECK(std::abs(sum.imag() / n) <= 4.0 * rail_se);
}

TEST_CASE("column and row accessors view the same M x N data")
{
    const auto h = generate_rayleigh(2, 3, 11);
    REQUIRE(h.n_users() == 3);
    REQUIRE(h.n_antennas() == 2);
    for (Index j = 0; j < 3; ++j)
        for (Index n = 0; n < 2; ++n)
        {
            CHECK(h.antenna_column(n)(j) == h.coefficients()(j, n));
            CHECK(h.user_row(j)(n) == h.coefficients()(j, n));
        }
    CHECK_THROWS_AS(h.antenna_column(2), std::out_of_range);
    CHECK_THROWS_AS(h.user_row(3), std::out_of_range);
    CHECK_THROWS_AS(h.vector(), std::logic_error);
    CHECK(h.antenna_powers()(1) == doctest::Approx(h.antenna_column(1).squaredNorm()));
}

TEST_CASE("non-finite coefficients are rejected")
{
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Ones(1, 2);
    bad(0, 1) = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(ChannelRealization{bad}, std::invalid_argument);
}

TEST_CASE("snr_from_db")
{
    const auto unity = snr_from_db(0.0, 1);
    CHECK(unity.snr_d == 1.0);
    CHECK(unity.per_user_energy == 1.0);

    const auto shared = snr_from_db(0.0, 10);
    CHECK(shared.per_user_energy == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(shared.per_user_energy * 10 == shared.snr_d);

    CHECK(snr_from_db(10.0, 1).snr_d == doctest::Approx(10.0).epsilon(1e-15));
    CHECK_THROWS_AS(SnrSpec::from_linear(0.0), std::invalid_argument);
}

TEST_CASE("channel CSV round trip is exact")
{
    const auto h = generate_rayleigh(4, 3, 5);
    std::stringstream ss;
    write_channel_csv(ss, h);
    const auto back = read_channel_csv(ss);
    CHECK(back.coefficients() == h.coefficients());

    CHECK(parse_complex("1.5-0.25j") == cplx(1.5, -0.25));
    CHECK(parse_complex("-2e-3+1e+2j") == cplx(-2e-3, 100.0));
    CHECK_THROWS_AS(parse_complex("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1.5+2i"), std::invalid_argument);

    std::stringstream ragged("1+0j,2+0j\n3+0j\n");
    CHECK_THROWS_AS(read_channel_csv(ragged), std::invalid_argument);
}

TEST_CASE("substream seeds differ across tags and indices")
{
    CHECK(derive_seed(1, StreamTag::channel, 0) != derive_seed(1, StreamTag::channel, 1));
    CHECK(derive_seed(1, StreamTag::channel, 0) != derive_seed(1, StreamTag::assignment, 0));
    CHECK(derive_seed(1, StreamTag::channel, 0) != derive_seed(2, StreamTag::channel, 0));
}

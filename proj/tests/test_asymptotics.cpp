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

#include "mixadc/assignment.hpp"
#include "mixadc/asymptotics.hpp"
#include "mixadc/errors.hpp"
#include "mixadc/gmi.hpp"

#include <cmath>
#include <numbers>
#include <random>

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

double exact_gmi(const ChannelRealization &h, const BindingVector &d, double es)
{
    return gmi_from_moments(moments_single_user(h, d, es)).gmi_nats;
}

double exact_effective_snr(const ChannelRealization &h, const BindingVector &d, double es)
{
    return gmi_from_moments(moments_single_user(h, d, es)).effective_snr;
}

} // namespace

TEST_CASE("low_snr_slope")
{
    const auto h = generate_rayleigh(5, 1, 3);
    CHECK(low_snr_slope(h, BindingVector::all_high(5)) == doctest::Approx(h.coefficients().squaredNorm()));
    CHECK(low_snr_slope(su({1.0, 1.0}), BindingVector({1, 0})) == doctest::Approx(1.6366197723675813).epsilon(1e-15));
    CHECK(low_snr_slope(su({1.0}), BindingVector({0})) == doctest::Approx(2.0 / pi).epsilon(1e-15));
}

TEST_CASE("high_snr_decomposition: closed-form instances")
{
    SUBCASE("no one-bit antennas")
    {
        const auto h = generate_rayleigh(4, 1, 10);
        const auto d = high_snr_decomposition(h, BindingVector::all_high(4));
        CHECK(d.q.size() == 0);
        CHECK(d.constant_term == 0.0);
        CHECK(d.linear_coeff == doctest::Approx(h.coefficients().squaredNorm()));
        CHECK(gmi_high_snr_approx(h, BindingVector::all_high(4), 37.0) ==
              std::log1p(h.coefficients().squaredNorm() * 37.0));
    }
    SUBCASE("single one-bit antenna")
    {
        const auto d = high_snr_decomposition(su({1.0}), BindingVector({0}));
        CHECK(d.b(0, 0) == 2.0);
        CHECK(d.quadratic_form == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(d.constant_term == doctest::Approx(1.7519383938841087).epsilon(1e-14));
        // The exact kappa tends to 2/pi, i.e. effective SNR 2/(pi - 2).
        CHECK(exact_effective_snr(su({1.0}), BindingVector({0}), 1e8) == doctest::Approx(d.constant_term).epsilon(1e-6));
    }
    SUBCASE("two one-bit antennas 45 degrees apart")
    {
        const auto h = su({1.0, std::polar(1.0, pi / 4.0)});
        const auto d = high_snr_decomposition(h, BindingVector({0, 0}));
        CHECK(std::abs(d.b(0, 1) - cplx(1.0, -1.0)) < 1e-14);
        CHECK(std::abs(d.b(1, 0) - cplx(1.0, 1.0)) < 1e-14);
        CHECK(d.quadratic_form == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
        CHECK(d.constant_term == doctest::Approx(2.9346293929659982).epsilon(1e-13));
        const double exact = exact_effective_snr(h, BindingVector({0, 0}), 1e6);
        CHECK(std::abs(exact - d.constant_term) <= 0.01 * d.constant_term);
    }
}

TEST_CASE("high_snr_decomposition rearranges high-resolution antennas first")
{
    const auto h = su({cplx(0.2, 0.1), cplx(2.0, -1.0), cplx(-0.3, 0.9), cplx(1.1, 0.4)});
    const BindingVector delta({0, 1, 0, 1});
    const auto d = high_snr_decomposition(h, delta);
    CHECK(d.high_antennas == std::vector<Index>{1, 3});
    CHECK(d.low_antennas == std::vector<Index>{0, 2});
    CHECK(d.p(0) == h.vector()(1));
    CHECK(d.linear_coeff == doctest::Approx(std::norm(h.vector()(1)) + std::norm(h.vector()(3))));
    for (Index i = 0; i < d.q.size(); ++i)
        CHECK(std::abs(std::abs(d.q(i)) - 1.0) < 1e-15);
    CHECK((d.b - d.b.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(d.constant_term >= 0.0);
}

TEST_CASE("high_snr_decomposition degenerate configurations")
{
    CHECK_THROWS_AS(high_snr_decomposition(su({1.0, 0.0}), BindingVector({1, 0})), DegenerateConfiguration);

    try
    {
        high_snr_decomposition(su({1.0, cplx(0.3, 0.1), cplx(2.0, 0.0)}), BindingVector({0, 0, 0}));
        FAIL("expected DegenerateConfiguration");
    }
    catch (const DegenerateConfiguration &e)
    {
        CHECK(e.first() == 0);
        CHECK(e.second() == 2);
    }
    // a quarter-turn apart is just as singular
    CHECK_THROWS_AS(high_snr_decomposition(su({1.0, cplx(0.0, 3.0)}), BindingVector({0, 0})),
                    DegenerateConfiguration);
}

TEST_CASE("asymptotic approximations track the exact GMI")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t)
    {
        const Index n = 2 + static_cast<Index>(rng() % 7);
        const auto h = generate_rayleigh(n, 1, rng());
        const Index k = static_cast<Index>(rng() % static_cast<std::uint64_t>(n + 1));
        const auto d = strongest_k(h, k);

        const double low = 1e-4;
        const double slope = low_snr_slope(h, d);
        CHECK(std::abs(exact_gmi(h, d, low) - gmi_low_snr_approx(h, d, low)) <= 0.01 * slope * low);

        if (k >= 1)
        {
            const double high = 1e4;
            const double exact = exact_gmi(h, d, high);
            CHECK(std::abs(exact - gmi_high_snr_approx(h, d, high)) <= 0.01 * exact);
        }
    }
}

TEST_CASE("one-bit part of the effective SNR converges to the constant term")
{
    // relative gap |exact effective SNR - ||p||^2 Es - constant| / constant
    std::mt19937_64 rng(22);
    int within_at_1e4 = 0;
    for (int t = 0; t < 20; ++t)
    {
        const Index n = 3 + static_cast<Index>(rng() % 5);
        const auto h = generate_rayleigh(n, 1, rng());
        const auto d = strongest_k(h, static_cast<Index>(rng() % 3));
        const auto dec = high_snr_decomposition(h, d);

        double previous = INFINITY;
        for (const double es : {1e2, 1e3, 1e4, 1e5})
        {
            const double gap = std::abs(exact_effective_snr(h, d, es) - dec.linear_coeff * es - dec.constant_term) /
                               dec.constant_term;
            CHECK(gap < previous);
            if (es == 1e4 && gap <= 0.01)
                ++within_at_1e4;
            previous = gap;
        }
        CHECK(previous <= 0.01);
    }
    // Instance 3 converges slowly: 2.7% at Es = 1e4, 0.6% at 1e5.
    CHECK(within_at_1e4 == 19);
}

TEST_CASE("one-bit antennas help less as SNR grows")
{
    // Mean gain of the mixed receiver over antenna selection with the same delta.
    const Index n = 16, k = 4;
    const int trials = 200;
    std::vector<double> gain;
    for (const double db : {0.0, 10.0, 20.0, 30.0, 40.0})
    {
        const auto snr = snr_from_db(db, 1);
        double total = 0.0;
        for (int t = 0; t < trials; ++t)
        {
            const auto h = generate_rayleigh_trial(n, 1, 99, static_cast<std::uint64_t>(t));
            const auto d = strongest_k(h, k);
            total += gmi_single_user(h, d, snr).gmi_nats - capacity_selection(h, d, snr);
        }
        gain.push_back(total / trials);
    }
    CHECK(gain.front() > 0.0);
    for (std::size_t i = 1; i < gain.size(); ++i)
        CHECK(gain[i] < gain[i - 1]);
}

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


#include "mixadc/asymptotics.hpp"

#include "mixadc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mixadc {

namespace {

void check_single_user(const ChannelRealization &channel, const BindingVector &delta)
{
    if (!channel.is_single_user())
        throw std::invalid_argument("asymptotics: single-user channel required");
    if (delta.size() != channel.n_antennas())
        throw std::invalid_argument("asymptotics: binding vector length mismatch");
}

// A phasor pair whose product lies on an axis makes the two one-bit outputs
// identical up to a factor in {1, -1, i, -i}.
constexpr double phase_degeneracy_tol = 1e-9;
constexpr double denominator_floor = 1e-9;

} // namespace

double low_snr_slope(const ChannelRealization &channel, const BindingVector &delta)
{
    check_single_user(channel, delta);
    const Eigen::VectorXd powers = channel.antenna_powers();
    double slope = 0.0;
    for (Index n = 0; n < powers.size(); ++n)
        slope += (delta.high(n) ? 1.0 : 2.0 / std::numbers::pi) * powers(n);
    return slope;
}

HighSnrDecomposition high_snr_decomposition(const ChannelRealization &channel,
                                            const BindingVector &delta)
{
    check_single_user(channel, delta);
    const Eigen::VectorXcd h = channel.vector();

    HighSnrDecomposition out;
    out.high_antennas = delta.high_indices();
    out.low_antennas = delta.low_indices();
    const auto k = static_cast<Index>(out.high_antennas.size());
    const auto n_low = static_cast<Index>(out.low_antennas.size());

    out.p.resize(k);
    for (Index i = 0; i < k; ++i)
        out.p(i) = h(out.high_antennas[i]);
    out.linear_coeff = out.p.squaredNorm();

    out.q.resize(n_low);
    for (Index i = 0; i < n_low; ++i)
    {
        const cplx g = h(out.low_antennas[i]);
        if (std::abs(g) == 0.0)
            throw DegenerateConfiguration("one-bit antenna " + std::to_string(out.low_antennas[i]) +
                                              " has zero channel gain",
                                          static_cast<std::size_t>(out.low_antennas[i]),
                                          static_cast<std::size_t>(out.low_antennas[i]));
        out.q(i) = g / std::abs(g);
    }

    out.b.resize(n_low, n_low);
    constexpr double four_over_pi = 4.0 / std::numbers::pi;
    for (Index m = 0; m < n_low; ++m)
    {
        out.b(m, m) = 2.0;
        for (Index n = 0; n < m; ++n)
        {
            const cplx u = out.q(n) * std::conj(out.q(m));
            const double re = std::clamp(u.real(), -1.0, 1.0);
            const double im = std::clamp(u.imag(), -1.0, 1.0);
            if (std::min(std::abs(re), std::abs(im)) < phase_degeneracy_tol)
            {
                const auto a = static_cast<std::size_t>(out.low_antennas[n]);
                const auto c = static_cast<std::size_t>(out.low_antennas[m]);
                throw DegenerateConfiguration("one-bit antennas " + std::to_string(a) + " and " +
                                                  std::to_string(c) +
                                                  " have phases differing by a multiple of pi/2",
                                              a, c);
            }
            const cplx v = four_over_pi * cplx(std::asin(re), std::asin(im));
            out.b(n, m) = v;
            out.b(m, n) = std::conj(v);
        }
    }

    if (n_low == 0)
        return out;

    Eigen::LLT<Eigen::MatrixXcd> llt(out.b);
    if (llt.info() != Eigen::Success)
        throw DegenerateConfiguration("limiting one-bit covariance is singular",
                                      static_cast<std::size_t>(out.low_antennas.front()),
                                      static_cast<std::size_t>(out.low_antennas.back()));
    out.quadratic_form = out.q.dot(llt.solve(out.q)).real();

    const double denominator = std::numbers::pi - 4.0 * out.quadratic_form;
    if (denominator <= denominator_floor)
        throw DegenerateConfiguration("high-SNR constant term undefined: pi - 4 q^H B^-1 q = " +
                                          std::to_string(denominator),
                                      static_cast<std::size_t>(out.low_antennas.front()),
                                      static_cast<std::size_t>(out.low_antennas.back()));
    out.constant_term = 4.0 * out.quadratic_form / denominator;
    return out;
}

double gmi_low_snr_approx(const ChannelRealization &channel, const BindingVector &delta,
                          double energy)
{
    if (!(energy > 0.0))
        throw std::invalid_argument("energy must be positive");
    return low_snr_slope(channel, delta) * energy;
}

double gmi_high_snr_approx(const ChannelRealization &channel, const BindingVector &delta,
                           double energy)
{
    if (!(energy > 0.0))
        throw std::invalid_argument("energy must be positive");
    const HighSnrDecomposition d = high_snr_decomposition(channel, delta);
    return std::log1p(d.linear_coeff * energy + d.constant_term);
}

} // namespace mixadc

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


#include "mixadc/frontend.hpp"

#include "mixadc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mixadc {

BindingVector::BindingVector(std::vector<std::uint8_t> delta)
    : delta_(std::move(delta))
{
    for (const auto d : delta_)
    {
        if (d > 1)
            throw std::invalid_argument("BindingVector: entries must be 0 or 1");
        k_high_ += d;
    }
}

BindingVector BindingVector::all_high(Index n)
{
    return BindingVector(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1));
}

BindingVector BindingVector::all_low(Index n)
{
    return BindingVector(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

BindingVector BindingVector::from_indices(Index n, std::span<const Index> high)
{
    std::vector<std::uint8_t> delta(static_cast<std::size_t>(n), 0);
    for (const Index i : high)
    {
        if (i < 0 || i >= n)
            throw std::out_of_range("BindingVector::from_indices: index out of range");
        if (delta[static_cast<std::size_t>(i)])
            throw std::invalid_argument("BindingVector::from_indices: duplicate index");
        delta[static_cast<std::size_t>(i)] = 1;
    }
    return BindingVector(std::move(delta));
}

std::vector<Index> BindingVector::high_indices() const
{
    std::vector<Index> out;
    for (std::size_t n = 0; n < delta_.size(); ++n)
        if (delta_[n])
            out.push_back(static_cast<Index>(n));
    return out;
}

std::vector<Index> BindingVector::low_indices() const
{
    std::vector<Index> out;
    for (std::size_t n = 0; n < delta_.size(); ++n)
        if (!delta_[n])
            out.push_back(static_cast<Index>(n));
    return out;
}

std::ostream &operator<<(std::ostream &out, const BindingVector &delta)
{
    out << '[';
    for (Index n = 0; n < delta.size(); ++n)
        out << (n ? "," : "") << int(delta.high(n));
    return out << ']';
}

cplx one_bit(cplx value) noexcept
{
    return {value.real() >= 0.0 ? 1.0 : -1.0, value.imag() >= 0.0 ? 1.0 : -1.0};
}

Eigen::VectorXcd quantize(const Eigen::VectorXcd &analog, const BindingVector &delta)
{
    if (analog.size() != delta.size())
        throw std::invalid_argument("quantize: analog length does not match binding vector");
    Eigen::VectorXcd out(analog.size());
    for (Index n = 0; n < analog.size(); ++n)
        out(n) = delta.high(n) ? analog(n) : one_bit(analog(n));
    return out;
}

namespace {

void check_inputs(const ChannelRealization &channel, const BindingVector &delta, double energy)
{
    if (delta.size() != channel.n_antennas())
        throw std::invalid_argument("binding vector length does not match antenna count");
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw std::invalid_argument("per-user energy must be positive and finite");
}

double checked_arcsin(double u)
{
    if (std::abs(u) > 1.0 + arcsine_slack)
        throw InvariantViolation("arcsine argument " + std::to_string(u) + " outside [-1, 1]");
    return std::asin(std::clamp(u, -1.0, 1.0));
}

// Bussgang gain of a one-bit antenna with aggregate power p:
// sqrt(4 / (pi (p Es + 1))). High-resolution antennas pass with gain 1.
Eigen::VectorXd antenna_gains(const Eigen::VectorXd &powers, const BindingVector &delta,
                              double energy)
{
    Eigen::VectorXd g(powers.size());
    for (Index n = 0; n < powers.size(); ++n)
        g(n) = delta.high(n) ? 1.0 : std::sqrt(4.0 / (std::numbers::pi * (powers(n) * energy + 1.0)));
    return g;
}

} // namespace

Eigen::MatrixXcd covariance_multi_user(const ChannelRealization &channel,
                                       const BindingVector &delta, double energy)
{
    check_inputs(channel, delta, energy);

    const auto &h = channel.coefficients();
    const Index n_ant = channel.n_antennas();
    const Eigen::VectorXd powers = channel.antenna_powers();
    const Eigen::VectorXd gain = antenna_gains(powers, delta, energy);
    Eigen::VectorXd scale(n_ant);
    for (Index n = 0; n < n_ant; ++n)
        scale(n) = std::sqrt(powers(n) * energy + 1.0);

    // gram(n, m) = h_n^T h_m^*
    const Eigen::MatrixXcd gram = h.transpose() * h.conjugate();

    Eigen::MatrixXcd r_rr(n_ant, n_ant);
    constexpr double four_over_pi = 4.0 / std::numbers::pi;
    for (Index m = 0; m < n_ant; ++m)
    {
        r_rr(m, m) = delta.high(m) ? 1.0 + powers(m) * energy : 2.0;
        for (Index n = 0; n < m; ++n)
        {
            const cplx c = gram(n, m) * energy;
            cplx v;
            if (delta.high(n) || delta.high(m))
            {
                v = c * (gain(n) * gain(m));
            }
            else
            {
                const double denom = scale(n) * scale(m);
                v = four_over_pi * cplx(checked_arcsin(c.real() / denom), checked_arcsin(c.imag() / denom));
            }
            r_rr(n, m) = v;
            r_rr(m, n) = std::conj(v);
        }
    }
    return r_rr;
}

Eigen::VectorXcd correlation_multi_user(const ChannelRealization &channel,
                                        const BindingVector &delta, double energy, Index user)
{
    check_inputs(channel, delta, energy);
    if (user < 0 || user >= channel.n_users())
        throw std::out_of_range("user index out of range");

    const Eigen::VectorXd gain = antenna_gains(channel.antenna_powers(), delta, energy);
    Eigen::VectorXcd r_rx(channel.n_antennas());
    for (Index n = 0; n < channel.n_antennas(); ++n)
        r_rx(n) = channel.coefficients()(user, n) * (energy * gain(n));
    return r_rx;
}

MomentModel moments_multi_user(const ChannelRealization &channel, const BindingVector &delta,
                               double energy, Index user)
{
    return MomentModel{correlation_multi_user(channel, delta, energy, user),
                       covariance_multi_user(channel, delta, energy), energy};
}

MomentModel moments_single_user(const ChannelRealization &channel, const BindingVector &delta,
                                double energy)
{
    if (!channel.is_single_user())
        throw std::invalid_argument("moments_single_user: channel has more than one user");
    return moments_multi_user(channel, delta, energy, 0);
}

void write_moments_csv(std::ostream &out, const MomentModel &moments)
{
    out << "kind,row,col,value\n";
    for (Index n = 0; n < moments.r_rx.size(); ++n)
        out << "r_rx," << n << ",0," << format_complex(moments.r_rx(n)) << '\n';
    for (Index n = 0; n < moments.r_rr.rows(); ++n)
        for (Index m = 0; m < moments.r_rr.cols(); ++m)
            out << "r_rr," << n << ',' << m << ',' << format_complex(moments.r_rr(n, m)) << '\n';
}

} // namespace mixadc

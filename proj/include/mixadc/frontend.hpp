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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace mixadc {

/// Per-antenna ADC assignment: entry n is 1 when antenna n's I/Q rails use
/// high-resolution converters and 0 when they use one-bit converters.
class BindingVector
{
public:
    BindingVector() = default;
    explicit BindingVector(std::vector<std::uint8_t> delta);

    static BindingVector all_high(Index n);
    static BindingVector all_low(Index n);
    /// Ones at the given antenna indices, zeros elsewhere.
    static BindingVector from_indices(Index n, std::span<const Index> high);

    Index size() const noexcept { return static_cast<Index>(delta_.size()); }
    Index k_high() const noexcept { return k_high_; }
    bool high(Index n) const { return delta_.at(static_cast<std::size_t>(n)) != 0; }
    std::span<const std::uint8_t> entries() const noexcept { return delta_; }

    /// Antenna indices with high-resolution ADCs, ascending.
    std::vector<Index> high_indices() const;
    std::vector<Index> low_indices() const;

    friend bool operator==(const BindingVector &, const BindingVector &) = default;
    /// Lexicographic order on the 0/1 entries.
    friend auto operator<=>(const BindingVector &a, const BindingVector &b)
    {
        return a.delta_ <=> b.delta_;
    }

private:
    std::vector<std::uint8_t> delta_;
    Index k_high_ = 0;
};

std::ostream &operator<<(std::ostream &out, const BindingVector &delta);

/// Sign quantizer applied to I and Q independently, sgn(0) = +1.
cplx one_bit(cplx value) noexcept;

/// Receive-chain output: identity on high-resolution antennas, one-bit sign
/// quantizer on the others.
Eigen::VectorXcd quantize(const Eigen::VectorXcd &analog, const BindingVector &delta);

/// Second-order description of the quantized output r:
///   r_rx = E[r x*] (correlation with the user of interest),
///   r_rr = E[r r^H], built for per-user transmit energy `energy`.
struct MomentModel
{
    Eigen::VectorXcd r_rx;
    Eigen::MatrixXcd r_rr;
    double energy = 0.0;
};

MomentModel moments_single_user(const ChannelRealization &channel, const BindingVector &delta,
                                double energy);

/// Covariance of the multi-user quantized output. It does not depend on which
/// user is decoded, so one matrix (and one factorization) serves all users.
Eigen::MatrixXcd covariance_multi_user(const ChannelRealization &channel,
                                       const BindingVector &delta, double energy);

/// Correlation of the multi-user quantized output with user `user` (0-based).
Eigen::VectorXcd correlation_multi_user(const ChannelRealization &channel,
                                        const BindingVector &delta, double energy, Index user);

MomentModel moments_multi_user(const ChannelRealization &channel, const BindingVector &delta,
                               double energy, Index user);

/// Largest pre-clamp excess of an arcsine argument over 1 that is accepted as
/// rounding error.
inline constexpr double arcsine_slack = 1e-12;

/// Writes r_rx and r_rr as CSV: a header row "kind,row,col,value" and one
/// line per entry, values formatted as "re+imj".
void write_moments_csv(std::ostream &out, const MomentModel &moments);

} // namespace mixadc

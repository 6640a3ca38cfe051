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

#include <cstdint>
#include <iosfwd>

#include <Eigen/Dense>

namespace mixadc {

using Index = Eigen::Index;
using cplx = std::complex<double>;

/// Narrow-band channel between M single-antenna users and an N-antenna base
/// station, stored M x N: column n holds every user's gain at antenna n,
/// row j holds user j's gains across the array. Single-user channels have M = 1.
class ChannelRealization
{
public:
    explicit ChannelRealization(Eigen::MatrixXcd coefficients);

    static ChannelRealization single_user(const Eigen::VectorXcd &h);

    Index n_antennas() const noexcept { return coefficients_.cols(); }
    Index n_users() const noexcept { return coefficients_.rows(); }
    bool is_single_user() const noexcept { return n_users() == 1; }

    const Eigen::MatrixXcd &coefficients() const noexcept { return coefficients_; }

    /// Gains of all users at antenna n (length M).
    Eigen::VectorXcd antenna_column(Index n) const;

    /// Gains of user j across all antennas (length N).
    Eigen::VectorXcd user_row(Index j) const;

    /// The channel vector h of a single-user realization.
    Eigen::VectorXcd vector() const;

    /// Aggregate received power per antenna, ||h_n||^2 (|h_n|^2 for M = 1).
    Eigen::VectorXd antenna_powers() const;

private:
    Eigen::MatrixXcd coefficients_;
};

/// I.i.d. CN(0, 1) channel. Deterministic in `seed`.
ChannelRealization generate_rayleigh(Index n_antennas, Index n_users, std::uint64_t seed);

/// Rayleigh channel of Monte Carlo trial `trial` under master seed `seed`.
ChannelRealization generate_rayleigh_trial(Index n_antennas, Index n_users, std::uint64_t seed,
                                           std::uint64_t trial);

/// Linear SNR with noise variance fixed to one. For M users the total power
/// snr_d is split evenly, so per_user_energy * n_users == snr_d.
struct SnrSpec
{
    double snr_d = 1.0;
    double per_user_energy = 1.0;
    Index n_users = 1;

    static SnrSpec from_linear(double snr_d, Index n_users = 1);
};

SnrSpec snr_from_db(double snr_db, Index n_users = 1);

double db_to_linear(double db);

/// CSV with one row per user and one column per antenna; each cell is "re+imj".
void write_channel_csv(std::ostream &out, const ChannelRealization &channel);
ChannelRealization read_channel_csv(std::istream &in);

std::string format_complex(cplx value);
cplx parse_complex(const std::string &cell);

} // namespace mixadc

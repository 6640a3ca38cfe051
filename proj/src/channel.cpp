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


#include "mixadc/channel.hpp"

#include "mixadc/rng.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixadc {

ChannelRealization::ChannelRealization(Eigen::MatrixXcd coefficients)
    : coefficients_(std::move(coefficients))
{
    if (coefficients_.rows() < 1 || coefficients_.cols() < 1)
        throw std::invalid_argument("ChannelRealization: need at least one user and one antenna");
    if (!coefficients_.allFinite())
        throw std::invalid_argument("ChannelRealization: coefficients must be finite");
}

ChannelRealization ChannelRealization::single_user(const Eigen::VectorXcd &h)
{
    return ChannelRealization(Eigen::MatrixXcd(h.transpose()));
}

Eigen::VectorXcd ChannelRealization::antenna_column(Index n) const
{
    if (n < 0 || n >= n_antennas())
        throw std::out_of_range("antenna index out of range");
    return coefficients_.col(n);
}

Eigen::VectorXcd ChannelRealization::user_row(Index j) const
{
    if (j < 0 || j >= n_users())
        throw std::out_of_range("user index out of range");
    return coefficients_.row(j).transpose();
}

Eigen::VectorXcd ChannelRealization::vector() const
{
    if (!is_single_user())
        throw std::logic_error("ChannelRealization::vector() requires a single-user channel");
    return coefficients_.row(0).transpose();
}

Eigen::VectorXd ChannelRealization::antenna_powers() const
{
    return coefficients_.cwiseAbs2().colwise().sum().transpose();
}

ChannelRealization generate_rayleigh(Index n_antennas, Index n_users, std::uint64_t seed)
{
    if (n_antennas < 1 || n_users < 1)
        throw std::invalid_argument("generate_rayleigh: dimensions must be positive");

    Rng rng(seed);
    ComplexGaussian cn(1.0);
    Eigen::MatrixXcd h(n_users, n_antennas);
    // antenna-major fill order
    for (Index n = 0; n < n_antennas; ++n)
        for (Index j = 0; j < n_users; ++j)
            h(j, n) = cn(rng);
    return ChannelRealization(std::move(h));
}

ChannelRealization generate_rayleigh_trial(Index n_antennas, Index n_users, std::uint64_t seed,
                                           std::uint64_t trial)
{
    return generate_rayleigh(n_antennas, n_users, derive_seed(seed, StreamTag::channel, trial));
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

SnrSpec SnrSpec::from_linear(double snr_d, Index n_users)
{
    if (!(snr_d > 0.0) || !std::isfinite(snr_d))
        throw std::invalid_argument("SnrSpec: snr_d must be positive and finite");
    if (n_users < 1)
        throw std::invalid_argument("SnrSpec: n_users must be positive");
    return SnrSpec{snr_d, snr_d / static_cast<double>(n_users), n_users};
}

SnrSpec snr_from_db(double snr_db, Index n_users)
{
    return SnrSpec::from_linear(db_to_linear(snr_db), n_users);
}

std::string format_complex(cplx value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", value.real(), value.imag());
    return buf;
}

cplx parse_complex(const std::string &cell)
{
    const char *begin = cell.c_str();
    char *end = nullptr;
    const double re = std::strtod(begin, &end);
    if (end == begin)
        throw std::invalid_argument("bad complex cell: '" + cell + "'");
    const char *imag_begin = end;
    const double im = std::strtod(imag_begin, &end);
    if (end == imag_begin || *end != 'j' || end[1] != '\0')
        throw std::invalid_argument("bad complex cell: '" + cell + "'");
    return {re, im};
}

void write_channel_csv(std::ostream &out, const ChannelRealization &channel)
{
    const auto &h = channel.coefficients();
    for (Index j = 0; j < h.rows(); ++j)
    {
        for (Index n = 0; n < h.cols(); ++n)
        {
            if (n)
                out << ',';
            out << format_complex(h(j, n));
        }
        out << '\n';
    }
}

ChannelRealization read_channel_csv(std::istream &in)
{
    std::vector<std::vector<cplx>> rows;
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<cplx> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(parse_complex(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("channel CSV: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("channel CSV: no data");

    Eigen::MatrixXcd h(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index j = 0; j < h.rows(); ++j)
        for (Index n = 0; n < h.cols(); ++n)
            h(j, n) = rows[j][n];
    return ChannelRealization(std::move(h));
}

} // namespace mixadc

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

#include "mixadc/frontend.hpp"

#include <cstdint>

namespace mixadc {

/// Sample estimates of E[r x_j*] and E[r r^H]. Standard errors are reported per
/// entry and per rail: the real part of an `*_se` entry is the standard error
/// of the real part of the estimate, likewise for the imaginary part.
struct MomentEstimate
{
    Eigen::VectorXcd r_rx_hat;
    Eigen::MatrixXcd r_rr_hat;
    Eigen::VectorXcd r_rx_se;
    Eigen::MatrixXcd r_rr_se;
    std::uint64_t n_samples = 0;
};

/// Samples per independent random substream. Samples are generated in blocks
/// of this size so the estimate does not depend on the worker count.
inline constexpr std::uint64_t oracle_block_size = 1u << 16;

/// Draws x_i ~ CN(0, Es) for every user and unit-variance noise, quantizes the
/// received vector with `quantize`, and averages. Shares no moment formulas
/// with the closed-form front end.
MomentEstimate estimate_moments(const ChannelRealization &channel, const BindingVector &delta,
                                double energy, std::uint64_t n_samples, std::uint64_t seed,
                                Index user = 0);

struct KappaEstimate
{
    double kappa = 0.0;
    double standard_error = 0.0; ///< delta-method standard error
    std::uint64_t n_samples = 0;
};

/// Plug-in estimate |E[f* x]|^2 / (Es E[|f|^2]) with f = w^H r.
KappaEstimate estimate_kappa(const ChannelRealization &channel, const BindingVector &delta,
                             const Eigen::VectorXcd &combiner, double energy,
                             std::uint64_t n_samples, std::uint64_t seed, Index user = 0);

struct DecodeConfig
{
    double rate_nats = 0.0;
    Index codeword_length = 1;
    std::uint64_t n_trials = 1000;
    std::uint64_t seed = 1;
    double noise_variance = 1.0;
};

struct DecodeResult
{
    double error_rate = 0.0;
    std::uint64_t n_errors = 0;
    std::uint64_t n_trials = 0;
    std::uint64_t n_messages = 0;
};

inline constexpr std::uint64_t max_codebook_size = 1u << 16;

/// floor(exp(L * rate)); throws std::invalid_argument past max_codebook_size.
std::uint64_t codebook_size(double rate_nats, Index codeword_length);

/// Operational check of the GMI: each trial draws a fresh Gaussian codebook,
/// sends a random message over the single-user channel, combines with the
/// MMSE combiner, and decodes with the scaled minimum-distance rule
/// D(m) = (1/L) sum_l |xhat_l - a x_l(m)|^2 at a = a_opt. The combiner and
/// scaling come from the closed-form moments at unit noise variance.
DecodeResult nn_decode_experiment(const ChannelRealization &channel, const BindingVector &delta,
                                  double energy, const DecodeConfig &config);

} // namespace mixadc

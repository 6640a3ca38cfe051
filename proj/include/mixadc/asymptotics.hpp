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

#include <vector>

namespace mixadc {

/// Limiting form of the optimal-combiner effective SNR as Es -> infinity:
///
///   kappa / (1 - kappa) ~ ||p||^2 Es + 4 q^H B^{-1} q / (pi - 4 q^H B^{-1} q)
///
/// p holds the high-resolution gains, q the unit phasors of the one-bit
/// gains, and B the arcsine-law covariance of noiseless one-bit outputs.
struct HighSnrDecomposition
{
    Eigen::VectorXcd p;
    Eigen::VectorXcd q;
    Eigen::MatrixXcd b;
    std::vector<Index> high_antennas; ///< original indices behind p
    std::vector<Index> low_antennas;  ///< original indices behind q
    double quadratic_form = 0.0;      ///< q^H B^{-1} q
    double linear_coeff = 0.0;        ///< ||p||^2
    double constant_term = 0.0;
};

/// First-order coefficient of the GMI in Es:
/// sum_n (delta_n + (1 - delta_n) 2/pi) |h_n|^2.
double low_snr_slope(const ChannelRealization &channel, const BindingVector &delta);

/// Throws DegenerateConfiguration when a one-bit antenna has a zero gain, when
/// two one-bit phasors differ by a multiple of pi/2 (singular B), or when the
/// denominator pi - 4 q^H B^{-1} q falls below 1e-9.
HighSnrDecomposition high_snr_decomposition(const ChannelRealization &channel,
                                            const BindingVector &delta);

double gmi_low_snr_approx(const ChannelRealization &channel, const BindingVector &delta,
                          double energy);

/// log(1 + ||p||^2 Es + constant_term).
double gmi_high_snr_approx(const ChannelRealization &channel, const BindingVector &delta,
                           double energy);

} // namespace mixadc

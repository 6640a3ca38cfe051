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

#include <numbers>
#include <vector>

namespace mixadc {

/// Cholesky factorization of a Hermitian positive-definite covariance.
///
/// If the plain factorization fails, a ridge of 1e-10 * trace(R) / N is added
/// to the diagonal and the factorization retried once; `regularized()` then
/// reports true. A second failure throws SingularMatrix.
class HermitianFactor
{
public:
    explicit HermitianFactor(const Eigen::MatrixXcd &matrix);

    Eigen::VectorXcd solve(const Eigen::VectorXcd &rhs) const;

    /// log det of the factored matrix (including any ridge).
    double log_determinant() const;

    bool regularized() const noexcept { return ridge_ > 0.0; }
    double ridge() const noexcept { return ridge_; }
    Index size() const noexcept { return llt_.matrixLLT().rows(); }

private:
    Eigen::LLT<Eigen::MatrixXcd> llt_;
    double ridge_ = 0.0;
};

/// Rate of a linear-combining receiver with Gaussian codebook and scaled
/// nearest-neighbour decoding. Rates are in nats.
struct GmiResult
{
    double kappa = 0.0;         ///< squared input/output correlation coefficient, in [0, 1)
    double effective_snr = 0.0; ///< kappa / (1 - kappa)
    double gmi_nats = 0.0;      ///< -log(1 - kappa)
    Eigen::VectorXcd combiner;  ///< w
    cplx scaling;               ///< decoder scaling a = w^H r_rx / Es
    bool regularized = false;   ///< the covariance solve needed the ridge retry
};

/// Largest kappa overshoot past 1 tolerated as rounding before the moment
/// model is declared inconsistent.
inline constexpr double kappa_tolerance = 1e-9;

/// MMSE combiner w = R_rr^{-1} r_rx.
Eigen::VectorXcd optimal_combiner(const MomentModel &moments);

GmiResult gmi_from_moments(const MomentModel &moments);

/// Same as gmi_from_moments, with R_rr already factored.
GmiResult gmi_from_factor(const HermitianFactor &covariance, const Eigen::VectorXcd &r_rx,
                          double energy);

/// kappa(w) = |w^H r_rx|^2 / (Es w^H R_rr w) for an arbitrary non-zero combiner.
double kappa_for_combiner(const MomentModel &moments, const Eigen::VectorXcd &combiner);

/// GMI from kappa, -log(1 - kappa).
double gmi_from_kappa(double kappa);

GmiResult gmi_single_user(const ChannelRealization &channel, const BindingVector &delta,
                          const SnrSpec &snr);

/// GMI of user `user` (0-based) treating the other users as noise.
GmiResult gmi_multi_user(const ChannelRealization &channel, const BindingVector &delta,
                         const SnrSpec &snr, Index user);

/// Per-user GMI for every user of the realization, sharing one factorization.
std::vector<GmiResult> gmi_all_users(const ChannelRealization &channel, const BindingVector &delta,
                                     const SnrSpec &snr);

/// log(1 + ||h||^2 SNR_d): capacity without output quantization.
double capacity_full(const ChannelRealization &channel, const SnrSpec &snr);

/// log(1 + sum_n delta_n |h_n|^2 SNR_d): capacity when only the
/// high-resolution antennas are used.
double capacity_selection(const ChannelRealization &channel, const BindingVector &delta,
                          const SnrSpec &snr);

/// (1/M) log det(I + Es H H^H).
double per_user_capacity(const ChannelRealization &channel, const SnrSpec &snr);

inline double nats_to_bits(double nats) { return nats / std::numbers::ln2; }

} // namespace mixadc

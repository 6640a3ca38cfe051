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


#include "mixadc/gmi.hpp"

#include "mixadc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mixadc {

HermitianFactor::HermitianFactor(const Eigen::MatrixXcd &matrix)
{
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
        throw std::invalid_argument("HermitianFactor: matrix must be square and non-empty");

    llt_.compute(matrix);
    if (llt_.info() == Eigen::Success)
        return;

    const double n = static_cast<double>(matrix.rows());
    ridge_ = 1e-10 * matrix.diagonal().real().sum() / n;
    Eigen::MatrixXcd shifted = matrix;
    shifted.diagonal().array() += ridge_;
    llt_.compute(shifted);
    if (llt_.info() != Eigen::Success)
        throw SingularMatrix("covariance is not positive definite even with ridge " +
                             std::to_string(ridge_));
}

Eigen::VectorXcd HermitianFactor::solve(const Eigen::VectorXcd &rhs) const
{
    if (rhs.size() != size())
        throw std::invalid_argument("HermitianFactor::solve: dimension mismatch");
    return llt_.solve(rhs);
}

double HermitianFactor::log_determinant() const
{
    return 2.0 * llt_.matrixLLT().diagonal().real().array().log().sum();
}

double gmi_from_kappa(double kappa)
{
    return -std::log1p(-kappa);
}

GmiResult gmi_from_factor(const HermitianFactor &covariance, const Eigen::VectorXcd &r_rx,
                          double energy)
{
    if (!(energy > 0.0))
        throw std::invalid_argument("energy must be positive");

    GmiResult out;
    out.combiner = covariance.solve(r_rx);
    out.regularized = covariance.regularized();
    out.scaling = out.combiner.dot(r_rx) / energy;

    // r_rx^H R_rr^{-1} r_rx is real for Hermitian R_rr; drop the rounding residue.
    double kappa = out.scaling.real();
    if (kappa >= 1.0 + kappa_tolerance)
        throw InvariantViolation("kappa = " + std::to_string(kappa) + " exceeds 1");
    if (kappa >= 1.0)
        kappa = std::nextafter(1.0, 0.0);
    out.kappa = std::max(kappa, 0.0);
    out.effective_snr = out.kappa / (1.0 - out.kappa);
    out.gmi_nats = gmi_from_kappa(out.kappa);
    return out;
}

Eigen::VectorXcd optimal_combiner(const MomentModel &moments)
{
    return HermitianFactor(moments.r_rr).solve(moments.r_rx);
}

GmiResult gmi_from_moments(const MomentModel &moments)
{
    return gmi_from_factor(HermitianFactor(moments.r_rr), moments.r_rx, moments.energy);
}

double kappa_for_combiner(const MomentModel &moments, const Eigen::VectorXcd &combiner)
{
    if (combiner.size() != moments.r_rx.size())
        throw std::invalid_argument("kappa_for_combiner: dimension mismatch");
    if (combiner.squaredNorm() == 0.0)
        throw std::invalid_argument("kappa_for_combiner: combiner must be non-zero");

    const double numerator = std::norm(combiner.dot(moments.r_rx));
    const double denominator = moments.energy * combiner.dot(moments.r_rr * combiner).real();
    return numerator / denominator;
}

GmiResult gmi_single_user(const ChannelRealization &channel, const BindingVector &delta,
                          const SnrSpec &snr)
{
    return gmi_from_moments(moments_single_user(channel, delta, snr.per_user_energy));
}

GmiResult gmi_multi_user(const ChannelRealization &channel, const BindingVector &delta,
                         const SnrSpec &snr, Index user)
{
    return gmi_from_moments(moments_multi_user(channel, delta, snr.per_user_energy, user));
}

std::vector<GmiResult> gmi_all_users(const ChannelRealization &channel, const BindingVector &delta,
                                     const SnrSpec &snr)
{
    const double es = snr.per_user_energy;
    const HermitianFactor covariance(covariance_multi_user(channel, delta, es));
    std::vector<GmiResult> out;
    out.reserve(static_cast<std::size_t>(channel.n_users()));
    for (Index j = 0; j < channel.n_users(); ++j)
        out.push_back(gmi_from_factor(covariance, correlation_multi_user(channel, delta, es, j), es));
    return out;
}

double capacity_full(const ChannelRealization &channel, const SnrSpec &snr)
{
    return std::log1p(channel.coefficients().squaredNorm() * snr.snr_d);
}

double capacity_selection(const ChannelRealization &channel, const BindingVector &delta,
                          const SnrSpec &snr)
{
    if (delta.size() != channel.n_antennas())
        throw std::invalid_argument("capacity_selection: binding vector length mismatch");
    const Eigen::VectorXd powers = channel.antenna_powers();
    double gain = 0.0;
    for (Index n = 0; n < powers.size(); ++n)
        if (delta.high(n))
            gain += powers(n);
    return std::log1p(gain * snr.snr_d);
}

double per_user_capacity(const ChannelRealization &channel, const SnrSpec &snr)
{
    const auto &h = channel.coefficients();
    Eigen::MatrixXcd gram = snr.per_user_energy * (h * h.adjoint());
    gram.diagonal().array() += 1.0;
    return HermitianFactor(gram).log_determinant() / static_cast<double>(channel.n_users());
}

} // namespace mixadc

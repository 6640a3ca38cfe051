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


#include "mixadc/oracle.hpp"

#include "mixadc/gmi.hpp"
#include "mixadc/parallel.hpp"
#include "mixadc/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mixadc {

namespace {

// Draws one received vector y = H^T x + z, with x_user returned separately.
class ReceiveSampler
{
public:
    ReceiveSampler(const ChannelRealization &channel, double energy, double noise_variance,
                   Index user)
        : ht_(channel.coefficients().transpose()), x_(channel.n_users()), y_(channel.n_antennas()),
          signal_(energy), noise_(noise_variance), user_(user)
    {
    }

    const Eigen::VectorXcd &draw(Rng &rng)
    {
        for (Index j = 0; j < x_.size(); ++j)
            x_(j) = signal_(rng);
        y_.noalias() = ht_ * x_;
        for (Index n = 0; n < y_.size(); ++n)
            y_(n) += noise_(rng);
        return y_;
    }

    cplx user_symbol() const { return x_(user_); }

private:
    Eigen::MatrixXcd ht_;
    Eigen::VectorXcd x_;
    Eigen::VectorXcd y_;
    ComplexGaussian signal_;
    ComplexGaussian noise_;
    Index user_;
};

void check_oracle_inputs(const ChannelRealization &channel, const BindingVector &delta,
                         double energy, std::uint64_t n_samples, Index user)
{
    if (delta.size() != channel.n_antennas())
        throw std::invalid_argument("oracle: binding vector length mismatch");
    if (!(energy > 0.0))
        throw std::invalid_argument("oracle: energy must be positive");
    if (n_samples < 1000)
        throw std::invalid_argument("oracle: need at least 1000 samples");
    if (user < 0 || user >= channel.n_users())
        throw std::out_of_range("oracle: user index out of range");
}

std::uint64_t block_count(std::uint64_t n_samples)
{
    return (n_samples + oracle_block_size - 1) / oracle_block_size;
}

std::uint64_t block_length(std::uint64_t n_samples, std::uint64_t block)
{
    const std::uint64_t begin = block * oracle_block_size;
    return std::min(oracle_block_size, n_samples - begin);
}

// Per-rail first and second sums of complex samples.
struct RailSums
{
    Eigen::ArrayXXcd sum;
    Eigen::ArrayXXd sq_re;
    Eigen::ArrayXXd sq_im;

    RailSums(Index rows, Index cols)
        : sum(Eigen::ArrayXXcd::Zero(rows, cols)), sq_re(Eigen::ArrayXXd::Zero(rows, cols)),
          sq_im(Eigen::ArrayXXd::Zero(rows, cols))
    {
    }

    void add(Index r, Index c, cplx v)
    {
        sum(r, c) += v;
        sq_re(r, c) += v.real() * v.real();
        sq_im(r, c) += v.imag() * v.imag();
    }

    void merge(const RailSums &o)
    {
        sum += o.sum;
        sq_re += o.sq_re;
        sq_im += o.sq_im;
    }
};

double standard_error(double sum, double sum_sq, double n)
{
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1.0));
    return std::sqrt(var / n);
}

} // namespace

MomentEstimate estimate_moments(const ChannelRealization &channel, const BindingVector &delta,
                                double energy, std::uint64_t n_samples, std::uint64_t seed,
                                Index user)
{
    check_oracle_inputs(channel, delta, energy, n_samples, user);
    const Index n_ant = channel.n_antennas();
    const std::uint64_t n_blocks = block_count(n_samples);

    std::vector<RailSums> rx_blocks(n_blocks, RailSums(n_ant, 1));
    std::vector<RailSums> rr_blocks(n_blocks, RailSums(n_ant, n_ant));

    parallel_for(n_blocks, [&](std::size_t b) {
        Rng rng = make_stream(seed, StreamTag::samples, b);
        ReceiveSampler sampler(channel, energy, 1.0, user);
        RailSums &rx = rx_blocks[b];
        RailSums &rr = rr_blocks[b];
        const std::uint64_t len = block_length(n_samples, b);
        for (std::uint64_t s = 0; s < len; ++s)
        {
            const Eigen::VectorXcd r = quantize(sampler.draw(rng), delta);
            const cplx xc = std::conj(sampler.user_symbol());
            for (Index n = 0; n < n_ant; ++n)
            {
                rx.add(n, 0, r(n) * xc);
                for (Index m = n; m < n_ant; ++m)
                    rr.add(n, m, r(n) * std::conj(r(m)));
            }
        }
    });

    // fixed-order reduction
    RailSums rx(n_ant, 1), rr(n_ant, n_ant);
    for (std::uint64_t b = 0; b < n_blocks; ++b)
    {
        rx.merge(rx_blocks[b]);
        rr.merge(rr_blocks[b]);
    }

    const double n = static_cast<double>(n_samples);
    MomentEstimate out;
    out.n_samples = n_samples;
    out.r_rx_hat.resize(n_ant);
    out.r_rx_se.resize(n_ant);
    out.r_rr_hat.resize(n_ant, n_ant);
    out.r_rr_se.resize(n_ant, n_ant);
    for (Index i = 0; i < n_ant; ++i)
    {
        out.r_rx_hat(i) = rx.sum(i, 0) / n;
        out.r_rx_se(i) = {standard_error(rx.sum(i, 0).real(), rx.sq_re(i, 0), n),
                          standard_error(rx.sum(i, 0).imag(), rx.sq_im(i, 0), n)};
        for (Index m = i; m < n_ant; ++m)
        {
            const cplx mean = rr.sum(i, m) / n;
            const cplx se{standard_error(rr.sum(i, m).real(), rr.sq_re(i, m), n),
                          standard_error(rr.sum(i, m).imag(), rr.sq_im(i, m), n)};
            out.r_rr_hat(i, m) = mean;
            out.r_rr_hat(m, i) = std::conj(mean);
            out.r_rr_se(i, m) = se;
            out.r_rr_se(m, i) = se;
        }
        out.r_rr_hat(i, i).imag(0.0);
    }
    return out;
}

KappaEstimate estimate_kappa(const ChannelRealization &channel, const BindingVector &delta,
                             const Eigen::VectorXcd &combiner, double energy,
                             std::uint64_t n_samples, std::uint64_t seed, Index user)
{
    check_oracle_inputs(channel, delta, energy, n_samples, user);
    if (combiner.size() != channel.n_antennas())
        throw std::invalid_argument("estimate_kappa: combiner length mismatch");
    if (combiner.squaredNorm() == 0.0)
        throw std::invalid_argument("estimate_kappa: combiner must be non-zero");

    const std::uint64_t n_blocks = block_count(n_samples);

    // Both passes regenerate the same samples from the block substreams.
    auto for_each_sample = [&](auto &&visit) {
        parallel_for(n_blocks, [&](std::size_t b) {
            Rng rng = make_stream(seed, StreamTag::samples, b);
            ReceiveSampler sampler(channel, energy, 1.0, user);
            const std::uint64_t len = block_length(n_samples, b);
            for (std::uint64_t s = 0; s < len; ++s)
            {
                const cplx f = combiner.dot(quantize(sampler.draw(rng), delta));
                visit(b, std::conj(f) * sampler.user_symbol(), std::norm(f));
            }
        });
    };

    // Pass 1: A = mean(f* x), B = mean(|f|^2).
    std::vector<cplx> a_sum(n_blocks, 0.0);
    std::vector<double> b_sum(n_blocks, 0.0);
    for_each_sample([&](std::size_t b, cplx a, double bb) {
        a_sum[b] += a;
        b_sum[b] += bb;
    });
    cplx a_total = 0.0;
    double b_total = 0.0;
    for (std::uint64_t b = 0; b < n_blocks; ++b)
    {
        a_total += a_sum[b];
        b_total += b_sum[b];
    }
    const double n = static_cast<double>(n_samples);
    const cplx a_mean = a_total / n;
    const double b_mean = b_total / n;

    KappaEstimate out;
    out.n_samples = n_samples;
    out.kappa = std::norm(a_mean) / (energy * b_mean);

    // Pass 2: variance of the influence function of kappa = |A|^2 / (Es B),
    // psi = 2 Re(A* (a - A)) / (Es B) - |A|^2 (b - B) / (Es B^2).
    std::vector<double> psi_sq(n_blocks, 0.0);
    const double c_a = 2.0 / (energy * b_mean);
    const double c_b = std::norm(a_mean) / (energy * b_mean * b_mean);
    for_each_sample([&](std::size_t b, cplx a, double bb) {
        const double psi = c_a * (std::conj(a_mean) * (a - a_mean)).real() - c_b * (bb - b_mean);
        psi_sq[b] += psi * psi;
    });
    double psi_total = 0.0;
    for (const double v : psi_sq)
        psi_total += v;
    out.standard_error = std::sqrt(psi_total / (n - 1.0) / n);
    return out;
}

std::uint64_t codebook_size(double rate_nats, Index codeword_length)
{
    if (!(rate_nats >= 0.0) || codeword_length < 1)
        throw std::invalid_argument("codebook_size: need rate >= 0 and L >= 1");
    const double exponent = rate_nats * static_cast<double>(codeword_length);
    // Small slack so that rate = log(m) / L yields exactly m messages.
    const double count = std::floor(std::exp(exponent) * (1.0 + 1e-12));
    if (count > static_cast<double>(max_codebook_size))
        throw std::invalid_argument("codebook_size: exp(L * rate) exceeds the 2^16 message cap");
    return static_cast<std::uint64_t>(count);
}

DecodeResult nn_decode_experiment(const ChannelRealization &channel, const BindingVector &delta,
                                  double energy, const DecodeConfig &config)
{
    if (!channel.is_single_user())
        throw std::invalid_argument("nn_decode_experiment: single-user channel required");
    if (config.n_trials < 1)
        throw std::invalid_argument("nn_decode_experiment: need at least one trial");
    if (!(config.noise_variance >= 0.0))
        throw std::invalid_argument("nn_decode_experiment: noise variance must be non-negative");

    const std::uint64_t n_messages = codebook_size(config.rate_nats, config.codeword_length);
    const GmiResult design = gmi_from_moments(moments_single_user(channel, delta, energy));
    const Eigen::VectorXcd h = channel.vector();
    const Index len = config.codeword_length;
    const auto n_msg = static_cast<Index>(n_messages);

    std::vector<std::uint8_t> errors(config.n_trials, 0);
    parallel_for(config.n_trials, [&](std::size_t t) {
        Rng rng = make_stream(config.seed, StreamTag::codebook, t);
        ComplexGaussian symbol(energy);
        ComplexGaussian noise(config.noise_variance);

        Eigen::MatrixXcd codebook(n_msg, len);
        for (Index m = 0; m < n_msg; ++m)
            for (Index l = 0; l < len; ++l)
                codebook(m, l) = symbol(rng);
        const auto sent = static_cast<Index>(rng() % n_messages);

        Eigen::RowVectorXcd xhat(len);
        Eigen::VectorXcd y(h.size());
        for (Index l = 0; l < len; ++l)
        {
            const cplx x = codebook(sent, l);
            for (Index n = 0; n < h.size(); ++n)
                y(n) = h(n) * x + noise(rng);
            xhat(l) = design.combiner.dot(quantize(y, delta));
        }

        Index decoded = 0;
        double best = std::numeric_limits<double>::infinity();
        for (Index m = 0; m < n_msg; ++m)
        {
            const double d = (xhat - design.scaling * codebook.row(m)).squaredNorm();
            if (d < best)
            {
                best = d;
                decoded = m;
            }
        }
        errors[t] = decoded != sent;
    });

    DecodeResult out;
    out.n_trials = config.n_trials;
    out.n_messages = n_messages;
    for (const auto e : errors)
        out.n_errors += e;
    out.error_rate = static_cast<double>(out.n_errors) / static_cast<double>(out.n_trials);
    return out;
}

} // namespace mixadc

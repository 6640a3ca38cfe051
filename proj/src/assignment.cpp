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


#include "mixadc/assignment.hpp"

#include "mixadc/gmi.hpp"
#include "mixadc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mixadc {

namespace {

void check_budget(Index n, Index k)
{
    if (k < 0 || k > n)
        throw std::invalid_argument("ADC budget k must lie in [0, N]");
}

BindingVector top_k(const Eigen::VectorXd &score, Index k)
{
    check_budget(score.size(), k);
    std::vector<Index> order(static_cast<std::size_t>(score.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return score(a) > score(b); });
    return BindingVector::from_indices(score.size(), std::span(order).first(static_cast<std::size_t>(k)));
}

} // namespace

BindingVector strongest_k(const ChannelRealization &channel, Index k)
{
    if (!channel.is_single_user())
        throw std::invalid_argument("strongest_k: single-user channel required");
    return top_k(channel.antenna_powers(), k);
}

BindingVector scheme1_max_aggregate(const ChannelRealization &channel, Index k)
{
    return top_k(channel.antenna_powers(), k);
}

BindingVector scheme2_random(Index n_antennas, Index k, std::uint64_t seed)
{
    if (n_antennas < 1)
        throw std::invalid_argument("scheme2_random: need at least one antenna");
    check_budget(n_antennas, k);

    // Partial Fisher-Yates with an explicit index draw so the subset does not
    // depend on the standard library's shuffle implementation.
    Rng rng(seed);
    std::vector<Index> idx(static_cast<std::size_t>(n_antennas));
    std::iota(idx.begin(), idx.end(), Index{0});
    for (Index i = 0; i < k; ++i)
    {
        const auto span = static_cast<std::uint64_t>(n_antennas - i);
        const auto j = i + static_cast<Index>(rng() % span);
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    return BindingVector::from_indices(n_antennas, std::span(idx).first(static_cast<std::size_t>(k)));
}

double assignment_objective(const ChannelRealization &channel, const BindingVector &delta,
                            double energy, Objective objective, Index user)
{
    switch (objective)
    {
    case Objective::single_user:
        return gmi_from_moments(moments_single_user(channel, delta, energy)).gmi_nats;
    case Objective::user:
        return gmi_from_moments(moments_multi_user(channel, delta, energy, user)).gmi_nats;
    case Objective::sum:
    {
        const SnrSpec snr{energy * static_cast<double>(channel.n_users()), energy, channel.n_users()};
        double total = 0.0;
        for (const auto &r : gmi_all_users(channel, delta, snr))
            total += r.gmi_nats;
        return total;
    }
    }
    throw std::invalid_argument("unknown objective");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
    {
        r = r * (n - k + i) / i;
        if (r > exhaustive_subset_cap * 1000)
            return r; // already far past any cap we enforce
    }
    return r;
}

BindingVector exhaustive_best(const ChannelRealization &channel, Index k, double energy,
                              Objective objective, Index user)
{
    const Index n = channel.n_antennas();
    check_budget(n, k);
    if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > exhaustive_subset_cap)
        throw std::invalid_argument("exhaustive_best: too many subsets to enumerate");

    // Enumerate subsets as 0/1 masks via prev_permutation, which walks the
    // masks in descending lexicographic order starting from 1..10..0.
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
    std::fill_n(mask.begin(), k, std::uint8_t{1});

    BindingVector best;
    double best_value = -1.0;
    do
    {
        BindingVector candidate(mask);
        const double value = assignment_objective(channel, candidate, energy, objective, user);
        const double tie = exhaustive_tie_tolerance * std::max(1.0, std::abs(best_value));
        if (value > best_value + tie || (std::abs(value - best_value) <= tie && candidate < best))
        {
            best = std::move(candidate);
            best_value = value;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return best;
}

} // namespace mixadc

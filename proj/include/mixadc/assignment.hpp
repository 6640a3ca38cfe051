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

/// High-resolution ADCs on the k antennas with the largest |h_n|^2.
/// Ties go to the lower antenna index.
BindingVector strongest_k(const ChannelRealization &channel, Index k);

/// Multi-user "Scheme #1": the k antennas with the largest aggregate power
/// sum_j |h_jn|^2, ties to the lower index.
BindingVector scheme1_max_aggregate(const ChannelRealization &channel, Index k);

/// Multi-user "Scheme #2": a uniformly random k-subset of the n antennas.
BindingVector scheme2_random(Index n_antennas, Index k, std::uint64_t seed);

enum class Objective
{
    single_user, ///< GMI of the single user
    user,        ///< GMI of one user, others treated as noise
    sum,         ///< sum of the per-user GMIs
};

/// Value of `objective` for assignment `delta`, with per-user energy `energy`.
double assignment_objective(const ChannelRealization &channel, const BindingVector &delta,
                            double energy, Objective objective, Index user = 0);

/// Largest number of subsets exhaustive_best will enumerate.
inline constexpr std::uint64_t exhaustive_subset_cap = 100000;

/// Objective values closer than this (relative) count as tied.
inline constexpr double exhaustive_tie_tolerance = 1e-12;

/// Brute-force maximiser of `objective` over all C(N, k) assignments. Ties
/// resolve to the lexicographically smallest binding vector. Throws
/// std::invalid_argument when C(N, k) exceeds exhaustive_subset_cap.
BindingVector exhaustive_best(const ChannelRealization &channel, Index k, double energy,
                              Objective objective, Index user = 0);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace mixadc

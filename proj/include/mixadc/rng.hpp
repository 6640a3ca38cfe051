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

#include <complex>
#include <cstdint>
#include <random>

namespace mixadc {

using Rng = std::mt19937_64;

/// Stream tags keep the random streams of unrelated consumers apart even when
/// they share a master seed and trial index.
enum class StreamTag : std::uint64_t
{
    channel = 0x43484e4c,
    assignment = 0x41535347,
    samples = 0x534d504c,
    codebook = 0x434f4442,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of substream (master, tag, index). A pure function, so trial t draws
/// the same numbers regardless of which worker runs it or in which order.
std::uint64_t derive_seed(std::uint64_t master, StreamTag tag, std::uint64_t index) noexcept;

Rng make_stream(std::uint64_t master, StreamTag tag, std::uint64_t index);

/// Circularly symmetric complex Gaussian sampler, variance split evenly
/// between the real and imaginary parts.
class ComplexGaussian
{
public:
    explicit ComplexGaussian(double variance = 1.0);

    std::complex<double> operator()(Rng &rng);

private:
    std::normal_distribution<double> normal_;
};

} // namespace mixadc

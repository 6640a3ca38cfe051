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


#include "mixadc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mixadc {

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, StreamTag tag, std::uint64_t index) noexcept
{
    std::uint64_t s = mix64(master);
    s = mix64(s ^ static_cast<std::uint64_t>(tag));
    return mix64(s ^ index);
}

Rng make_stream(std::uint64_t master, StreamTag tag, std::uint64_t index)
{
    return Rng(derive_seed(master, tag, index));
}

ComplexGaussian::ComplexGaussian(double variance)
    : normal_(0.0, std::sqrt(variance / 2.0))
{
    if (!(variance >= 0.0))
        throw std::invalid_argument("ComplexGaussian: variance must be non-negative");
}

std::complex<double> ComplexGaussian::operator()(Rng &rng)
{
    const double re = normal_(rng);
    const double im = normal_(rng);
    return {re, im};
}

} // namespace mixadc

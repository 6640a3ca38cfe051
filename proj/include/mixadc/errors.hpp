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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixadc {

/// A computed quantity broke an invariant that holds analytically, e.g. an
/// arcsine argument outside [-1, 1] or kappa >= 1. Signals a modelling bug.
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Hermitian positive-definite factorization failed even after regularization.
class SingularMatrix : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Configuration for which a closed form is undefined (coincident one-bit
/// phases, zero one-bit channel gain). Carries the offending antenna pair.
class DegenerateConfiguration : public std::runtime_error
{
public:
    DegenerateConfiguration(const std::string &what, std::size_t first, std::size_t second)
        : std::runtime_error(what), first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

} // namespace mixadc

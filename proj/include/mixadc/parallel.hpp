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
#include <functional>

namespace mixadc {

/// Worker count from MIXADC_WORKERS, falling back to the hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Each index must
/// write only to its own output slot; the first exception thrown is rethrown
/// after all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body,
                  std::size_t workers = worker_count());

} // namespace mixadc

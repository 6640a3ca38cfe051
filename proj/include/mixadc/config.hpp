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

#include "mixadc/experiment.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mixadc {

/// Applies one `key = value` setting. Keys match the CLI flag names
/// (n-antennas, n-users, k, snr-db, users, trials, seed, scheme, out,
/// scenario, all-users, perturb-rr); underscores are accepted for dashes.
/// Throws std::invalid_argument on unknown keys or malformed values.
void apply_setting(ExperimentConfig &config, std::string_view key, std::string_view value);

/// Reads a flat key/value file. Blank lines and '#' comments are ignored.
void load_config(ExperimentConfig &config, std::istream &in);

/// "a,b,c" or an inclusive range "start:stop:step".
std::vector<double> parse_real_list(std::string_view text);
std::vector<Index> parse_index_list(std::string_view text);

} // namespace mixadc

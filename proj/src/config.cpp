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


#include "mixadc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>

namespace mixadc {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key)
{
    std::string out(trim(key));
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

double parse_real(std::string_view text)
{
    const std::string s(trim(text));
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(s, &used);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw std::invalid_argument("expected a number, got '" + s + "'");
    return v;
}

template <typename Int>
Int parse_int(std::string_view text)
{
    const std::string_view s = trim(text);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

bool parse_bool(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s == "1" || s == "true" || s == "yes" || s == "on")
        return true;
    if (s == "0" || s == "false" || s == "no" || s == "off")
        return false;
    throw std::invalid_argument("expected a boolean, got '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

std::vector<double> parse_real_list(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("empty list");

    if (text.find(':') != std::string_view::npos)
    {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("range must be start:stop:step");
        const double start = parse_real(parts[0]), stop = parse_real(parts[1]), step = parse_real(parts[2]);
        if (!(step > 0.0) || stop < start)
            throw std::invalid_argument("range needs step > 0 and stop >= start");
        std::vector<double> out;
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        for (long i = 0; i <= count; ++i)
            out.push_back(start + static_cast<double>(i) * step);
        return out;
    }

    std::vector<double> out;
    for (const auto part : split(text, ','))
        out.push_back(parse_real(part));
    return out;
}

std::vector<Index> parse_index_list(std::string_view text)
{
    std::vector<Index> out;
    for (const double v : parse_real_list(text))
    {
        if (v != std::floor(v))
            throw std::invalid_argument("expected integers in list");
        out.push_back(static_cast<Index>(v));
    }
    return out;
}

void apply_setting(ExperimentConfig &config, std::string_view raw_key, std::string_view value)
{
    const std::string key = normalize_key(raw_key);
    if (key == "scenario")
        config.scenario = parse_scenario(trim(value));
    else if (key == "n-antennas")
        config.n_antennas = parse_int<Index>(value);
    else if (key == "n-users")
        config.n_users = parse_int<Index>(value);
    else if (key == "k")
        config.k_values = parse_index_list(value);
    else if (key == "snr-db")
        config.snr_db_grid = parse_real_list(value);
    else if (key == "users")
        config.user_counts = parse_index_list(value);
    else if (key == "trials")
        config.n_realizations = parse_int<std::uint64_t>(value);
    else if (key == "seed")
        config.seed = parse_int<std::uint64_t>(value);
    else if (key == "scheme")
        config.assignment = parse_scheme(trim(value));
    else if (key == "out")
        config.output_path = std::string(trim(value));
    else if (key == "all-users")
        config.all_users = parse_bool(value);
    else if (key == "perturb-rr")
        config.perturb_rr = parse_real(value);
    else
        throw std::invalid_argument("unknown configuration key '" + key + "'");
}

void load_config(ExperimentConfig &config, std::istream &in)
{
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        try
        {
            apply_setting(config, view.substr(0, eq), view.substr(eq + 1));
        }
        catch (const std::invalid_argument &e)
        {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

} // namespace mixadc

// SPDX-License-Identifier: Apache-2.0
//
// mimo-adhoc: outage and transmission capacity of MIMO-MMSE ad hoc networks
// Copyright (C) 2026 The mimo-adhoc authors
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

// Default parameter sets of the three figure commands.
//   outage vs density:          n_r = 4, alpha = 4.6, z = 0 dB,  gamma = 20 dB, d0 = 1
//   capacity vs outage target:  n_r = 4, alpha = 4.5, z = 10 dB, high SNR,      d0 = 1
//   capacity vs path loss:      n_r = 4, z = 15 dB, high SNR, d0 = 1, epsilon = 0.001

#pragma once

#include "mimo_adhoc/analytic.hpp"

#include <cmath>

namespace mimo_adhoc {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace presets {

inline constexpr int kReceiveAntennas = 4;
inline constexpr int kStreamCounts[] = {1, 2, 4};

inline constexpr double kOutageAlpha = 4.6;
inline constexpr double kOutageZdB = 0.0;
inline constexpr double kOutageGammaDb = 20.0;

inline constexpr double kCapacityAlpha = 4.5;
inline constexpr double kCapacityZdB = 10.0;

inline constexpr double kPathLossZdB = 15.0;
inline constexpr double kPathLossEpsilon = 1e-3;

inline LinkConfig outage_link(int n_t)
{
    return {n_t, kReceiveAntennas, db_to_linear(kOutageZdB), db_to_linear(kOutageGammaDb), 1.0};
}

inline LinkConfig capacity_link(int n_t)
{
    return {n_t, kReceiveAntennas, db_to_linear(kCapacityZdB), kInfiniteSnr, 1.0};
}

inline LinkConfig path_loss_link(int n_t)
{
    return {n_t, kReceiveAntennas, db_to_linear(kPathLossZdB), kInfiniteSnr, 1.0};
}

}  // namespace presets
}  // namespace mimo_adhoc

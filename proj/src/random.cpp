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

#include "mimo_adhoc/random.hpp"

namespace mimo_adhoc {

namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t index, std::uint64_t lane)
{
    return RandomStream(mix(mix(mix(seed) ^ index) ^ (lane * 0xd1b54a32d192ed03ULL)));
}

Eigen::VectorXcd sample_complex_gaussian(RandomStream& rng, Eigen::Index n)
{
    Eigen::VectorXcd out(n);
    for (Eigen::Index i = 0; i < n; ++i)
        out[i] = rng.complex_gaussian();
    return out;
}

}  // namespace mimo_adhoc
